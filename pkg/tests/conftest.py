import os
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

from qpbw import catalog  # noqa: E402

DATA = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture
def weyl():
    return catalog.make_quantized_weyl()


@pytest.fixture
def uq():
    return catalog.make_uq_sl2()


@pytest.fixture
def qplane():
    return catalog.CATALOG["quantum_plane"].build()


@pytest.fixture
def tail3():
    return catalog.make_tail3()


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Records one PASS/FAIL line for an acceptance criterion."""
    record = {"detail": ""}
    yield record
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {request.node.name}  {record['detail']}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

import io
import json
import os
from contextlib import redirect_stderr, redirect_stdout
from importlib import resources

import pytest

from qpbw import catalog
from qpbw.cli import main

from conftest import DATA

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")
REGEN = os.environ.get("QPBW_REGEN_GOLDEN") == "1"


def alg(name):
    return str(resources.files("qpbw.data").joinpath(f"{name}.alg"))


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def golden_cases():
    cases = []
    for name in sorted(catalog.CATALOG):
        cases.append((f"refilter_{name}", ["refilter", alg(name)]))
        cases.append((f"check_{name}", ["check", alg(name)]))
        cases.append((f"count_{name}", ["count", alg(name), "--max-degree", "8"]))
        cases.append((f"gkdim_{name}", ["gkdim", alg(name)]))
    for name in ("quantum_plane", "qaffine3", "qaffine3_two_param"):
        cases.append((f"koszul_{name}", ["koszul", alg(name), "--vars", "1,2"]))
    cases.append(("normalize_weyl", ["normalize", alg("weyl"), "--expr", "x2*x1^2"]))
    cases.append(("catalog", ["catalog"]))
    return cases


@pytest.mark.parametrize("label, argv", golden_cases(), ids=[c[0] for c in golden_cases()])
def test_golden_report(label, argv):
    code, first, _ = run(*argv)
    _, second, _ = run(*argv)
    assert code == 0
    assert first == second
    path = os.path.join(GOLDEN, label + ".json")
    if REGEN:
        os.makedirs(GOLDEN, exist_ok=True)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(first)
    with open(path, encoding="utf-8") as fh:
        assert fh.read() == first


def test_refilter_weyl_report():
    code, out, _ = run("refilter", alg("weyl"))
    rep = json.loads(out)
    assert code == 0 and rep["outcome"] == "ok" and rep["command"] == "refilter"
    p = rep["payload"]
    assert p["w"] == [1, 1]
    assert p["c_set"] == [{"vector": [-1, -1], "margin": -2,
                           "provenance": [{"relation": [2, 1], "term": [0, 0]}]}]
    assert p["graded"]["relations"] == ["x2*x1 = q*x1*x2"]
    assert rep["input"]["file"] == "weyl.alg" and len(rep["input"]["sha256"]) == 64


def test_koszul_report():
    code, out, _ = run("koszul", alg("qaffine3"), "--vars", "1,2")
    p = json.loads(out)["payload"]
    assert code == 0
    assert p["grade"] == 2 and p["module_gkdim"] == 1 and p["cm_balance"] == "2 + 1 = 3"
    assert p["cm_ok"] and p["complex_verified"] and p["ranks"] == [1, 2, 1]


def test_check_corrupted_fails():
    code, out, err = run("check", os.path.join(DATA, "corrupted.alg"))
    rep = json.loads(out)
    assert code == 1 and "check failed" in err
    assoc = rep["payload"]["associativity"]
    assert not assoc["ok"] and assoc["counterexample"]["difference"]


def test_normalize_and_ideal():
    _, out, _ = run("normalize", alg("weyl"), "--expr", "x2*x1")
    assert json.loads(out)["payload"]["normal_form"] == "q*x1*x2 + 1"
    _, out, _ = run("gkdim", alg("qaffine3"), "--ideal", "x1*x2")
    assert json.loads(out)["payload"]["gkdim"] == 2
    _, out, _ = run("gkdim", alg("qaffine3"), "--ideal", "1")
    assert json.loads(out)["payload"]["gkdim"] == "-inf"


def test_count_and_gkdim_mixed():
    _, out, _ = run("count", alg("laurent1"), "--max-degree", "3")
    assert json.loads(out)["payload"]["counts"] == [1, 3, 5, 7]
    _, out, _ = run("gkdim", alg("uq_sl2"))
    p = json.loads(out)["payload"]
    assert p["gkdim"] == 3 and isinstance(p["raw"], str)


def test_catalog_text():
    code, out, _ = run("catalog", "weyl", "--text")
    assert code == 0 and out == catalog.get("weyl").file_text()


@pytest.mark.parametrize("argv, needle", [
    (["refilter", "/nonexistent.alg"], "error"),
    (["normalize", alg("weyl"), "--expr", "x1 +"], "parse error"),
    (["koszul", alg("weyl"), "--vars", "1"], "tail-free"),
    (["koszul", alg("qaffine3"), "--vars", "4"], "out of range"),
    (["koszul", alg("mixed_torus3"), "--vars", "2"], "inverted"),
    (["catalog", "nope"], "unknown catalog entry"),
])
def test_errors_exit_2(argv, needle):
    code, out, err = run(*argv)
    assert code == 2 and out == "" and needle in err


def test_refilter_infeasible(tmp_path):
    f = tmp_path / "bad.alg"
    f.write_text("algebra bad\ncoeffs field q\nvars x1 x2 x3\nrel[2,1] = x1^2\nrel[3,2] = x2*x3^2\n")
    code, out, _ = run("refilter", str(f))
    rep = json.loads(out)
    assert code == 1 and rep["outcome"] == "fail"
    assert rep["payload"]["farkas"] is not None

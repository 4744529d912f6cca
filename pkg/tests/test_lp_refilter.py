import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import fm_free
from qpbw import catalog, lp
from qpbw.orders import dot
from qpbw.pbw import padd, random_poly
from qpbw.refilter import (CSet, Infeasible, WeightCertificate, associated_graded,
                           collect_c_set, filtration_degree, find_weight_vector, leading_form,
                           refilter_pipeline, verify_certificate, verify_farkas)
from qpbw.scalars import Laurent, Q


def cset(*vs):
    return CSet(len(vs[0]) if vs else 2, list(vs), {})


def poly(d, t=0):
    return {e: Laurent.constant(t, c) for e, c in d.items()}


def test_linprog_small():
    # min x + y with x + y >= 2, x <= 3
    res = lp.linprog_exact([1, 1], [[-1, -1], [1, 0]], [-2, 3])
    assert res.status == lp.OPTIMAL and res.value == 2
    assert lp.linprog_exact([-1, 0], [[0, 1]], [1]).status == lp.UNBOUNDED
    assert lp.linprog_exact([0], [[1], [-1]], [-1, -1]).status == lp.INFEASIBLE


def test_linprog_equality():
    res = lp.linprog_exact([1, 2], [], [], [[1, 1]], [Fraction(3, 2)])
    assert res.status == lp.OPTIMAL and res.x == [Fraction(3, 2), 0]


def test_collect_examples(qplane, weyl, tail3):
    assert collect_c_set(qplane).vectors == []
    assert collect_c_set(weyl).vectors == [(-1, -1)]
    C = collect_c_set(tail3)
    assert C.vectors == [(-1, 2, -1)]
    assert C.provenance[(-1, 2, -1)] == [{"relation": (3, 1), "term": (0, 2, 0)}]


def test_weight_vector_examples():
    assert find_weight_vector(CSet(3, [], {})).w == (1, 1, 1)
    cert = find_weight_vector(cset((-1, -1)))
    assert cert.w == (1, 1) and cert.margins == {(-1, -1): -2}
    cert = find_weight_vector(cset((-1, 2, -1)))
    assert verify_certificate(cset((-1, 2, -1)), cert)
    assert cert.margins[(-1, 2, -1)] <= -1


def test_infeasible_with_farkas():
    C = cset((1, -1), (-1, 1))
    with pytest.raises(Infeasible) as info:
        find_weight_vector(C)
    assert info.value.farkas == (1, 1)
    assert verify_farkas(C, info.value.farkas)


@pytest.mark.parametrize("vectors, w, expected", [
    ([(-1, -1)], (1, 1), True),
    ([(-1, -1)], (0, 1), False),
    ([(-1, 2, -1)], (1, 1, 1), False),
    ([(-1, 2, -1)], (2, 1, 2), True),
])
def test_verify_certificate_examples(vectors, w, expected):
    assert verify_certificate(cset(*vectors), WeightCertificate(w, {})) is expected


vectors = st.lists(st.integers(-5, 5), min_size=3, max_size=3).map(tuple).filter(any)


@given(st.lists(vectors, min_size=1, max_size=5, unique=True))
def test_lp_agrees_with_fourier_motzkin(vs):
    C = CSet(3, vs, {})
    # w_i >= 1 and <w, a> <= -1
    A = [list(a) for a in vs] + [[-int(i == j) for j in range(3)] for i in range(3)]
    b = [-1] * len(vs) + [-1] * 3
    feasible = fm_free(A, b)
    assert lp.fourier_motzkin_feasible(A, b) == feasible
    try:
        cert = find_weight_vector(C)
    except Infeasible as exc:
        assert not feasible
        assert verify_farkas(C, exc.farkas)
    else:
        assert feasible
        assert verify_certificate(C, cert)
        assert all(m == dot(cert.w, a) for a, m in cert.margins.items())


@pytest.mark.parametrize("w, f, expected", [
    ((1, 1), {(1, 1): 1, (0, 0): 1}, 2),
    ((2, 3), {(2, 0): 1, (0, 1): 1}, 4),
    ((1, 1), {(0, 0): 7}, 0),
])
def test_filtration_degree(w, f, expected):
    assert filtration_degree(w, poly(f)) == expected


def test_filtration_degree_zero():
    with pytest.raises(ValueError):
        filtration_degree((1, 1), {})


def test_leading_form_examples():
    f = {(1, 1): Laurent.constant(0, Q), (0, 0): Laurent.constant(0, 1)}
    assert leading_form((1, 1), f) == {(1, 1): Laurent.constant(0, Q)}
    g = poly({(3, 0): 1, (0, 2): 1})
    assert leading_form((2, 3), g) == g
    h = poly({(2, 0): 1, (1, 1): 3})
    assert leading_form((1, 1), h) == h


def test_associated_graded_examples(weyl, uq, qplane):
    gr = associated_graded(weyl, WeightLex11)
    assert gr.presentation.tails == {} and gr.degrees == (1, 1)
    assert gr.presentation.q == weyl.q
    gu = associated_graded(uq, WeightLex11)
    assert gu.presentation.tails == {} and gu.presentation.sigma == uq.sigma
    assert gu.presentation.q[1, 0] == Laurent.constant(1, 1)
    assert associated_graded(qplane, WeightCertificate((3, 5), {})).presentation == qplane


WeightLex11 = WeightCertificate((1, 1), {})


def test_associated_graded_rejects_bad_certificate(weyl):
    with pytest.raises(ValueError):
        associated_graded(weyl, WeightCertificate((0, 1), {}))


@pytest.mark.parametrize("name", sorted(catalog.CATALOG))
def test_pipeline_matches_catalog(name):
    entry = catalog.get(name)
    rep = refilter_pipeline(entry.build())
    assert rep.certificate.w == entry.expected_w
    assert rep.condition_ok
    assert rep.graded.presentation == entry.graded()
    w = rep.graded.degrees
    for (j, i), tail in entry.build().tails.items():
        assert all(dot(w, g) < w[i] + w[j] for g in tail)


@pytest.mark.parametrize("name", ["weyl", "uq_sl2", "tail3"])
def test_leading_form_multiplicative(name):
    A = catalog.get(name).build()
    rep = refilter_pipeline(A)
    gr, w = rep.graded.presentation, rep.certificate.w
    rng = random.Random(7)
    for _ in range(20):
        f, g = random_poly(A, rng, 4), random_poly(A, rng, 4)
        fg = A.multiply(f, g)
        assert leading_form(w, fg) == gr.multiply(leading_form(w, f), leading_form(w, g))
        assert filtration_degree(w, fg) == filtration_degree(w, f) + filtration_degree(w, g)
        assert filtration_degree(w, padd(f, g)) <= max(filtration_degree(w, f),
                                                       filtration_degree(w, g))

import itertools
import os
import random

import pytest

from oracles import gaussian_binomial
from qpbw import catalog
from qpbw.orders import Lex, MatrixLex, WeightLex, add
from qpbw.pbw import (AlgebraPresentation, InconsistentPresentation, associativity_check,
                      check_condition_iii, mdeg, padd, poly_str, random_poly)
from qpbw.scalars import Laurent, Q, Scalar
from qpbw.syntax import parse_poly, parse_presentation

from conftest import DATA

q = Q
I2 = ((1, 0), (0, 1))


def const(A, c):
    return Laurent.constant(A.t, c)


def test_quantum_plane_swap(qplane):
    assert qplane.multiply(qplane.var(1), qplane.var(0)) == {(1, 1): const(qplane, q)}


def test_weyl_swap(weyl):
    assert weyl.multiply(weyl.var(1), weyl.var(0)) == {(1, 1): const(weyl, q), (0, 0): const(weyl, 1)}


def test_weyl_higher_power(weyl):
    f = weyl.multiply(weyl.var(1), weyl.monomial((2, 0)))
    assert f == {(2, 1): const(weyl, q ** 2), (1, 0): const(weyl, q + 1)}


def test_square_of_sum(qplane):
    s = padd(qplane.var(0), qplane.var(1))
    assert poly_str(qplane, qplane.multiply(s, s)) == "x2^2 + (q + 1)*x1*x2 + x1^2"


def test_uq_sl2_ef(uq):
    F, E = uq.var(0), uq.var(1)
    assert poly_str(uq, uq.multiply(E, F)) == "F*E + (q/(q^2 - 1))*K + (-q/(q^2 - 1))*K^-1"
    K = Laurent.var(1, 0)
    tail = (K - K.inv()) / (q - q.inv())
    assert uq.multiply(E, F) == {(1, 1): const(uq, 1), (0, 0): tail}


def test_uq_sl2_coefficient_commutation(uq):
    F, E, K = uq.var(0), uq.var(1), uq.coeff_var(0)
    Kl = Laurent.var(1, 0)
    assert uq.multiply(F, K) == {(1, 0): q ** 2 * Kl}
    assert uq.multiply(E, K) == {(0, 1): q ** -2 * Kl}
    assert uq.multiply(E, uq.coeff_var(0, -1)) == {(0, 1): q ** 2 * Kl.inv()}


@pytest.mark.parametrize("f, M, order, expected", [
    ({(1, 1): 1, (1, 0): 1}, I2, Lex(), (1, 1)),
    ({(0, 0): 5}, I2, Lex(), (0, 0)),
    ({(2, 0): 1, (0, 1): 1}, ((1, 1), (1, 2)), Lex(), (2, 2)),
])
def test_mdeg_examples(f, M, order, expected):
    f = {e: Laurent.constant(0, c) for e, c in f.items()}
    assert mdeg(MatrixLex(M, order), f) == expected


def test_mdeg_zero():
    with pytest.raises(ValueError):
        mdeg(MatrixLex(I2), {})


def test_condition_iii(weyl, tail3):
    assert check_condition_iii(weyl, WeightLex((1, 1))).ok
    assert check_condition_iii(tail3, WeightLex((2, 1, 2))).ok
    rep = check_condition_iii(tail3, WeightLex((1, 3, 1)))
    assert not rep.ok
    assert [(v["relation"], v["exponent"]) for v in rep.violations] == [((3, 1), (0, 2, 0))]


@pytest.mark.parametrize("name", sorted(catalog.CATALOG))
def test_catalog_associative(name):
    A = catalog.get(name).build()
    rep = associativity_check(A, trials=20, seed=1)
    assert rep.ok, rep.counterexample


def test_corrupted_file_fails():
    with open(os.path.join(DATA, "corrupted.alg")) as fh:
        A = parse_presentation(fh.read())
    rep = associativity_check(A, trials=0)
    assert not rep.ok
    assert rep.counterexample["label"] == ["x3", "x2", "x1"]
    assert rep.counterexample["difference"] == "(q^2 - 1)*x3 + (-q^2 + 1)*x1"


def test_brute_force_finds_inconsistent_tails():
    # constant or single-variable tails on 3 q-commuting variables
    choices = [None, {(0, 0, 0): 1}, {(1, 0, 0): 1}, {(0, 1, 0): 1}, {(0, 0, 1): 1}]
    pairs = [(1, 0), (2, 0), (2, 1)]
    bad = 0
    for picks in itertools.product(choices, repeat=3):
        tails = {p: t for p, t in zip(pairs, picks) if t}
        A = AlgebraPresentation(["x1", "x2", "x3"], q={p: q for p in pairs}, tails=tails)
        if not check_condition_iii(A, WeightLex((1, 1, 1))).ok:
            continue
        if not associativity_check(A, trials=0).ok:
            bad += 1
    assert bad > 0


def test_q_binomial_expansion(qplane):
    s = padd(qplane.var(0), qplane.var(1))
    f = qplane.power(s, 5)
    for k in range(6):
        c = f[(k, 5 - k)].scalar()
        assert c == Scalar(gaussian_binomial(5, k))


def test_bilinear(weyl, uq, tail3):
    rng = random.Random(3)
    for A in (weyl, uq, tail3):
        for _ in range(10):
            f, g, h = (random_poly(A, rng, 3) for _ in range(3))
            assert A.multiply(f, padd(g, h)) == padd(A.multiply(f, g), A.multiply(f, h))
            assert A.multiply(padd(f, g), h) == padd(A.multiply(f, h), A.multiply(g, h))


def test_normal_forms_nonnegative(tail3):
    rng = random.Random(4)
    for _ in range(10):
        f = tail3.multiply(random_poly(tail3, rng, 3), random_poly(tail3, rng, 3))
        assert all(min(e) >= 0 and c for e, c in f.items())


@pytest.mark.parametrize("name", ["weyl", "tail3", "uq_sl2"])
def test_leading_exponent_law(name):
    entry = catalog.get(name)
    A = entry.build()
    order = MatrixLex(tuple(tuple(int(i == j) for j in range(A.s)) for i in range(A.s)),
                      entry.order)
    rng = random.Random(5)
    for _ in range(15):
        f, g = random_poly(A, rng, 3), random_poly(A, rng, 3)
        if not f or not g:
            continue
        fg = A.multiply(f, g)
        assert mdeg(order, fg) == add(mdeg(order, f), mdeg(order, g))


def test_step_budget_reports_nontermination():
    A = AlgebraPresentation(["x1", "x2", "x3"],
                            tails={(1, 0): {(0, 1, 1): 1}, (2, 1): {(1, 1, 0): 1}})
    with pytest.raises(InconsistentPresentation):
        A.multiply(A.monomial((0, 2, 2)), A.monomial((2, 2, 0)))
    # a tiny budget trips on an honest product
    B = AlgebraPresentation(["x1", "x2"], q={(1, 0): q}, tails={(1, 0): {(0, 0): 1}},
                            step_budget=5)
    with pytest.raises(InconsistentPresentation, match="5 steps"):
        B.multiply(B.monomial((0, 4)), B.monomial((4, 0)))


def test_long_power_is_not_mistaken_for_nontermination(weyl):
    f = weyl.multiply(weyl.var(1), weyl.monomial((800, 0)))
    assert set(f) == {(800, 1), (799, 0)}


def test_invalid_presentations():
    with pytest.raises(ValueError, match="non-unit"):
        AlgebraPresentation(["x1", "x2"], q={(1, 0): 0})
    with pytest.raises(ValueError, match="j>i"):
        AlgebraPresentation(["x1", "x2"], q={(0, 1): q})


def test_poly_str_round_trips(uq):
    rng = random.Random(6)
    for _ in range(20):
        f = random_poly(uq, rng, 3)
        assert parse_poly(uq, poly_str(uq, f)) == f

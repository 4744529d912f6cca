import itertools

import pytest

from oracles import classical_koszul_ext
from qpbw import catalog
from qpbw.homology import (QKoszulComplex, build_qkoszul, cm_check,
                           default_degree_bound, ext_dimensions, grade_via_ext, rank_exact,
                           twist, verify_complex)
from qpbw.scalars import ONE, Q, Scalar

q = Q


def subsets(s):
    for c in range(1, s + 1):
        yield from itertools.combinations(range(s), c)


def test_ranks():
    for s, S in [(1, (0,)), (2, (0, 1)), (3, (0, 1, 2))]:
        K = build_qkoszul(catalog.uniform_q_space(s), S)
        assert [K.rank(k) for k in range(len(S) + 1)] == [len(list(itertools.combinations(S, k)))
                                                          for k in range(len(S) + 1)]
        assert verify_complex(K)


def test_quantum_plane_twist():
    A = catalog.uniform_q_space(2)
    K = build_qkoszul(A, (0, 1))
    D = K.differentials[2]
    assert D[(0, 1), (1,)] == (ONE, 0)
    assert D[(0, 1), (0,)] == (-q ** -1, 1)
    assert twist(A, 1, (0, 1)) == -q ** -1


def test_untwisted_complex_fails_verification():
    A = catalog.uniform_q_space(2)
    K = build_qkoszul(A, (0, 1))
    bad = {k: dict(v) for k, v in K.differentials.items()}
    bad[2][(0, 1), (0,)] = (-ONE, 1)
    assert not verify_complex(QKoszulComplex(A, K.S, K.bases, bad))


def test_bad_input():
    A = catalog.uniform_q_space(2)
    with pytest.raises(ValueError):
        build_qkoszul(A, ())
    with pytest.raises(ValueError):
        build_qkoszul(A, (2,))
    with pytest.raises(ValueError):
        build_qkoszul(catalog.uniform_q_space(2, 1), (1,))


def test_rank_exact():
    rows = [{0: ONE, 1: q}, {0: q, 1: q ** 2}, {1: ONE}]
    assert rank_exact(rows) == 2
    assert rank_exact([{0: q - 1}, {}]) == 1


@pytest.mark.parametrize("s, S, j", [(2, (0,), 1), (3, (0, 1), 2), (1, (0,), 1), (3, (0, 1, 2), 3)])
def test_grade_examples(s, S, j):
    assert grade_via_ext(catalog.uniform_q_space(s), S).j == j


def test_quantum_plane_ext_low_degrees():
    res = grade_via_ext(catalog.uniform_q_space(2), (0,), d_max=4)
    assert all(res.dims[0, d] == 0 for d in range(-1, 5))
    # Ext^1 = (R / x1 R)(1): one monomial x2^(d+1) per degree
    assert [res.dims[1, d] for d in range(-1, 5)] == [1, 1, 1, 1, 1, 1]


def test_degree_bound():
    A = catalog.uniform_q_space(3)
    assert default_degree_bound(build_qkoszul(A, (0, 1))) == 7
    with pytest.raises(ValueError):
        grade_via_ext(A, (0, 1), d_max=2)


def test_minimal_bound_suffices():
    # Ext^c is already nonzero in internal degree -c
    A = catalog.uniform_q_space(3)
    res = grade_via_ext(A, (0, 2), d_max=3)
    assert res.j == 2 and res.dims[2, -2] == 1


@pytest.mark.parametrize("space", [catalog.uniform_q_space(3), catalog.two_parameter_space()],
                         ids=["uniform", "two_param"])
def test_cm_all_subsets(space):
    for S in subsets(space.s):
        rep = cm_check(space, S)
        assert rep.grade == len(S)
        assert rep.module_gkdim == space.s - len(S)
        assert rep.ok


@pytest.mark.parametrize("s", [1, 2, 3])
def test_commutative_specialization_matches_classical(s):
    A = catalog.uniform_q_space(s).specialize_commutative()
    for S in subsets(s):
        d_max = len(S) + s + 2
        dims = ext_dimensions(build_qkoszul(A, S), d_max)
        assert dims == classical_koszul_ext(s, len(S), d_max)


@pytest.mark.parametrize("s", [2, 3])
def test_generic_q_matches_classical(s):
    A = catalog.uniform_q_space(s)
    for S in subsets(s):
        d_max = len(S) + s + 2
        assert ext_dimensions(build_qkoszul(A, S), d_max) == classical_koszul_ext(s, len(S), d_max)


def test_euler_characteristic_independent_of_q():
    spaces = [catalog.uniform_q_space(3), catalog.two_parameter_space(),
              catalog.uniform_q_space(3, qval=Scalar(3)), catalog.uniform_q_space(3).specialize_commutative()]
    for S in subsets(3):
        chis = []
        for A in spaces:
            dims = ext_dimensions(build_qkoszul(A, S), 6)
            chis.append({d: sum((-1) ** k * dims[k, d] for k in range(len(S) + 1))
                         for d in range(-len(S), 7)})
        assert all(c == chis[0] for c in chis)


def test_cm_s4_sample():
    A = catalog.uniform_q_space(4)
    for S in [(0,), (1, 3), (0, 1, 2, 3)]:
        assert cm_check(A, S).ok

"""
q-Koszul resolutions of R / R<x_i : i in S> over a quantum affine space R,
Ext ranks of the dualized complex, and the grade / Cohen-Macaulay check
j(M) + GKdim(M) = GKdim(R).

Conventions. F_k is free on e_T, T a k-subset of S; left-module maps act by
right multiplication, d(e_T) = sum_{i in T} c(i, T) x_i e_{T - i} with

    c(i, T) = (-1)^(position of i in T) * prod_{l in T, l < i} q_il^(-1).

Hom(F_k, R) is R^{binom(c, k)} with u -> D_k u; a cochain x^gamma in slot
T has internal degree |gamma| - |T|, so every differential has degree 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from .pbw import AlgebraPresentation, Poly
from .qspace import QuantumSpacePresentation, monomial_quotient_gkdim, qcommute_factor
from .scalars import ONE, Laurent, Scalar
from .orders import unit


class Inconclusive(RuntimeError):
    """All Ext groups vanished up to the degree bound."""


def tail_free_algebra(A: QuantumSpacePresentation) -> AlgebraPresentation:
    if A.t:
        raise ValueError("only t = 0 quantum spaces have a PBW presentation here")
    q = {(j, i): A.Q[j][i] for j in range(A.s) for i in range(j)}
    return AlgebraPresentation(A.names, q=q, name="qspace")


@dataclass
class QKoszulComplex:
    space: QuantumSpacePresentation
    S: Tuple[int, ...]
    bases: List[List[Tuple[int, ...]]]
    # differentials[k][(T, U)] = (coefficient, variable) meaning coefficient * x_var
    differentials: Dict[int, Dict[Tuple[tuple, tuple], Tuple[Scalar, int]]]

    @property
    def c(self) -> int:
        return len(self.S)

    def rank(self, k: int) -> int:
        return len(self.bases[k])


def twist(A: QuantumSpacePresentation, i: int, T: Sequence[int]) -> Scalar:
    sign = -ONE if T.index(i) % 2 else ONE
    out = sign
    for l in T:
        if l < i:
            out = out * A.Q[i][l].inv()
    return out


def build_qkoszul(A: QuantumSpacePresentation, S: Sequence[int]) -> QKoszulComplex:
    """``S`` holds 0-based variable indices."""
    if A.t:
        raise ValueError("q-Koszul complexes are built for t = 0 only")
    S = tuple(sorted(set(S)))
    if not S:
        raise ValueError("S must be nonempty")
    if S[0] < 0 or S[-1] >= A.s:
        raise ValueError(f"variable index out of range in {S}")
    bases = [list(combinations(S, k)) for k in range(len(S) + 1)]
    diffs = {}
    for k in range(1, len(S) + 1):
        D = {}
        for T in bases[k]:
            for i in T:
                U = tuple(l for l in T if l != i)
                D[T, U] = (twist(A, i, T), i)
        diffs[k] = D
    return QKoszulComplex(A, S, bases, diffs)


def _entry_poly(R: AlgebraPresentation, entry) -> Poly:
    c, i = entry
    return {unit(R.s, i): Laurent.constant(0, c)}


def verify_complex(K: QKoszulComplex) -> bool:
    """D_k D_{k-1} = 0 for all k, multiplied out by the rewriting engine."""
    R = tail_free_algebra(K.space)
    for k in range(2, K.c + 1):
        Dk, Dk1 = K.differentials[k], K.differentials[k - 1]
        for T in K.bases[k]:
            for V in K.bases[k - 2]:
                total: Poly = {}
                for U in K.bases[k - 1]:
                    a, b = Dk.get((T, U)), Dk1.get((U, V))
                    if a is None or b is None:
                        continue
                    prod = R.multiply(_entry_poly(R, a), _entry_poly(R, b))
                    for e, v in prod.items():
                        w = total.get(e)
                        w = v if w is None else w + v
                        if w:
                            total[e] = w
                        else:
                            total.pop(e)
                if total:
                    return False
    return True


# ---------------------------------------------------------------------------
# dual complex, degree by degree

def _monomials(s: int, degree: int):
    if degree < 0:
        return
    if s == 0:
        if degree == 0:
            yield ()
        return
    if s == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in _monomials(s - 1, degree - first):
            yield (first,) + rest


@dataclass
class GradedPiece:
    """delta^{k+1} from cochains of degree k to k+1, internal degree d."""

    k: int
    d: int
    source: List[Tuple[tuple, tuple]]
    target: List[Tuple[tuple, tuple]]
    rows: List[Dict[int, Scalar]]  # one sparse row per source basis element


def cochain_basis(K: QKoszulComplex, k: int, d: int):
    if k < 0 or k > K.c:
        return []
    return [(T, g) for T in K.bases[k] for g in _monomials(K.space.s, d + k)]


def graded_piece(K: QKoszulComplex, k: int, d: int) -> GradedPiece:
    A = K.space
    src = cochain_basis(K, k, d)
    tgt = cochain_basis(K, k + 1, d)
    index = {b: n for n, b in enumerate(tgt)}
    rows = []
    for U, g in src:
        row: Dict[int, Scalar] = {}
        if k + 1 <= K.c:
            for T in K.bases[k + 1]:
                entry = K.differentials[k + 1].get((T, U))
                if entry is None:
                    continue
                c, i = entry
                e_i = unit(A.s, i)
                # (c x_i) * x^g = c * lambda(e_i, g) x^{g + e_i}
                coeff = c * qcommute_factor(A, e_i, g)
                col = index[(T, tuple(a + b for a, b in zip(g, e_i)))]
                row[col] = row.get(col, Scalar()) + coeff
        rows.append({j: v for j, v in row.items() if v})
    return GradedPiece(k, d, src, tgt, rows)


def rank_exact(rows: Sequence[Dict[int, Scalar]]) -> int:
    """Rank of a sparse matrix over Q(q) by exact elimination."""
    pivots: Dict[int, Dict[int, Scalar]] = {}
    rank = 0
    for row in rows:
        row = dict(row)
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                inv = row[col].inv()
                pivots[col] = {j: v * inv for j, v in row.items()}
                rank += 1
                break
            f = row[col]
            for j, v in piv.items():
                w = row.get(j)
                w = -f * v if w is None else w - f * v
                if w:
                    row[j] = w
                else:
                    row.pop(j, None)
    return rank


def ext_dimensions(K: QKoszulComplex, d_max: int) -> Dict[Tuple[int, int], int]:
    """dim Ext^k(M, R)_d for 0 <= k <= c and -c <= d <= d_max."""
    ranks = {}

    def rk(k, d):
        # rank of delta^{k+1} on degree-(k, d) cochains
        if (k, d) not in ranks:
            ranks[k, d] = rank_exact(graded_piece(K, k, d).rows) if 0 <= k < K.c else 0
        return ranks[k, d]

    dims = {}
    for d in range(-K.c, d_max + 1):
        for k in range(K.c + 1):
            n = len(cochain_basis(K, k, d))
            dims[k, d] = n - rk(k, d) - rk(k - 1, d)
    return dims


@dataclass
class GradeResult:
    j: int
    dims: Dict[Tuple[int, int], int] = field(default_factory=dict)
    d_max: int = 0


def default_degree_bound(K: QKoszulComplex) -> int:
    return K.c + K.space.s + 2


def grade_via_ext(A: QuantumSpacePresentation, S: Sequence[int], d_max: int = None) -> GradeResult:
    K = build_qkoszul(A, S)
    if not verify_complex(K):
        raise ArithmeticError("q-Koszul differentials do not compose to zero")
    if d_max is None:
        d_max = default_degree_bound(K)
    if d_max < K.c + 1:
        raise ValueError(f"degree bound must be at least c+1 = {K.c + 1}")
    dims = ext_dimensions(K, d_max)
    nonzero = sorted(k for (k, d), v in dims.items() if v)
    if not nonzero:
        raise Inconclusive(f"all Ext groups vanish up to internal degree {d_max}")
    return GradeResult(nonzero[0], dims, d_max)


@dataclass
class CMReport:
    S: Tuple[int, ...]
    grade: int
    module_gkdim: int
    algebra_gkdim: int
    ok: bool
    dims: Dict[Tuple[int, int], int]


def cm_check(A: QuantumSpacePresentation, S: Sequence[int], d_max: int = None) -> CMReport:
    g = grade_via_ext(A, S, d_max)
    gens = [unit(A.s, i) for i in S]
    gk = monomial_quotient_gkdim(A, gens)
    return CMReport(tuple(sorted(set(S))), g.j, gk, A.s, g.j + gk == A.s, g.dims)

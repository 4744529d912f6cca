"""
Multiparameter quantum affine spaces k_Q[x_1, ..., x_s] and their monomial
localizations k_Q[x_1^{+-1}, ..., x_t^{+-1}, x_{t+1}, ..., x_s].

Monomials multiply in closed form: x^a x^b = lambda(a, b) x^{a+b} with
lambda(a, b) = prod_{i<j} q_ji^(a_j b_i). Elements are dicts from exponent
tuples to nonzero Scalars.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, Iterable, List, Sequence, Tuple

from .scalars import ONE, Scalar

Exponent = Tuple[int, ...]
TorusPoly = Dict[Exponent, Scalar]

NEG_INF = -math.inf


class QuantumSpacePresentation:
    """``Q[j][i]`` holds q_ji; the table must satisfy q_ij q_ji = 1, q_ii = 1."""

    def __init__(self, Q: Sequence[Sequence], t: int = 0, names=None):
        s = len(Q)
        self.Q = tuple(tuple(Scalar.coerce(x) for x in row) for row in Q)
        if any(len(row) != s for row in self.Q):
            raise ValueError("Q must be square")
        if not 0 <= t <= s:
            raise ValueError(f"need 0 <= t <= s, got t={t}, s={s}")
        for i in range(s):
            if self.Q[i][i] != ONE:
                raise ValueError(f"anti-symmetry violated: q[{i + 1},{i + 1}] != 1")
            for j in range(s):
                if not self.Q[i][j]:
                    raise ValueError(f"q[{i + 1},{j + 1}] is not a unit")
                if self.Q[i][j] * self.Q[j][i] != ONE:
                    raise ValueError(
                        f"anti-symmetry violated: q[{i + 1},{j + 1}]*q[{j + 1},{i + 1}] != 1")
        self.t = t
        self.names = tuple(names) if names else tuple(f"x{i + 1}" for i in range(s))

    @classmethod
    def from_lower(cls, lower: Dict[Tuple[int, int], object], s: int, t: int = 0, names=None):
        """Build from q_ji for j > i (0-based keys); missing entries are 1."""
        Q = [[ONE] * s for _ in range(s)]
        for (j, i), v in lower.items():
            if not j > i:
                raise ValueError("keys must satisfy j > i")
            v = Scalar.coerce(v)
            if not v:
                raise ValueError(f"q[{j + 1},{i + 1}] is not a unit")
            Q[j][i] = v
            Q[i][j] = v.inv()
        return cls(Q, t, names)

    @property
    def s(self) -> int:
        return len(self.Q)

    def q(self, j: int, i: int) -> Scalar:
        return self.Q[j][i]

    def specialize_commutative(self) -> "QuantumSpacePresentation":
        return QuantumSpacePresentation([[ONE] * self.s for _ in range(self.s)], self.t, self.names)

    def check_monomial(self, a: Exponent):
        if len(a) != self.s:
            raise ValueError(f"exponent {a} has wrong length")
        if any(x < 0 for x in a[self.t:]):
            raise ValueError(f"negative exponent in a non-inverted position: {a}")

    def __repr__(self):
        return f"QuantumSpacePresentation(s={self.s}, t={self.t})"


def qcommute_factor(A: QuantumSpacePresentation, a: Exponent, b: Exponent) -> Scalar:
    if len(a) != A.s or len(b) != A.s:
        raise ValueError("dimension mismatch")
    out = ONE
    for j in range(A.s):
        if not a[j]:
            continue
        for i in range(j):
            k = a[j] * b[i]
            if k:
                out = out * A.Q[j][i] ** k
    return out


def multiply_torus(A: QuantumSpacePresentation, f: TorusPoly, g: TorusPoly) -> TorusPoly:
    for h in (f, g):
        for a in h:
            A.check_monomial(a)
    out: TorusPoly = {}
    for a, c in f.items():
        for b, d in g.items():
            e = tuple(x + y for x, y in zip(a, b))
            v = c * d * qcommute_factor(A, a, b)
            w = out.get(e)
            if w is not None:
                v = v + w
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def monomial(exp, c=1) -> TorusPoly:
    c = Scalar.coerce(c)
    return {tuple(exp): c} if c else {}


# ---------------------------------------------------------------------------
# growth

def _shell_sizes(s: int, t: int, n: int) -> List[int]:
    """Number of monomials of each degree 0..n; |exponent| sums absolute values."""
    shells = [1] + [0] * n
    for k in range(s):
        # an inverted variable contributes 2 monomials in each positive degree
        per = [1] + [2 if k < t else 1] * n
        new = [0] * (n + 1)
        for d1, c1 in enumerate(shells):
            if c1:
                for d2 in range(n + 1 - d1):
                    new[d1 + d2] += c1 * per[d2]
        shells = new
    return shells


def growth_count_shape(s: int, t: int, n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum(_shell_sizes(s, t, n))


def growth_count(A: QuantumSpacePresentation, n: int) -> int:
    return growth_count_shape(A.s, A.t, n)


@dataclass
class GKEstimate:
    value: int
    raw: float
    counts: Tuple[int, int]


def gkdim_estimate_shape(s: int, t: int, n_max: int = 64) -> GKEstimate:
    if n_max < 4:
        raise ValueError("n_max must be >= 4")
    hi = growth_count_shape(s, t, n_max)
    lo = growth_count_shape(s, t, n_max // 2)
    raw = math.log(hi / lo) / math.log(n_max / (n_max // 2))
    return GKEstimate(round(raw), raw, (lo, hi))


def gkdim_estimate(A: QuantumSpacePresentation, n_max: int = 64) -> GKEstimate:
    return gkdim_estimate_shape(A.s, A.t, n_max)


# ---------------------------------------------------------------------------
# monomial quotients R / R<m_1, ..., m_r>

def _support(m) -> frozenset:
    return frozenset(i for i, x in enumerate(m) if x)


def monomial_quotient_gkdim(A: QuantumSpacePresentation, generators: Iterable[Exponent]):
    """GKdim of R modulo a monomial ideal: the largest coordinate subset
    containing the support of no generator (NEG_INF for the unit ideal)."""
    if A.t != 0:
        raise ValueError("monomial quotients are only supported for t = 0")
    gens = [tuple(g) for g in generators]
    if not gens:
        raise ValueError("need at least one generator")
    for g in gens:
        A.check_monomial(g)
    supports = [_support(g) for g in gens]
    for size in range(A.s, -1, -1):
        for S in combinations(range(A.s), size):
            S = frozenset(S)
            if not any(sup <= S for sup in supports):
                return size
    return NEG_INF


def quotient_hilbert_counts(s: int, generators: Iterable[Exponent], n: int) -> List[int]:
    """Standard monomials of degree <= d outside the ideal, for d = 0..n."""
    gens = [tuple(g) for g in generators]
    per_degree = [0] * (n + 1)
    for e in product(range(n + 1), repeat=s):
        d = sum(e)
        if d > n:
            continue
        if any(all(x >= y for x, y in zip(e, g)) for g in gens):
            continue
        per_degree[d] += 1
    out, acc = [], 0
    for c in per_degree:
        acc += c
        out.append(acc)
    return out


def growth_degree_from_counts(counts: Sequence[int], tail: int = 6):
    """Degree of the polynomial that the cumulative counts eventually follow.

    Takes finite differences until the last ``tail`` entries vanish.
    """
    seq = list(counts)
    if all(x == 0 for x in seq[-tail:]):
        return NEG_INF
    k = 0
    while True:
        seq = [b - a for a, b in zip(seq, seq[1:])]
        if len(seq) < tail:
            raise ValueError("not enough terms to determine the growth degree")
        if all(x == 0 for x in seq[-tail:]):
            return k
        k += 1

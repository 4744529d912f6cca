"""
Re-filtering a PBW presentation by a positive weight vector.

Given relations x_j x_i = q_ji x_i x_j + tail_ji, collect the differences
gamma - e_i - e_j over all tail exponents, find w >= 1 making every such
difference strictly negative, and drop the tails: with R_n spanned by the
standard monomials of w-degree <= n, the associated graded algebra is the
iterated Ore extension with the pure relations y_j y_i = q_ji y_i y_j.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Optional, Tuple

from . import lp
from .orders import WeightLex, add, dot, sub, unit
from .pbw import AlgebraPresentation, Poly, check_condition_iii

Exponent = Tuple[int, ...]


class Infeasible(ValueError):
    """No positive weight vector bounds the tails.

    ``farkas`` holds nonnegative integer multipliers y (one per C-set vector)
    with sum y_a * a >= 0 componentwise, which contradicts <w, a> <= -1 for
    all a together with w >= 1.
    """

    def __init__(self, msg, farkas=None):
        super().__init__(msg)
        self.farkas = farkas


@dataclass
class CSet:
    s: int
    vectors: List[Exponent]
    provenance: Dict[Exponent, List[dict]] = field(default_factory=dict)

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


@dataclass
class WeightCertificate:
    w: Tuple[int, ...]
    margins: Dict[Exponent, int]


@dataclass
class GradedPresentation:
    presentation: AlgebraPresentation
    degrees: Tuple[int, ...]


def collect_c_set(A: AlgebraPresentation) -> CSet:
    vectors, prov = [], {}
    for (j, i), tail in sorted(A.tails.items()):
        base = add(unit(A.s, i), unit(A.s, j))
        for gamma in sorted(tail):
            d = sub(gamma, base)
            if not any(d):
                # zero is not a usable constraint (<w,0> = 0)
                continue
            if d not in prov:
                vectors.append(d)
                prov[d] = []
            prov[d].append({"relation": (j + 1, i + 1), "term": gamma})
    return CSet(A.s, vectors, prov)


def _clear_denominators(xs) -> Tuple[int, ...]:
    den = 1
    for x in xs:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in xs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return tuple(v // g for v in ints) if g else tuple(ints)


def _farkas(C: CSet) -> Optional[Tuple[int, ...]]:
    m = len(C.vectors)
    if not m:
        return None
    # y >= 0, sum y = 1, -sum_a y_a a_i <= 0 for every coordinate i
    A_ub = [[-C.vectors[r][i] for r in range(m)] for i in range(C.s)]
    res = lp.linprog_exact([0] * m, A_ub, [0] * C.s, [[1] * m], [1])
    if res.status != lp.OPTIMAL:
        return None
    return _clear_denominators(res.x)


def find_weight_vector(C: CSet) -> WeightCertificate:
    """Smallest-sum w >= 1 with <w, a> <= -1 for all a in C, by exact LP."""
    s = C.s
    if not C.vectors:
        return WeightCertificate((1,) * s, {})
    # substitute w = 1 + v with v >= 0
    A_ub = [list(a) for a in C.vectors]
    b_ub = [-1 - sum(a) for a in C.vectors]
    res = lp.linprog_exact([1] * s, A_ub, b_ub)
    if res.status != lp.OPTIMAL:
        y = _farkas(C)
        raise Infeasible("no strictly positive weight vector makes every C-set "
                         "vector negative", farkas=y)
    w = _clear_denominators([1 + v for v in res.x])
    return WeightCertificate(w, {a: dot(w, a) for a in C.vectors})


def verify_certificate(C: CSet, cert: WeightCertificate) -> bool:
    w = tuple(cert.w)
    if len(w) != C.s or any(not isinstance(x, int) or x < 1 for x in w):
        return False
    return all(dot(w, a) < 0 for a in C.vectors)


def verify_farkas(C: CSet, y) -> bool:
    if y is None or len(y) != len(C.vectors) or any(v < 0 for v in y) or not any(y):
        return False
    return all(sum(yv * a[i] for yv, a in zip(y, C.vectors)) >= 0 for i in range(C.s))


def filtration_degree(w, f: Poly) -> int:
    if not f:
        raise ValueError("filtration degree of the zero polynomial")
    return max(dot(w, e) for e in f)


def leading_form(w, f: Poly) -> Poly:
    d = filtration_degree(w, f)
    return {e: c for e, c in f.items() if dot(w, e) == d}


def associated_graded(A: AlgebraPresentation, cert: WeightCertificate) -> GradedPresentation:
    C = collect_c_set(A)
    if not verify_certificate(C, cert):
        raise ValueError(f"certificate w={cert.w} does not bound the tails")
    w = tuple(cert.w)
    for (j, i), tail in A.tails.items():
        top = w[i] + w[j]
        assert all(dot(w, g) < top for g in tail)
    name = f"gr({A.name})" if A.name else ""
    return GradedPresentation(A.with_tails({}, name=name), w)


@dataclass
class RefilterReport:
    c_set: CSet
    certificate: WeightCertificate
    graded: GradedPresentation
    condition_ok: bool
    seconds: float


def refilter_pipeline(A: AlgebraPresentation) -> RefilterReport:
    t0 = time.perf_counter()
    C = collect_c_set(A)
    cert = find_weight_vector(C)
    graded = associated_graded(A, cert)
    cond = check_condition_iii(A, WeightLex(cert.w))
    return RefilterReport(C, cert, graded, cond.ok, time.perf_counter() - t0)

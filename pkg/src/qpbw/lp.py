"""
Exact rational linear programming.

``linprog_exact`` is a dense two-phase tableau simplex over Fractions using
Bland's rule, so it cannot cycle. ``fourier_motzkin_feasible`` decides
feasibility of A x <= b by variable elimination and is used as an
independent check of the simplex verdicts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    x: Optional[List[Fraction]] = None
    value: Optional[Fraction] = None


def _pivot(rows, rhs, obj, r, col):
    piv = rows[r][col]
    row = [v / piv for v in rows[r]]
    rows[r] = row
    rhs[r] = rhs[r] / piv
    for k in range(len(rows)):
        if k != r:
            f = rows[k][col]
            if f:
                rk = rows[k]
                rows[k] = [a - f * b for a, b in zip(rk, row)]
                rhs[k] = rhs[k] - f * rhs[r]
    f = obj[0][col]
    if f:
        obj[0] = [a - f * b for a, b in zip(obj[0], row)]
        obj[1] = obj[1] - f * rhs[r]


def _simplex(rows, rhs, basis, cost, allowed):
    """Minimize cost.x over the tableau; columns outside ``allowed`` never enter.

    Returns OPTIMAL or UNBOUNDED; the tableau is updated in place.
    """
    ncols = len(cost)
    # reduced costs: cost - c_B B^-1 A; objective value tracked as -z
    red = list(cost)
    val = Fraction(0)
    for r, b in enumerate(basis):
        cb = cost[b]
        if cb:
            red = [a - cb * x for a, x in zip(red, rows[r])]
            val -= cb * rhs[r]
    obj = [red, val]
    while True:
        col = next((j for j in range(ncols) if allowed[j] and obj[0][j] < 0), None)
        if col is None:
            return OPTIMAL
        best = None
        for r in range(len(rows)):
            a = rows[r][col]
            if a > 0:
                ratio = rhs[r] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[r] < basis[best[1]]):
                    best = (ratio, r)
        if best is None:
            return UNBOUNDED
        r = best[1]
        _pivot(rows, rhs, obj, r, col)
        basis[r] = col


def linprog_exact(c: Sequence, A_ub=(), b_ub=(), A_eq=(), b_eq=()) -> LPResult:
    """min c.x subject to A_ub x <= b_ub, A_eq x = b_eq, x >= 0 (exact)."""
    n = len(c)
    c = [Fraction(v) for v in c]
    m_ub, m_eq = len(A_ub), len(A_eq)
    m = m_ub + m_eq
    # columns: n structural, m_ub slacks, m artificials (only some used)
    nslack = m_ub
    ncols = n + nslack + m
    rows, rhs, basis = [], [], []
    needs_art = []
    for r in range(m):
        if r < m_ub:
            a, b = A_ub[r], b_ub[r]
        else:
            a, b = A_eq[r - m_ub], b_eq[r - m_ub]
        row = [Fraction(v) for v in a] + [Fraction(0)] * (nslack + m)
        if len(a) != n:
            raise ValueError("constraint row length does not match objective")
        b = Fraction(b)
        if r < m_ub:
            row[n + r] = Fraction(1)
        if b < 0:
            row = [-v for v in row]
            b = -b
        if r < m_ub and row[n + r] == 1:
            basis.append(n + r)
            needs_art.append(False)
        else:
            row[n + nslack + r] = Fraction(1)
            basis.append(n + nslack + r)
            needs_art.append(True)
        rows.append(row)
        rhs.append(b)

    art_cols = [n + nslack + r for r in range(m) if needs_art[r]]
    real = [True] * (n + nslack) + [False] * m
    if art_cols:
        cost1 = [Fraction(0)] * ncols
        for j in art_cols:
            cost1[j] = Fraction(1)
        allowed = real[:]
        for j in art_cols:
            allowed[j] = True
        _simplex(rows, rhs, basis, cost1, allowed)
        phase1 = sum(rhs[r] for r, b in enumerate(basis) if b >= n + nslack)
        if phase1 > 0:
            return LPResult(INFEASIBLE)
        # drive remaining (zero-level) artificials out of the basis
        r = 0
        while r < len(rows):
            if basis[r] >= n + nslack:
                col = next((j for j in range(n + nslack) if rows[r][j] != 0), None)
                if col is None:
                    del rows[r], rhs[r], basis[r]
                    continue
                dummy = [[Fraction(0)] * ncols, Fraction(0)]
                _pivot(rows, rhs, dummy, r, col)
                basis[r] = col
            r += 1

    cost2 = c + [Fraction(0)] * (nslack + m)
    status = _simplex(rows, rhs, basis, cost2, real)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * ncols
    for r, b in enumerate(basis):
        x[b] = rhs[r]
    x = x[:n]
    return LPResult(OPTIMAL, x, sum(ci * xi for ci, xi in zip(c, x)))


def _normalize_row(a, b):
    nums = [v for v in a if v] + ([b] if b else [])
    if not nums:
        return tuple(a), b
    den = 1
    for v in list(a) + [b]:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in a] + [int(b * den)]
    g = 0
    for v in ints:
        g = gcd(g, v)
    g = g or 1
    return tuple(Fraction(v, g) for v in ints[:-1]), Fraction(ints[-1], g)


def fourier_motzkin_feasible(A: Sequence[Sequence], b: Sequence) -> bool:
    """Is {x in Q^n : A x <= b} nonempty? Decided by eliminating every variable."""
    rows = {_normalize_row([Fraction(v) for v in a], Fraction(bb)) for a, bb in zip(A, b)}
    n = len(A[0]) if A else 0
    for k in range(n):
        pos, neg, rest = [], [], set()
        for a, bb in rows:
            if a[k] > 0:
                pos.append((a, bb))
            elif a[k] < 0:
                neg.append((a, bb))
            else:
                rest.add((a, bb))
        for ap, bp in pos:
            for an, bn in neg:
                lp, ln = ap[k], -an[k]
                a = [ln * x + lp * y for x, y in zip(ap, an)]
                bb = ln * bp + lp * bn
                rest.add(_normalize_row(a, bb))
        rows = rest
        for a, bb in rows:
            if not any(a) and bb < 0:
                return False
    return all(bb >= 0 for a, bb in rows)

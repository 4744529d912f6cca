"""
PBW-presented algebras and normal-form arithmetic.

An algebra R is given over a coefficient ring Lambda = Q(q)[z^{+-1}]
(``t`` Laurent variables, possibly none) by variables x_1, ..., x_s with

    x_j x_i = q_ji x_i x_j + tail_ji        (j > i)
    x_k a   = sigma_k(a) x_k                (a in Lambda)

Elements are kept as standard polynomials: dicts from exponent tuples
alpha in N^s to nonzero Laurent coefficients, meaning
sum c_alpha x_1^alpha_1 ... x_s^alpha_s with coefficients on the left.
Products are normalized by pushing one variable at a time through the
right factor and rewriting each inversion x_j x_i with the relation.
"""

from __future__ import annotations

import random
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .orders import AdmissibleOrder, MatrixLex, add, sub, unit
from .scalars import ONE, DiagonalAutomorphism, Laurent, Scalar

Exponent = Tuple[int, ...]
Poly = Dict[Exponent, Laurent]

DEFAULT_STEP_BUDGET = 10 ** 6
# nested rewrites allowed inside one product; keeps the C stack safe
MAX_REWRITE_DEPTH = 500


class InconsistentPresentation(RuntimeError):
    """Rewriting did not terminate within the step budget."""


@dataclass(frozen=True)
class CoeffDomain:
    """Lambda = Q(q) when ``names`` is empty, else Q(q)[names^{+-1}]."""

    names: Tuple[str, ...] = ()

    @property
    def t(self) -> int:
        return len(self.names)

    @property
    def is_field(self) -> bool:
        return not self.names


class AlgebraPresentation:
    """PBW data: variables, q table, sigmas, tails.

    ``q`` maps (j, i) with j > i (0-based) to a unit of Lambda; missing pairs
    default to 1. ``sigma`` holds one DiagonalAutomorphism per variable.
    ``tails`` maps (j, i) to a standard polynomial; missing pairs are 0.
    """

    def __init__(self, names: Sequence[str], domain: CoeffDomain = CoeffDomain(),
                 q=None, sigma=None, tails=None, name: str = "",
                 step_budget: int = DEFAULT_STEP_BUDGET):
        self.name = name
        self.names = tuple(names)
        self.domain = domain
        s, t = len(self.names), domain.t
        self.q: Dict[Tuple[int, int], Laurent] = {}
        for j in range(s):
            for i in range(j):
                self.q[j, i] = Laurent.constant(t, 1)
        for (j, i), v in (q or {}).items():
            if not j > i:
                raise ValueError(f"q[{j + 1},{i + 1}] requires j>i")
            v = _as_laurent(v, t)
            if not v.is_unit():
                raise ValueError(f"q[{j + 1},{i + 1}] = {v} is a non-unit")
            self.q[j, i] = v
        self.sigma: Tuple[DiagonalAutomorphism, ...] = tuple(
            sigma if sigma is not None else [DiagonalAutomorphism.identity(t)] * s
        )
        if len(self.sigma) != s or any(sg.t != t for sg in self.sigma):
            raise ValueError("need one automorphism of Lambda per variable")
        self.tails: Dict[Tuple[int, int], Poly] = {}
        for (j, i), f in (tails or {}).items():
            if not j > i:
                raise ValueError(f"rel[{j + 1},{i + 1}] requires j>i")
            f = {tuple(e): _as_laurent(c, t) for e, c in f.items()}
            f = {e: c for e, c in f.items() if c}
            for e in f:
                if len(e) != s or min(e, default=0) < 0:
                    raise ValueError(f"bad tail exponent {e}")
            if f:
                self.tails[j, i] = f
        self.step_budget = step_budget
        self._mono_cache: Dict[Tuple[Exponent, Exponent], Poly] = {}
        self._var_cache: Dict[Tuple[int, Exponent], Poly] = {}
        self._steps = 0
        self._depth = 0

    @property
    def s(self) -> int:
        return len(self.names)

    @property
    def t(self) -> int:
        return self.domain.t

    def is_tail_free(self) -> bool:
        return not self.tails

    def __eq__(self, other):
        if not isinstance(other, AlgebraPresentation):
            return NotImplemented
        return (self.names == other.names and self.domain == other.domain
                and self.q == other.q and self.sigma == other.sigma
                and self.tails == other.tails)

    def __repr__(self):
        return f"AlgebraPresentation({self.name or '?'}, vars={self.names}, coeffs={self.domain.names})"

    # -- element constructors ------------------------------------------------
    def zero(self) -> Poly:
        return {}

    def one(self) -> Poly:
        return self.const(1)

    def const(self, c) -> Poly:
        c = _as_laurent(c, self.t)
        return {(0,) * self.s: c} if c else {}

    def var(self, i: int) -> Poly:
        return {unit(self.s, i): Laurent.constant(self.t, 1)}

    def monomial(self, exp, c=1) -> Poly:
        c = _as_laurent(c, self.t)
        return {tuple(exp): c} if c else {}

    def coeff_var(self, i: int, power: int = 1) -> Poly:
        return self.const(Laurent.var(self.t, i, power))

    # -- rewriting ----------------------------------------------------------
    def sigma_power(self, exp) -> DiagonalAutomorphism:
        out = DiagonalAutomorphism.identity(self.t)
        for sg, k in zip(self.sigma, exp):
            if k:
                out = out.compose(sg.power(k))
        return out

    def _tick(self):
        self._steps += 1
        if self._steps > self.step_budget:
            raise InconsistentPresentation(
                f"rewriting exceeded {self.step_budget} steps; the presentation "
                "does not terminate (tails not bounded by any admissible order?)")

    def _var_times_mono(self, k: int, beta: Exponent) -> Poly:
        """Normal form of x_k * x^beta."""
        hit = self._var_cache.get((k, beta))
        if hit is not None:
            return hit
        # x_k x^beta needs x_k x^(beta - e_first) first; walk that chain
        # iteratively so long powers do not count as nested rewrites
        chain = []
        b = beta
        while b is not None and (k, b) not in self._var_cache:
            chain.append(b)
            first = next((i for i, v in enumerate(b) if v), None)
            b = None if first is None or k <= first else sub(b, unit(self.s, first))
        for b in reversed(chain):
            self._var_cache[k, b] = self._var_step(k, b)
        return self._var_cache[k, beta]

    def _var_step(self, k: int, beta: Exponent) -> Poly:
        first = next((i for i, b in enumerate(beta) if b), None)
        if first is None or k <= first:
            return {add(beta, unit(self.s, k)): Laurent.constant(self.t, 1)}
        self._tick()
        self._depth += 1
        if self._depth > MAX_REWRITE_DEPTH:
            raise InconsistentPresentation(
                f"rewrites nested deeper than {MAX_REWRITE_DEPTH}; the presentation "
                "does not terminate (tails not bounded by any admissible order?)")
        try:
            i = first
            rest = sub(beta, unit(self.s, i))
            # x_k x_i x^rest = q_ki x_i (x_k x^rest) + tail_ki x^rest
            out = _scale(self._var_times_poly(i, self._var_cache[k, rest]), self.q[k, i])
            tail = self.tails.get((k, i))
            if tail:
                out = _add_into(out, self._mul_poly_mono(tail, rest))
        finally:
            self._depth -= 1
        return out

    def _var_times_poly(self, k: int, f: Poly) -> Poly:
        out: Poly = {}
        sg = self.sigma[k]
        for beta, c in f.items():
            c2 = sg(c)
            for e, d in self._var_times_mono(k, beta).items():
                _acc(out, e, c2 * d)
        return out

    def _mono_times_mono(self, alpha: Exponent, beta: Exponent) -> Poly:
        last = max((i for i, a in enumerate(alpha) if a), default=-1)
        first = next((i for i, b in enumerate(beta) if b), self.s)
        if last <= first:
            return {add(alpha, beta): Laurent.constant(self.t, 1)}
        key = (alpha, beta)
        hit = self._mono_cache.get(key)
        if hit is not None:
            return hit
        p: Poly = {beta: Laurent.constant(self.t, 1)}
        for k in range(self.s - 1, -1, -1):
            for _ in range(alpha[k]):
                p = self._var_times_poly(k, p)
        self._mono_cache[key] = p
        return p

    def _mul_poly_mono(self, f: Poly, beta: Exponent) -> Poly:
        out: Poly = {}
        for alpha, c in f.items():
            for e, d in self._mono_times_mono(alpha, beta).items():
                _acc(out, e, c * d)
        return out

    def multiply(self, f: Poly, g: Poly) -> Poly:
        """Standard representation of the product f*g."""
        out: Poly = {}
        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, 8 * MAX_REWRITE_DEPTH))
        try:
            for alpha, a in f.items():
                sg = self.sigma_power(alpha)
                for beta, b in g.items():
                    self._steps = 0
                    self._depth = 0
                    coeff = a * sg(b)
                    if not coeff:
                        continue
                    for e, d in self._mono_times_mono(alpha, beta).items():
                        _acc(out, e, coeff * d)
        except RecursionError:
            raise InconsistentPresentation(
                "rewriting recursion did not bottom out; the presentation "
                "does not terminate") from None
        finally:
            sys.setrecursionlimit(limit)
        return out

    def power(self, f: Poly, n: int) -> Poly:
        out = self.one()
        for _ in range(n):
            out = self.multiply(out, f)
        return out

    # -- misc --------------------------------------------------------------
    def with_tails(self, tails, name=None) -> "AlgebraPresentation":
        return AlgebraPresentation(self.names, self.domain, dict(self.q), self.sigma,
                                   tails, name=self.name if name is None else name,
                                   step_budget=self.step_budget)

    def relation_poly(self, j: int, i: int) -> Poly:
        """Right-hand side q_ji x_i x_j + tail_ji as a standard polynomial."""
        e = add(unit(self.s, i), unit(self.s, j))
        return _add_into({e: self.q[j, i]}, self.tails.get((j, i), {}))


def _as_laurent(c, t) -> Laurent:
    if isinstance(c, Laurent):
        if c.t != t:
            raise ValueError(f"coefficient lives in t={c.t}, expected t={t}")
        return c
    return Laurent.constant(t, c)


def _acc(out: Poly, e, c):
    v = out.get(e)
    v = c if v is None else v + c
    if v:
        out[e] = v
    else:
        out.pop(e, None)


def _scale(f: Poly, c: Laurent) -> Poly:
    if c.is_one():
        return f
    out = {}
    for e, d in f.items():
        v = c * d
        if v:
            out[e] = v
    return out


def _add_into(f: Poly, g: Poly) -> Poly:
    out = dict(f)
    for e, c in g.items():
        _acc(out, e, c)
    return out


# ---------------------------------------------------------------------------
# polynomial helpers (coefficient-wise, no algebra needed)

def padd(f: Poly, g: Poly) -> Poly:
    return _add_into(f, g)


def pneg(f: Poly) -> Poly:
    return {e: -c for e, c in f.items()}


def psub(f: Poly, g: Poly) -> Poly:
    return _add_into(f, pneg(g))


def pscale(f: Poly, c) -> Poly:
    out = {}
    for e, d in f.items():
        v = c * d
        if v:
            out[e] = v
    return out


def multiply(A: AlgebraPresentation, f: Poly, g: Poly) -> Poly:
    return A.multiply(f, g)


def mdeg(order: MatrixLex, f: Poly) -> Exponent:
    """Multi-degree max{gamma M : gamma in supp f} under the order's base."""
    if not f:
        raise ValueError("mdeg of the zero polynomial")
    images = [order.image(g) for g in f]
    return max(images, key=order.base.key)


def poly_str(A: AlgebraPresentation, f: Poly) -> str:
    """Canonical text form, reparseable by the presentation grammar."""
    from .scalars import _join_terms

    if not f:
        return "0"
    parts = []
    coeff_names = A.domain.names
    for e in sorted(f, key=lambda e: (sum(e), tuple(reversed(e))), reverse=True):
        c = f[e]
        mon = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(A.names, e) if k)
        if c.is_scalar():
            from .scalars import _term_str
            parts.append(_term_str(c.scalar(), mon))
        else:
            cs = c.to_str(coeff_names)
            if not mon:
                parts.append(("+", cs))
            elif len(c.terms) == 1 and c.terms.get(next(iter(c.terms))) == ONE:
                parts.append(("+", f"{cs}*{mon}"))
            else:
                parts.append(("+", f"({cs})*{mon}"))
    return _join_terms(parts)


# ---------------------------------------------------------------------------
# tail bounds and consistency

@dataclass
class ConditionReport:
    order: str
    ok: bool
    violations: List[dict] = field(default_factory=list)


def check_condition_iii(A: AlgebraPresentation, order: AdmissibleOrder) -> ConditionReport:
    """Every tail exponent of x_j x_i must be strictly below e_i + e_j."""
    violations = []
    for (j, i), tail in sorted(A.tails.items()):
        bound = add(unit(A.s, i), unit(A.s, j))
        for gamma in sorted(tail):
            if not order.lt(gamma, bound):
                violations.append({"relation": (j + 1, i + 1), "exponent": gamma,
                                   "bound": bound})
    return ConditionReport(order=repr(order), ok=not violations, violations=violations)


@dataclass
class AssociativityReport:
    ok: bool
    checked: int
    counterexample: Optional[dict] = None


def _random_coeff(A: AlgebraPresentation, rng: random.Random) -> Laurent:
    t = A.t
    c = Laurent(t, {})
    for _ in range(rng.randint(1, 2)):
        e = tuple(rng.randint(-1, 1) for _ in range(t))
        k = rng.randint(-1, 1)
        c = c + Laurent.monomial(t, e, Scalar.q(k) * rng.choice([1, 2, -1, 3]))
    return c if c else Laurent.constant(t, 1)


def random_poly(A: AlgebraPresentation, rng: random.Random, max_degree: int = 2,
                max_terms: int = 3) -> Poly:
    f: Poly = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(0, max_degree)
        e = [0] * A.s
        for _ in range(d):
            e[rng.randrange(A.s)] += 1 if A.s else 0
        _acc(f, tuple(e), _random_coeff(A, rng))
    return f


def associativity_check(A: AlgebraPresentation, trials: int = 50, seed: int = 0,
                        max_degree: int = 2) -> AssociativityReport:
    """Compare (ab)c with a(bc) on generator overlaps and random triples.

    Overlaps checked: x_k x_j x_i for k > j > i, and x_j x_i z^{+-1} for
    every coefficient variable z, which tests compatibility of tails with
    the sigmas.
    """
    triples = []
    for k in range(A.s):
        for j in range(k):
            for i in range(j):
                triples.append(((A.names[k], A.names[j], A.names[i]),
                                (A.var(k), A.var(j), A.var(i))))
    for j in range(A.s):
        for i in range(j):
            for z in range(A.t):
                for p in (1, -1):
                    zname = f"{A.domain.names[z]}^{p}"
                    triples.append(((A.names[j], A.names[i], zname),
                                    (A.var(j), A.var(i), A.coeff_var(z, p))))
    rng = random.Random(seed)
    for n in range(trials):
        triples.append(((f"random#{n}",) * 3,
                        tuple(random_poly(A, rng, max_degree) for _ in range(3))))
    for label, (a, b, c) in triples:
        left = A.multiply(A.multiply(a, b), c)
        right = A.multiply(a, A.multiply(b, c))
        if left != right:
            return AssociativityReport(False, len(triples), {
                "factors": [poly_str(A, a), poly_str(A, b), poly_str(A, c)],
                "label": list(label),
                "left": poly_str(A, left), "right": poly_str(A, right),
                "difference": poly_str(A, psub(left, right)),
            })
    return AssociativityReport(True, len(triples))

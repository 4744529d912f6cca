"""
Exact coefficients: the rational function field Q(q), Laurent polynomial
rings Q(q)[z_1^{+-1}, ..., z_t^{+-1}] over it, and diagonal automorphisms
z_i -> lambda_i z_i of those rings.

Polynomials in q are tuples of Python ints, lowest degree first, with no
trailing zeros (the zero polynomial is the empty tuple).
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, Iterable, Sequence, Tuple

IntPoly = Tuple[int, ...]


# ---------------------------------------------------------------------------
# integer polynomials in q

def _trim(p) -> IntPoly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def padd(a: IntPoly, b: IntPoly) -> IntPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def pneg(a: IntPoly) -> IntPoly:
    return tuple(-c for c in a)


def pmul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return ()
    if len(a) == 1:
        c = a[0]
        return tuple(c * x for x in b)
    if len(b) == 1:
        c = b[0]
        return tuple(c * x for x in a)
    sa = [(i, x) for i, x in enumerate(a) if x]
    sb = [(j, y) for j, y in enumerate(b) if y]
    if len(sa) > len(sb):
        sa, sb = sb, sa
    out = [0] * (len(a) + len(b) - 1)
    for i, x in sa:
        for j, y in sb:
            out[i + j] += x * y
    return tuple(out)


def content(a: IntPoly) -> int:
    return reduce(gcd, a, 0)


def primitive(a: IntPoly) -> IntPoly:
    """Primitive part with positive leading coefficient."""
    c = content(a)
    if c == 0:
        return ()
    if a[-1] < 0:
        c = -c
    return tuple(x // c for x in a)


def _low_zeros(a: IntPoly) -> int:
    k = 0
    while k < len(a) and a[k] == 0:
        k += 1
    return k


def pexactdiv(a: IntPoly, b: IntPoly) -> IntPoly:
    """a / b where b divides a in Z[q]; raises if the division is not exact."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    if len(a) - 1 < db:
        raise ArithmeticError("inexact polynomial division")
    quot = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c, r = divmod(a[k + db], lb)
        if r:
            raise ArithmeticError("inexact polynomial division")
        quot[k] = c
        if c:
            for i, y in enumerate(b):
                a[k + i] -= c * y
    if any(a[:db]):
        raise ArithmeticError("inexact polynomial division")
    return _trim(quot)


def _prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder of a by b."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        la, shift = a[-1], len(a) - 1 - db
        a = [x * lb for x in a]
        for i, y in enumerate(b):
            a[shift + i] -= la * y
        a = list(_trim(a))
    return tuple(a)


def pgcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd in Z[q] (positive leading coefficient)."""
    if not a:
        return primitive(b)
    if not b:
        return primitive(a)
    # peel off powers of q first, the common case for our denominators
    ka, kb = _low_zeros(a), _low_zeros(b)
    k = min(ka, kb)
    a, b = primitive(a[ka:]), primitive(b[kb:])
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        a, b = b, primitive(_prem(a, b))
        if not b:
            return (0,) * k + a
    if b:  # nonzero constant: coprime away from q
        return (0,) * k + (1,)
    return (0,) * k + a


def pstr(p: IntPoly, var: str = "q") -> str:
    if not p:
        return "0"
    parts = []
    for d in range(len(p) - 1, -1, -1):
        c = p[d]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        m = abs(c)
        if d == 0:
            body = str(m)
        else:
            mon = var if d == 1 else f"{var}^{d}"
            body = mon if m == 1 else f"{m}*{mon}"
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# Q(q)

class Scalar:
    """Element of Q(q) in lowest terms.

    Normal form: gcd(num, den) = 1 in Q[q], the integer coefficients of
    num and den have no common factor, and den has a positive leading
    coefficient. Equality and hashing are structural on that form.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=(), den=(1,), _normalized=False):
        if isinstance(num, int):
            num = (num,) if num else ()
        if isinstance(den, int):
            den = (den,)
        num, den = _trim(num), _trim(den)
        if not den:
            raise ZeroDivisionError("Scalar with zero denominator")
        if not _normalized:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # constructors
    @classmethod
    def q(cls, k: int = 1) -> "Scalar":
        if k >= 0:
            return cls((0,) * k + (1,), (1,), True)
        return cls((1,), (0,) * (-k) + (1,), True)

    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, int):
            return cls((x,) if x else (), (1,), True)
        if isinstance(x, Fraction):
            return cls((x.numerator,), (x.denominator,))
        raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")

    # predicates
    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == (1,) and self.den == (1,)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.coerce(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # arithmetic
    def __add__(self, other):
        other = _sc(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            if self.den == (1,):
                return Scalar(padd(self.num, other.num), (1,), True)
            return Scalar(padd(self.num, other.num), self.den)
        num = padd(pmul(self.num, other.den), pmul(other.num, self.den))
        return Scalar(num, pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(pneg(self.num), self.den, True)

    def __sub__(self, other):
        other = _sc(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _sc(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return ZERO
        if self.den == (1,) and other.den == (1,):
            return Scalar(pmul(self.num, other.num), (1,), True)
        # cross-cancel before multiplying keeps the gcds small
        g1 = pgcd(self.num, other.den)
        g2 = pgcd(other.num, self.den)
        n1, d2 = pexactdiv(self.num, g1), pexactdiv(other.den, g1)
        n2, d1 = pexactdiv(other.num, g2), pexactdiv(self.den, g2)
        return Scalar(pmul(n1, n2), pmul(d1, d2))

    __rmul__ = __mul__

    def inv(self) -> "Scalar":
        if not self.num:
            raise ZeroDivisionError("inverse of zero Scalar")
        return Scalar(self.den, self.num)

    def __truediv__(self, other):
        other = _sc(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def evaluate(self, value) -> Fraction:
        """Substitute q = value (a rational number)."""
        v = Fraction(value)
        n = sum(c * v ** i for i, c in enumerate(self.num))
        d = sum(c * v ** i for i, c in enumerate(self.den))
        if d == 0:
            raise ZeroDivisionError(f"pole at q = {value}")
        return Fraction(n) / d

    def is_polynomial(self) -> bool:
        return self.den == (1,)

    def __str__(self):
        if self.den == (1,):
            return pstr(self.num)
        num = pstr(self.num)
        den = pstr(self.den)
        if len([c for c in self.num if c]) > 1:
            num = f"({num})"
        if not _is_bare_monomial(self.den):
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"Scalar({self})"


def _is_bare_monomial(p):
    nz = [d for d, c in enumerate(p) if c]
    return len(nz) == 1 and (nz[0] == 0 or p[nz[0]] == 1)


def _sc(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar.coerce(x)
    return NotImplemented


def _normalize(num: IntPoly, den: IntPoly):
    if not num:
        return (), (1,)
    g = pgcd(num, den)
    if g != (1,):
        num, den = pexactdiv(num, g), pexactdiv(den, g)
    c = gcd(content(num), content(den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    return num, den


ZERO = Scalar((), (1,), True)
ONE = Scalar((1,), (1,), True)
Q = Scalar.q()


# ---------------------------------------------------------------------------
# Laurent polynomials over Q(q)

class Laurent:
    """Element of Q(q)[z_1^{+-1}, ..., z_t^{+-1}].

    ``terms`` maps exponent tuples in Z^t to nonzero Scalars. With t = 0 this
    is just Q(q), with the single exponent ``()``.
    """

    __slots__ = ("t", "terms", "_hash")

    def __init__(self, t: int, terms=None):
        self.t = t
        clean = {}
        if terms:
            for e, c in terms.items():
                if len(e) != t:
                    raise ValueError(f"exponent {e} has wrong length for t={t}")
                if c:
                    clean[tuple(e)] = Scalar.coerce(c)
        self.terms: Dict[Tuple[int, ...], Scalar] = clean
        self._hash = None

    @classmethod
    def constant(cls, t: int, c) -> "Laurent":
        c = Scalar.coerce(c)
        return cls(t, {(0,) * t: c} if c else {})

    @classmethod
    def monomial(cls, t: int, exp, c=1) -> "Laurent":
        return cls(t, {tuple(exp): Scalar.coerce(c)})

    @classmethod
    def var(cls, t: int, i: int, power: int = 1) -> "Laurent":
        e = [0] * t
        e[i] = power
        return cls(t, {tuple(e): ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_unit(self) -> bool:
        return len(self.terms) == 1

    def is_scalar(self) -> bool:
        """True for 0 and for constants (elements of Q(q))."""
        return not self.terms or set(self.terms) == {(0,) * self.t}

    def scalar(self) -> Scalar:
        if not self.is_scalar():
            raise ValueError(f"{self} is not a constant")
        return self.terms.get((0,) * self.t, ZERO)

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get((0,) * self.t) == ONE

    def _key(self):
        return tuple(sorted(self.terms.items(), key=lambda kv: kv[0]))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = Laurent.constant(self.t, other)
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.t == other.t and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.t, self._key()))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, Laurent):
            if other.t != self.t:
                raise ValueError(f"Laurent rings differ: t={self.t} vs t={other.t}")
            return other
        if isinstance(other, (int, Fraction, Scalar)):
            return Laurent.constant(self.t, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            v = c if v is None else v + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return _laurent_raw(self.t, out)

    __radd__ = __add__

    def __neg__(self):
        return _laurent_raw(self.t, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return _laurent_raw(self.t, {})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = c1 * c2
                w = out.get(e)
                if w is not None:
                    v = v + w
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return _laurent_raw(self.t, out)

    __rmul__ = __mul__

    def inv(self) -> "Laurent":
        if len(self.terms) != 1:
            raise ZeroDivisionError(f"{self} is not a unit of the Laurent ring")
        (e, c), = self.terms.items()
        return _laurent_raw(self.t, {tuple(-x for x in e): c.inv()})

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        out, base = Laurent.constant(self.t, 1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def to_str(self, names: Sequence[str]) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mon = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            parts.append(_term_str(c, mon))
        return _join_terms(parts)

    def __str__(self):
        return self.to_str([f"z{i + 1}" for i in range(self.t)])

    def __repr__(self):
        return f"Laurent({self})"


def _laurent_raw(t, terms):
    out = Laurent.__new__(Laurent)
    out.t = t
    out.terms = terms
    out._hash = None
    return out


def _term_str(c: Scalar, mon: str):
    """Render ``c * mon`` as (sign, body); parenthesizes compound coefficients."""
    simple = c.den == (1,) and len([x for x in c.num if x]) == 1
    if mon and c == ONE:
        return ("+", mon)
    if mon and c == -ONE:
        return ("-", mon)
    if simple:
        s = str(c)
        sign, s = ("-", s[1:]) if s.startswith("-") else ("+", s)
        return (sign, f"{s}*{mon}" if mon else s)
    return ("+", f"({c})*{mon}" if mon else f"({c})")


def _join_terms(parts) -> str:
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# automorphisms

class DiagonalAutomorphism:
    """sigma(z_i) = lambda_i z_i with every lambda_i a nonzero Scalar."""

    __slots__ = ("scale",)

    def __init__(self, scale: Iterable):
        scale = tuple(Scalar.coerce(x) for x in scale)
        for lam in scale:
            if not lam:
                raise ValueError("automorphism scale factors must be nonzero")
        self.scale = scale

    @classmethod
    def identity(cls, t: int) -> "DiagonalAutomorphism":
        return cls([ONE] * t)

    @property
    def t(self) -> int:
        return len(self.scale)

    def is_identity(self) -> bool:
        return all(lam == ONE for lam in self.scale)

    def factor(self, exp) -> Scalar:
        out = ONE
        for lam, k in zip(self.scale, exp):
            if k:
                out = out * lam ** k
        return out

    def __call__(self, c: Laurent) -> Laurent:
        if c.t != self.t:
            raise ValueError(f"automorphism on t={self.t} applied to t={c.t}")
        if self.is_identity():
            return c
        return _laurent_raw(c.t, {e: v * self.factor(e) for e, v in c.terms.items()})

    def power(self, k: int) -> "DiagonalAutomorphism":
        return DiagonalAutomorphism([lam ** k for lam in self.scale])

    def inverse(self) -> "DiagonalAutomorphism":
        return self.power(-1)

    def compose(self, other: "DiagonalAutomorphism") -> "DiagonalAutomorphism":
        return DiagonalAutomorphism([a * b for a, b in zip(self.scale, other.scale)])

    def __eq__(self, other):
        return isinstance(other, DiagonalAutomorphism) and self.scale == other.scale

    def __hash__(self):
        return hash(self.scale)

    def __repr__(self):
        return f"DiagonalAutomorphism({', '.join(map(str, self.scale))})"


def apply_automorphism(sigma: DiagonalAutomorphism, c: Laurent) -> Laurent:
    return sigma(c)


def is_unit(c) -> bool:
    if isinstance(c, Scalar):
        return not c.is_zero()
    return c.is_unit()

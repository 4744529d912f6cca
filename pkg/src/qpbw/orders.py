"""
Exponent vectors and admissible orders on N^n.

Three order families are provided: ``Lex`` (with e_1 < e_2 < ... < e_n),
``WeightLex`` (compare <w, a> first, break ties with Lex) and
``MatrixLex`` (compare aM under a base order, break ties with Lex).

Every order exposes ``key(a)``, a tuple whose natural Python ordering
realizes the order, so orders plug straight into ``sorted``/``max``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Sequence, Tuple

Exponent = Tuple[int, ...]


class Ordering(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def _check_len(a, b):
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")


def dot(w: Sequence[int], a: Sequence[int]) -> int:
    _check_len(w, a)
    return sum(x * y for x, y in zip(w, a))


def add(a: Sequence[int], b: Sequence[int]) -> Exponent:
    _check_len(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> Exponent:
    _check_len(a, b)
    return tuple(x - y for x, y in zip(a, b))


def unit(n: int, i: int) -> Exponent:
    """The basis vector e_i of Z^n, 0-based ``i``."""
    return tuple(1 if k == i else 0 for k in range(n))


def vec_mat(a: Sequence[int], M: Sequence[Sequence[int]]) -> Exponent:
    """Row vector times matrix: ``a`` has one entry per row of ``M``."""
    if len(a) != len(M):
        raise ValueError(f"dimension mismatch: vector {len(a)} vs {len(M)} rows")
    ncols = len(M[0]) if M else 0
    return tuple(sum(a[r] * M[r][c] for r in range(len(M))) for c in range(ncols))


def _lex_key(a):
    # e_1 < ... < e_n: the last coordinate is the most significant one
    return tuple(reversed(a))


class AdmissibleOrder:
    """Base class; subclasses implement ``key``."""

    def key(self, a: Sequence[int]) -> tuple:
        raise NotImplementedError

    def compare(self, a: Sequence[int], b: Sequence[int]) -> Ordering:
        _check_len(a, b)
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return Ordering.LT
        if ka > kb:
            return Ordering.GT
        return Ordering.EQ

    def lt(self, a, b) -> bool:
        return self.compare(a, b) is Ordering.LT

    def max(self, vectors):
        return max(vectors, key=self.key)


@dataclass(frozen=True)
class Lex(AdmissibleOrder):
    def key(self, a):
        return _lex_key(a)


@dataclass(frozen=True)
class WeightLex(AdmissibleOrder):
    w: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "w", tuple(int(x) for x in self.w))
        if any(x < 1 for x in self.w):
            raise ValueError(f"weight vector must be strictly positive, got {self.w}")

    def key(self, a):
        return (dot(self.w, a), _lex_key(a))


@dataclass(frozen=True)
class MatrixLex(AdmissibleOrder):
    """a < b iff aM < bM under ``base``, or aM == bM and a <_lex b.

    ``M`` has one row per coordinate of the compared vectors. Admissibility
    is not checked here.
    """

    M: Tuple[Tuple[int, ...], ...]
    base: AdmissibleOrder = Lex()

    def __post_init__(self):
        M = tuple(tuple(int(x) for x in row) for row in self.M)
        if M and len({len(r) for r in M}) != 1:
            raise ValueError("matrix rows have different lengths")
        object.__setattr__(self, "M", M)

    def image(self, a):
        return vec_mat(a, self.M)

    def key(self, a):
        if len(a) != len(self.M):
            raise ValueError(f"dimension mismatch: vector {len(a)} vs {len(self.M)} rows")
        return (self.base.key(self.image(a)), _lex_key(a))


def compare(order: AdmissibleOrder, a, b) -> Ordering:
    return order.compare(a, b)

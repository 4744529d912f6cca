"""
Example algebras: quantum affine spaces and their localizations, the
quantized Weyl algebra, a three-variable algebra with a quadratic tail,
and U_q(sl_2) over Q(q)[K^{+-1}].

Every entry is also shipped as a presentation file under ``qpbw/data``.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Callable, Dict, Optional, Sequence, Tuple

from .orders import AdmissibleOrder, WeightLex
from .pbw import AlgebraPresentation, CoeffDomain
from .qspace import QuantumSpacePresentation
from .scalars import DiagonalAutomorphism, Laurent, Q, Scalar


def make_quantum_space(Q_table: Sequence[Sequence], t: int = 0, names=None) -> QuantumSpacePresentation:
    return QuantumSpacePresentation(Q_table, t, names)


def quantum_space_algebra(A: QuantumSpacePresentation, name: str = "") -> AlgebraPresentation:
    """Tail-free PBW presentation of the polynomial part of ``A``."""
    q = {(j, i): A.Q[j][i] for j in range(A.s) for i in range(j)}
    return AlgebraPresentation(A.names, q=q, name=name)


def uniform_q_space(s: int, t: int = 0, qval=None) -> QuantumSpacePresentation:
    qval = Q if qval is None else Scalar.coerce(qval)
    return QuantumSpacePresentation.from_lower(
        {(j, i): qval for j in range(s) for i in range(j)}, s, t)


def make_quantized_weyl(qval=None) -> AlgebraPresentation:
    qval = Q if qval is None else Scalar.coerce(qval)
    if not qval:
        raise ValueError("q must be a unit")
    return AlgebraPresentation(["x1", "x2"], q={(1, 0): qval},
                               tails={(1, 0): {(0, 0): 1}}, name="weyl")


def make_uq_sl2() -> AlgebraPresentation:
    """x1 = F, x2 = E over Lambda = Q(q)[K^{+-1}].

    F K = q^2 K F, E K = q^-2 K E, E F = F E + (K - K^-1)/(q - q^-1).
    """
    K = Laurent.var(1, 0)
    tail = (K - K.inv()) / (Q - Q.inv())
    return AlgebraPresentation(
        ["F", "E"], CoeffDomain(("K",)),
        q={(1, 0): 1},
        sigma=[DiagonalAutomorphism([Q ** 2]), DiagonalAutomorphism([Q ** -2])],
        tails={(1, 0): {(0, 0): tail}},
        name="uq_sl2",
    )


def make_tail3() -> AlgebraPresentation:
    """x2 x1 = q x1 x2, x3 x2 = q x2 x3, x3 x1 = x1 x3 + x2^2."""
    return AlgebraPresentation(["x1", "x2", "x3"], q={(1, 0): Q, (2, 1): Q},
                               tails={(2, 0): {(0, 2, 0): 1}}, name="tail3")


def two_parameter_space() -> QuantumSpacePresentation:
    """s = 3 with q21 = q, q31 = 2, q32 = q^-2."""
    return QuantumSpacePresentation.from_lower(
        {(1, 0): Q, (2, 0): Scalar(2), (2, 1): Q ** -2}, 3)


@dataclass
class CatalogEntry:
    name: str
    build: Callable[[], AlgebraPresentation]
    order: AdmissibleOrder
    expected_w: Tuple[int, ...]
    graded: Callable[[], AlgebraPresentation]
    inverted: int = 0
    description: str = ""

    def space(self) -> Optional[QuantumSpacePresentation]:
        """The quantum space (with localization) when the entry is tail-free over Q(q)."""
        A = self.build()
        if A.tails or A.t:
            return None
        return presentation_to_space(A, self.inverted)

    def file_text(self) -> str:
        return resources.files("qpbw.data").joinpath(f"{self.name}.alg").read_text()


def presentation_to_space(A: AlgebraPresentation, inverted: int = 0) -> QuantumSpacePresentation:
    if A.tails or A.t:
        raise ValueError("need a tail-free presentation over Q(q)")
    lower = {}
    for (j, i), v in A.q.items():
        lower[j, i] = v.scalar()
    return QuantumSpacePresentation.from_lower(lower, A.s, inverted, A.names)


def _space_entry(name, space_fn, t, description):
    def build():
        return quantum_space_algebra(space_fn(), name)
    return CatalogEntry(name, build, WeightLex((1,) * space_fn().s), (1,) * space_fn().s,
                        build, inverted=t, description=description)


def _graded(fn, gname):
    def build():
        return fn().with_tails({}, name=gname)
    return build


CATALOG: Dict[str, CatalogEntry] = {}


def _register(entry: CatalogEntry):
    CATALOG[entry.name] = entry


_register(_space_entry("quantum_plane", lambda: uniform_q_space(2), 0,
                       "quantum plane x2 x1 = q x1 x2"))
_register(_space_entry("qaffine3", lambda: uniform_q_space(3), 0,
                       "quantum affine 3-space, q_ji = q"))
_register(_space_entry("qaffine3_two_param", two_parameter_space, 0,
                       "quantum affine 3-space with q21 = q, q31 = 2, q32 = q^-2"))
_register(_space_entry("mixed_torus3", lambda: uniform_q_space(3, 1), 1,
                       "k_q[x1^{+-1}, x2, x3]"))
_register(_space_entry("laurent1", lambda: uniform_q_space(1, 1), 1,
                       "Laurent polynomial ring k[x1^{+-1}]"))
_register(CatalogEntry("weyl", make_quantized_weyl, WeightLex((1, 1)), (1, 1),
                       _graded(make_quantized_weyl, "gr(weyl)"),
                       description="quantized Weyl algebra x2 x1 = q x1 x2 + 1"))
_register(CatalogEntry("tail3", make_tail3, WeightLex((2, 1, 2)), (2, 1, 1),
                       _graded(make_tail3, "gr(tail3)"),
                       description="x3 x1 = x1 x3 + x2^2 with q-commuting neighbours"))
_register(CatalogEntry("uq_sl2", make_uq_sl2, WeightLex((1, 1)), (1, 1),
                       _graded(make_uq_sl2, "gr(uq_sl2)"),
                       description="U_q(sl_2): F, E over Q(q)[K^{+-1}]"))


def get(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(sorted(CATALOG))}") from None

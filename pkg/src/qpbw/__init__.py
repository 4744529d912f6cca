"""
PBW-presented algebras with lower-order tails, re-filtering by exact weight
vector search, quantum affine spaces and q-Koszul grade computations.
"""

from .orders import Lex, MatrixLex, Ordering, WeightLex, compare, dot
from .scalars import Q, DiagonalAutomorphism, Laurent, Scalar, apply_automorphism, is_unit
from .pbw import (AlgebraPresentation, CoeffDomain, InconsistentPresentation,
                  associativity_check, check_condition_iii, mdeg, multiply, poly_str)
from .refilter import (CSet, Infeasible, WeightCertificate, associated_graded, collect_c_set,
                       filtration_degree, find_weight_vector, leading_form, refilter_pipeline,
                       verify_certificate)
from .qspace import (QuantumSpacePresentation, gkdim_estimate, growth_count,
                     monomial_quotient_gkdim, multiply_torus, qcommute_factor)
from .homology import build_qkoszul, cm_check, grade_via_ext, verify_complex
from .catalog import CATALOG, make_quantized_weyl, make_quantum_space, make_uq_sl2
from .syntax import ParseError, parse_poly, parse_presentation, serialize_presentation

__all__ = [
    "Lex",
    "MatrixLex",
    "Ordering",
    "WeightLex",
    "compare",
    "dot",
    "Q",
    "DiagonalAutomorphism",
    "Laurent",
    "Scalar",
    "apply_automorphism",
    "is_unit",
    "AlgebraPresentation",
    "CoeffDomain",
    "InconsistentPresentation",
    "associativity_check",
    "check_condition_iii",
    "mdeg",
    "multiply",
    "poly_str",
    "CSet",
    "Infeasible",
    "WeightCertificate",
    "associated_graded",
    "collect_c_set",
    "filtration_degree",
    "find_weight_vector",
    "leading_form",
    "refilter_pipeline",
    "verify_certificate",
    "QuantumSpacePresentation",
    "gkdim_estimate",
    "growth_count",
    "monomial_quotient_gkdim",
    "multiply_torus",
    "qcommute_factor",
    "build_qkoszul",
    "cm_check",
    "grade_via_ext",
    "verify_complex",
    "CATALOG",
    "make_quantized_weyl",
    "make_quantum_space",
    "make_uq_sl2",
    "ParseError",
    "parse_poly",
    "parse_presentation",
    "serialize_presentation",
]

__version__ = "0.1.0"

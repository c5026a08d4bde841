"""Exact level-k fusion rings of the rank-2 simple Lie algebras.

Builds the fusion ring of A2, C2 or G2 at any level with arbitrary-precision
integer arithmetic, presents it as a quotient of Z[X, Y], and machine-checks
generating sets of the fusion ideal, including two-element complete
intersection presentations.
"""

from .alcove import WALL, Alcove, FoldResult, enumerate_alcove, fold_to_alcove
from .cartan import (
    AlgebraType,
    RootSystem,
    Weight,
    build_root_system,
    dual_weight,
    level,
    reflect,
    weyl_dimension,
)
from .certify import (
    CIReport,
    PresentationCertificate,
    SearchReport,
    certify_complete_intersection,
    gorenstein_duality_check,
    known_generators,
    natural_ideal_elements,
    search_two_generators,
    verify_presentation,
)
from .fusion import (
    FusionElement,
    FusionTable,
    basis_element,
    cached_fusion_table,
    check_frobenius,
    evaluate_poly,
    fold_class,
    fusion_rule_N,
    fusion_table,
    multiply,
    pairing,
    zero_element,
)
from .polyring import (
    IntPolynomial,
    PolynomialParseError,
    StrongGB,
    format_polynomial,
    normal_form,
    parse_polynomial,
    strong_groebner,
)
from .repring import char_poly, tensor_decompose, weight_multiplicities, weight_system

__version__ = "0.1.0"

__all__ = [
    "AlgebraType",
    "Alcove",
    "CIReport",
    "FoldResult",
    "FusionElement",
    "FusionTable",
    "IntPolynomial",
    "PolynomialParseError",
    "PresentationCertificate",
    "RootSystem",
    "SearchReport",
    "StrongGB",
    "WALL",
    "Weight",
    "basis_element",
    "build_root_system",
    "cached_fusion_table",
    "certify_complete_intersection",
    "char_poly",
    "check_frobenius",
    "dual_weight",
    "enumerate_alcove",
    "evaluate_poly",
    "fold_class",
    "fold_to_alcove",
    "format_polynomial",
    "fusion_rule_N",
    "fusion_table",
    "gorenstein_duality_check",
    "known_generators",
    "level",
    "multiply",
    "natural_ideal_elements",
    "normal_form",
    "pairing",
    "parse_polynomial",
    "reflect",
    "search_two_generators",
    "strong_groebner",
    "tensor_decompose",
    "verify_presentation",
    "weight_multiplicities",
    "weight_system",
    "weyl_dimension",
    "zero_element",
]

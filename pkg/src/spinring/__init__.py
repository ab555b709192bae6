"""Exact workbench for the cohomology rings of genus-2 spin-curve moduli.

The package bundles a small exact computer-algebra kernel (sparse rational
polynomials, Buchberger's algorithm, Artinian quotients with integration)
with the built-in presentations of the even and odd spin components and a
verification suite replaying every recorded claim about them.
"""

from .groebner import GroebnerBasis, Ideal, buchberger, divide, is_member, normal_form, s_polynomial
from .parser import ParseError, RingFile, parse_polynomial, parse_ring_file
from .poly import (
    GREVLEX,
    LEX,
    ContextMismatch,
    Polynomial,
    RingContext,
    RingError,
)
from .quotient import (
    DegreeError,
    NonArtinianError,
    PointNormalization,
    QuotientRing,
    build_quotient,
    hilbert_function,
    integrate,
    multiplication_matrix,
    pairing_matrix,
    rank,
)
from .spindomain import (
    ALL,
    COMPONENTS,
    EVEN,
    EXPECTED_HODGE,
    GRAPH_NODE_COUNTS,
    GRAPH_TYPES,
    ODD,
    ODD_CUBIC_RELATIONS,
    Check,
    HodgeDiamond,
    NamedClass,
    SpinRingPresentation,
    Stratum,
    VerificationReport,
    base_class,
    base_context,
    base_intersections,
    boundary_product_relation,
    boundary_sum,
    builtin,
    covering_degree_check,
    groebner_basis,
    hodge_diamond,
    lambda_class,
    lambda_d1_relation,
    lambda_on_base,
    pullback,
    quotient_ring,
    strata,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "ALL",
    "COMPONENTS",
    "Check",
    "ContextMismatch",
    "DegreeError",
    "EVEN",
    "EXPECTED_HODGE",
    "GRAPH_NODE_COUNTS",
    "GRAPH_TYPES",
    "GREVLEX",
    "GroebnerBasis",
    "HodgeDiamond",
    "Ideal",
    "LEX",
    "NamedClass",
    "NonArtinianError",
    "ODD",
    "ODD_CUBIC_RELATIONS",
    "ParseError",
    "PointNormalization",
    "Polynomial",
    "QuotientRing",
    "RingContext",
    "RingError",
    "RingFile",
    "SpinRingPresentation",
    "Stratum",
    "VerificationReport",
    "base_class",
    "base_context",
    "base_intersections",
    "boundary_product_relation",
    "boundary_sum",
    "buchberger",
    "build_quotient",
    "builtin",
    "covering_degree_check",
    "divide",
    "groebner_basis",
    "hilbert_function",
    "hodge_diamond",
    "integrate",
    "is_member",
    "lambda_class",
    "lambda_d1_relation",
    "lambda_on_base",
    "multiplication_matrix",
    "normal_form",
    "pairing_matrix",
    "parse_polynomial",
    "parse_ring_file",
    "pullback",
    "quotient_ring",
    "rank",
    "s_polynomial",
    "strata",
    "verify",
]

"""Exact certification of the Euler class of the variety of maximal tori.

The library computes, in exact integer arithmetic, the rank and the
signature of the motivic Euler characteristic of the homogeneous space
G/N (N the normalizer of a maximal torus) for a reductive group given
by Cartan data, assembles the class in an exact Grothendieck-Witt
model, and certifies that it is a unit.
"""

from .coinvariants import (
    CohomologyReport,
    FakeDegreeTable,
    cohomology_report,
    fake_degree,
    fake_degree_table,
    flag_euler,
    graded_invariant_dims,
    rank_euler,
)
from .errors import (
    ChiTorusError,
    FactorizationFailed,
    FieldMismatch,
    GroupTooLarge,
    IndexOutOfRange,
    InexactDivision,
    InvalidSpec,
    InvariantViolation,
    NonUniqueMaximizer,
    NotInvolution,
    ParityViolation,
)
from .gwring import (
    FieldDescriptor,
    GWElement,
    GWInvariants,
    UnitVerdict,
    from_rank_sgn,
    gw_add,
    gw_mul,
    gw_neg,
    invariants,
    is_unit,
    parse_form_expression,
)
from .intpoly import IntPolynomial
from .pipeline import EulerReport, compute_report
from .rootdata import (
    DEFAULT_ELEMENT_LIMIT,
    CartanSpec,
    RootDatum,
    WeylElement,
    WeylGroup,
    build_root_datum,
    cartan_matrix,
    degrees,
    generate_weyl,
    length_poly,
    simple_reflection,
    weyl_order,
)
from .tori import (
    GaloisTorus,
    InvolutionClass,
    ToriReport,
    TorusDecomposition,
    compact_rank,
    decompose_torus,
    involution_classes,
    orbit_chi,
    sgn_euler,
    tori_report,
)

__version__ = "0.1.0"

__all__ = [
    "CartanSpec",
    "ChiTorusError",
    "CohomologyReport",
    "DEFAULT_ELEMENT_LIMIT",
    "EulerReport",
    "FactorizationFailed",
    "FakeDegreeTable",
    "FieldDescriptor",
    "FieldMismatch",
    "GWElement",
    "GWInvariants",
    "GaloisTorus",
    "GroupTooLarge",
    "IndexOutOfRange",
    "InexactDivision",
    "IntPolynomial",
    "InvalidSpec",
    "InvariantViolation",
    "InvolutionClass",
    "NonUniqueMaximizer",
    "NotInvolution",
    "ParityViolation",
    "RootDatum",
    "ToriReport",
    "TorusDecomposition",
    "UnitVerdict",
    "WeylElement",
    "WeylGroup",
    "build_root_datum",
    "cartan_matrix",
    "cohomology_report",
    "compact_rank",
    "compute_report",
    "decompose_torus",
    "degrees",
    "fake_degree",
    "fake_degree_table",
    "flag_euler",
    "from_rank_sgn",
    "generate_weyl",
    "graded_invariant_dims",
    "gw_add",
    "gw_mul",
    "gw_neg",
    "invariants",
    "involution_classes",
    "is_unit",
    "length_poly",
    "orbit_chi",
    "parse_form_expression",
    "rank_euler",
    "sgn_euler",
    "simple_reflection",
    "tori_report",
    "weyl_order",
]

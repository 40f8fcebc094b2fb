"""Exact verification and transformation of rational polyhedral fans.

The toolkit encodes simplicial fans over arbitrary-precision integer rays,
certifies completeness (facet pairing plus a covering-degree witness) and
smoothness, replays the stellar-subdivision pipeline that desingularizes the
fan over the Barnette sphere, classifies box lattice points by the dimension
of their minimal face, grows the infinite family of smooth complete fans
with non-polytopal underlying spheres, and checks claimed convex-polytope
realizations of simplicial spheres.  Every geometric test is exact; the only
compiled code is an optional scan kernel with pure fallbacks.
"""

from .complexes import (
    ObstructionFact,
    ObstructionReport,
    PseudomanifoldReport,
    SimplicialComplex,
    euler_characteristic,
    f_vector,
    link,
    pseudomanifold_check,
    star,
    suspension,
    underlying_complex,
    verify_barnette_obstruction,
)
from .errors import (
    DegenerateFacet,
    DimensionMismatch,
    FankitError,
    FaceNotPresent,
    MissingCoordinates,
    MissingLabel,
    NonGenericWitness,
    NotContained,
    OutsideSupport,
    ParseError,
    PointIsRay,
    SingularBasis,
    UnpairedFacet,
    ZeroVector,
)
from .fan import (
    CompletenessReport,
    Fan,
    Ray,
    SimplicialCone,
    SmoothnessReport,
    coefficients,
    cone_meets_open_orthant,
    contains,
    facet_pairing,
    minimal_face,
    open_orthant_certificate,
    opposite_sides,
    smoothness_report,
    verify_completeness,
)
from .linalg import determinant, facet_normal, make_primitive, solve_coefficients
from .polytopality import (
    Realization,
    RealizationReport,
    certify_realization,
    convex_position,
)
from .scan import (
    COMPILED_KERNEL_AVAILABLE,
    PointClass,
    ScanReport,
    classify_point,
    scan_box,
)
from .subdivide import (
    SubdivisionStep,
    desingularize_barnette,
    generate_family,
    refines,
    stellar_subdivide,
    suspend_fan,
)

__version__ = "0.1.0"

__all__ = [
    "COMPILED_KERNEL_AVAILABLE",
    "CompletenessReport",
    "DegenerateFacet",
    "DimensionMismatch",
    "FaceNotPresent",
    "Fan",
    "FankitError",
    "MissingCoordinates",
    "MissingLabel",
    "NonGenericWitness",
    "NotContained",
    "ObstructionFact",
    "ObstructionReport",
    "OutsideSupport",
    "ParseError",
    "PointClass",
    "PointIsRay",
    "PseudomanifoldReport",
    "Ray",
    "Realization",
    "RealizationReport",
    "ScanReport",
    "SimplicialComplex",
    "SimplicialCone",
    "SingularBasis",
    "SmoothnessReport",
    "SubdivisionStep",
    "UnpairedFacet",
    "ZeroVector",
    "certify_realization",
    "classify_point",
    "coefficients",
    "cone_meets_open_orthant",
    "contains",
    "convex_position",
    "desingularize_barnette",
    "determinant",
    "euler_characteristic",
    "f_vector",
    "facet_normal",
    "facet_pairing",
    "generate_family",
    "link",
    "make_primitive",
    "minimal_face",
    "open_orthant_certificate",
    "opposite_sides",
    "pseudomanifold_check",
    "refines",
    "scan_box",
    "smoothness_report",
    "solve_coefficients",
    "star",
    "stellar_subdivide",
    "suspend_fan",
    "suspension",
    "underlying_complex",
    "verify_barnette_obstruction",
    "verify_completeness",
]

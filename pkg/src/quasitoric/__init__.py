"""Exact-arithmetic tools for the generalized Hirzebruch family.

Three constructions of the same family of symplectic quasifolds, one per
subpackage theme: toric data from nonrational polytopes (polyhedron, fan,
quasilattice, delzant), Gale-dual foliation data (gale, foliation), and
nonrational symplectic cuts (cut).  The pipeline module ties them together
and checks they agree.
"""

from .scalar import (
    ONE,
    ParamSpec,
    Q,
    QuadScalar,
    ScalarContextError,
    ScalarDomainError,
    ZERO,
    format_scalar,
    parse_scalar,
    sqrt,
)
from .polyhedron import (
    HalfPlane,
    InfeasibleRegionError,
    NotPointedError,
    Polyhedron2,
    hrep_from_vrep,
    intersect_halfplane,
    polygon,
    vrep_from_hrep,
)
from .fan import Fan2, NonSimpleError, is_complete, is_rational, is_smooth, normal_fan
from .quasilattice import (
    GroupDesc,
    Quasilattice,
    hirzebruch_quasilattice,
    quotient_order,
    z2,
)
from .gale import (
    NotBalancedError,
    PointConfig,
    Triangulation,
    VectorConfig,
    VirtualChamber,
    affine_equivalent,
    augment_ghosts,
    chamber_from_triangulation,
    gale_dual,
    is_balanced,
    is_odd,
    is_polytopal,
    relation_basis,
)
from .delzant import (
    MomentComponent,
    PolytopeTriple,
    QuasifoldPresentation,
    moment_map_coeffs,
    presentation,
)
from .cut import (
    AmountTooLargeError,
    CutResult,
    NoOpCutError,
    blowup_corner,
    cut_moment_maps,
    cut_polyhedron,
)
from .foliation import (
    LVMDatum,
    LeafReport,
    act_c_lambda,
    act_conjugate,
    classify_leaves,
    equivalent_in_Fa,
    project,
    verify_projection_invariance,
)
from .pipeline import (
    PipelineInconsistency,
    ReportDocument,
    build_report,
    hirzebruch_vector_config,
    strip,
    strip_cut,
    trapezoid,
    triangle,
    triangle_blowup,
)

__version__ = "0.1.0"

__all__ = [
    "AmountTooLargeError",
    "CutResult",
    "Fan2",
    "GroupDesc",
    "HalfPlane",
    "InfeasibleRegionError",
    "LVMDatum",
    "LeafReport",
    "MomentComponent",
    "NoOpCutError",
    "NonSimpleError",
    "NotBalancedError",
    "NotPointedError",
    "ONE",
    "ParamSpec",
    "PipelineInconsistency",
    "PointConfig",
    "Polyhedron2",
    "PolytopeTriple",
    "Q",
    "QuadScalar",
    "QuasifoldPresentation",
    "Quasilattice",
    "ReportDocument",
    "ScalarContextError",
    "ScalarDomainError",
    "Triangulation",
    "VectorConfig",
    "VirtualChamber",
    "ZERO",
    "act_c_lambda",
    "act_conjugate",
    "affine_equivalent",
    "augment_ghosts",
    "blowup_corner",
    "build_report",
    "chamber_from_triangulation",
    "classify_leaves",
    "cut_moment_maps",
    "cut_polyhedron",
    "equivalent_in_Fa",
    "format_scalar",
    "gale_dual",
    "hirzebruch_quasilattice",
    "hirzebruch_vector_config",
    "hrep_from_vrep",
    "intersect_halfplane",
    "is_balanced",
    "is_complete",
    "is_odd",
    "is_polytopal",
    "is_rational",
    "is_smooth",
    "moment_map_coeffs",
    "normal_fan",
    "parse_scalar",
    "polygon",
    "presentation",
    "project",
    "quotient_order",
    "relation_basis",
    "sqrt",
    "strip",
    "strip_cut",
    "trapezoid",
    "triangle",
    "triangle_blowup",
    "verify_projection_invariance",
    "vrep_from_hrep",
    "z2",
]

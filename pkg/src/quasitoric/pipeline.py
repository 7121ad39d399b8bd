"""The full generalized-Hirzebruch pipeline for a parameter a > 0.

Builds the trapezoid, its normal fan and quasilattice, the balanced vector
configuration and its dual point configuration, the quasifold presentation,
the strip cut, the triangle blow-up, and the leaf classification, and checks
that the three polytope constructions agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import jsonio
from .cut import CutResult, blowup_corner, cut_polyhedron
from .delzant import (
    MomentComponent,
    PolytopeTriple,
    QuasifoldPresentation,
    moment_map_coeffs,
    presentation,
)
from .fan import Fan2, is_complete, is_rational, is_smooth, normal_fan
from .foliation import LeafReport, classify_leaves
from .gale import (
    PointConfig,
    Triangulation,
    VectorConfig,
    VirtualChamber,
    augment_ghosts,
    chamber_from_triangulation,
    gale_dual,
    is_balanced,
    is_odd,
    is_polytopal,
    relation_basis,
)
from .linalg import Vec2
from .polyhedron import HalfPlane, Polyhedron2, vrep_from_hrep
from .quasilattice import GroupDesc, Quasilattice, hirzebruch_quasilattice, z2
from .scalar import ParamSpec, Q, QuadScalar, format_scalar


class PipelineInconsistency(RuntimeError):
    """The three polytope constructions disagree."""


def trapezoid_halfplanes(a: ParamSpec) -> list[HalfPlane]:
    av = a.value
    return [
        HalfPlane((Q(1), Q(0)), Q(0)),
        HalfPlane((Q(0), Q(1)), Q(0)),
        HalfPlane((Q(0), Q(-1)), Q(-1)),
        HalfPlane((Q(-1), av), Q(-1)),
    ]


def trapezoid(a: ParamSpec) -> Polyhedron2:
    """P_a: vertices (0,0), (0,1), (a+1,1), (1,0)."""
    return vrep_from_hrep(trapezoid_halfplanes(a))


def strip() -> Polyhedron2:
    """[0, inf) x [0, 1]."""
    return vrep_from_hrep(
        [
            HalfPlane((Q(1), Q(0)), Q(0)),
            HalfPlane((Q(0), Q(1)), Q(0)),
            HalfPlane((Q(0), Q(-1)), Q(-1)),
        ]
    )


def triangle(a: ParamSpec) -> Polyhedron2:
    """T_a: vertices (0,-1/a), (0,1), (a+1,1); the weighted projective
    polytope whose corner chop gives P_a."""
    av = a.value
    return vrep_from_hrep(
        [
            HalfPlane((Q(1), Q(0)), Q(0)),
            HalfPlane((Q(0), Q(-1)), Q(-1)),
            HalfPlane((Q(-1), av), Q(-1)),
        ]
    )


def hirzebruch_vector_config(a: ParamSpec) -> VectorConfig:
    """V_a = ((1,0),(0,1),(0,-1),(-1,a),(0,-a)), fifth vector ghost."""
    base = VectorConfig(
        (
            (Q(1), Q(0)),
            (Q(0), Q(1)),
            (Q(0), Q(-1)),
            (Q(-1), a.value),
        )
    )
    return augment_ghosts(base)


def hirzebruch_triangulation() -> Triangulation:
    return Triangulation(
        frozenset(
            frozenset(s)
            for s in (
                {1, 2},
                {2, 4},
                {3, 4},
                {1, 3},
                {1},
                {2},
                {3},
                {4},
                frozenset(),
            )
        )
    )


def triangulation_from_fan(fan: Fan2) -> Triangulation:
    """Maximal pairs from the fan's cones (1-based), plus singletons and
    the empty face."""
    subsets = {frozenset((i + 1, j + 1)) for i, j in fan.maximal_cones}
    for i in range(len(fan.ray_generators)):
        subsets.add(frozenset((i + 1,)))
    subsets.add(frozenset())
    return Triangulation(frozenset(subsets))


def five_constraint_triple(a: ParamSpec) -> PolytopeTriple:
    """The trapezoid triple with the extra half-plane -a*y >= -2a."""
    av = a.value
    return PolytopeTriple(
        trapezoid(a),
        hirzebruch_quasilattice(a),
        (HalfPlane((Q(0), -av), Q(-2) * av),),
    )


def four_facet_triple(a: ParamSpec) -> PolytopeTriple:
    return PolytopeTriple(trapezoid(a), hirzebruch_quasilattice(a))


MOMENT_CONSTANT_NOTE = (
    "moment map: the component with coefficients (1,0,a,1,0) has constant "
    "-(1+a), from pairing coefficients with the facet offsets; the variant "
    "constant -1+a is inconsistent with the level equation "
    "|z1|^2+a|z3|^2+|z4|^2 = 1+a and is not used"
)


@dataclass(frozen=True)
class ReportDocument:
    a: ParamSpec
    polytope: Polyhedron2
    fan: Fan2
    fan_is_complete: bool
    fan_rational_in_z2: bool
    fan_rational_in_qa: bool
    fan_smooth_in_z2: bool
    quasilattice: Quasilattice
    gamma: GroupDesc
    vector_config: VectorConfig
    vc_balanced: bool
    vc_odd: bool
    triangulation: Triangulation
    relation_matrix: tuple[tuple[QuadScalar, ...], ...]
    gale_points: PointConfig
    chamber: VirtualChamber
    polytopal: bool
    polytopal_witness: Vec2 | None
    presentation: QuasifoldPresentation
    moment_components: tuple[MomentComponent, ...]
    cut: CutResult
    blowup_polytope: Polyhedron2
    leaf_report: LeafReport
    warnings: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "a": jsonio.scalar_to_json(self.a.value),
            "polytope": jsonio.polyhedron_to_json(self.polytope),
            "fan": jsonio.fan_to_json(self.fan),
            "fan_predicates": {
                "complete": self.fan_is_complete,
                "rational_in_z2": self.fan_rational_in_z2,
                "rational_in_qa": self.fan_rational_in_qa,
                "smooth_in_z2": self.fan_smooth_in_z2,
            },
            "quasilattice": jsonio.quasilattice_to_json(self.quasilattice),
            "gamma": jsonio.group_to_json(self.gamma),
            "vector_config": jsonio.vector_config_to_json(self.vector_config),
            "vector_config_balanced": self.vc_balanced,
            "vector_config_odd": self.vc_odd,
            "triangulation": jsonio.triangulation_to_json(self.triangulation),
            "relation_matrix": jsonio.matrix_to_json(self.relation_matrix),
            "gale_points": jsonio.point_config_to_json(self.gale_points),
            "chamber": jsonio.chamber_to_json(self.chamber),
            "polytopal": self.polytopal,
            "polytopal_witness": jsonio.vec_to_json(self.polytopal_witness)
            if self.polytopal_witness
            else None,
            "presentation": jsonio.presentation_to_json(self.presentation),
            "moment_components": [
                jsonio.component_to_json(c) for c in self.moment_components
            ],
            "cut": jsonio.cut_result_to_json(self.cut),
            "blowup_polytope": jsonio.polyhedron_to_json(self.blowup_polytope),
            "leaf_report": jsonio.leaf_report_to_json(self.leaf_report),
            "warnings": list(self.warnings),
        }


def strip_cut(a: ParamSpec) -> CutResult:
    """Cut the strip along x = a*y + 1 over the standard lattice."""
    result = cut_polyhedron(strip(), z2(), (Q(-1), a.value), Q(-1))
    return result


def triangle_blowup(a: ParamSpec) -> Polyhedron2:
    """Blow up T_a at (0, -1/a) of amount 1/a: chop with y >= 0."""
    inv_a = Q(1) / a.value
    return blowup_corner(triangle(a), (Q(0), -inv_a), (Q(0), Q(1)), inv_a)


def build_report(a: ParamSpec) -> ReportDocument:
    p = trapezoid(a)
    fan = normal_fan(p)
    qa = hirzebruch_quasilattice(a)
    lattice = z2()
    smooth = is_smooth(fan, lattice)
    vc = hirzebruch_vector_config(a)
    tri = triangulation_from_fan(fan)
    rows = relation_basis(vc)
    lam = gale_dual(vc)
    chamber = chamber_from_triangulation(tri, len(vc))
    polytopal, witness = is_polytopal(lam, chamber)
    pres = presentation(four_facet_triple(a))
    five = five_constraint_triple(a)
    components = moment_map_coeffs(five, [list(r) for r in rows])
    cut_result = strip_cut(a)
    blowup = triangle_blowup(a)
    warnings = [MOMENT_CONSTANT_NOTE]

    same_cut = cut_result.kept_piece.same_region(p)
    same_blow = blowup.same_region(p)
    if not (same_cut and same_blow):
        raise PipelineInconsistency(
            f"polytope constructions disagree for a = {a}: "
            f"cut match {same_cut}, blow-up match {same_blow}"
        )

    return ReportDocument(
        a=a,
        polytope=p,
        fan=fan,
        fan_is_complete=is_complete(fan),
        fan_rational_in_z2=is_rational(fan, lattice),
        fan_rational_in_qa=is_rational(fan, qa),
        fan_smooth_in_z2=smooth,
        quasilattice=qa,
        gamma=qa.gamma_quotient(),
        vector_config=vc,
        vc_balanced=is_balanced(vc),
        vc_odd=is_odd(vc),
        triangulation=tri,
        relation_matrix=tuple(tuple(r) for r in rows),
        gale_points=lam,
        chamber=chamber,
        polytopal=polytopal,
        polytopal_witness=witness,
        presentation=pres,
        moment_components=tuple(components),
        cut=cut_result,
        blowup_polytope=blowup,
        leaf_report=classify_leaves(a),
        warnings=tuple(warnings),
    )

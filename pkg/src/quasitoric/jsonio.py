"""JSON forms for every domain type.

Scalars always carry the exact (r, s, d) triple plus an advisory ``float``
field; consumers must treat the float as a convenience only.
"""

from __future__ import annotations

from .cut import CutResult
from .delzant import MomentComponent, QuasifoldPresentation
from .fan import Fan2
from .foliation import LeafReport
from .gale import PointConfig, Triangulation, VectorConfig, VirtualChamber
from .polyhedron import HalfPlane, Polyhedron2, vrep_from_hrep
from .quasilattice import GroupDesc, Quasilattice
from .scalar import ParamSpec, scalar_from_json, scalar_to_json


def vec_to_json(v):
    return [scalar_to_json(v[0]), scalar_to_json(v[1])]


def vec_from_json(obj):
    return (scalar_from_json(obj[0]), scalar_from_json(obj[1]))


def halfplane_to_json(h: HalfPlane):
    return {"normal": vec_to_json(h.normal), "offset": scalar_to_json(h.offset)}


def halfplane_from_json(obj) -> HalfPlane:
    return HalfPlane(vec_from_json(obj["normal"]), scalar_from_json(obj["offset"]))


def polyhedron_to_json(p: Polyhedron2):
    return {
        "hrep": [halfplane_to_json(h) for h in p.hrep],
        "vertices": [vec_to_json(v) for v in p.vertices],
        "rays": [vec_to_json(r) for r in p.rays],
        "bounded": p.bounded,
        "simple": p.simple,
    }


def polyhedron_from_json(obj) -> Polyhedron2:
    if "hrep" in obj and obj["hrep"]:
        return vrep_from_hrep([halfplane_from_json(h) for h in obj["hrep"]])
    from .polyhedron import hrep_from_vrep

    verts = [vec_from_json(v) for v in obj.get("vertices", [])]
    rays = [vec_from_json(r) for r in obj.get("rays", [])]
    return vrep_from_hrep(hrep_from_vrep(verts, rays))


def fan_to_json(f: Fan2):
    return {
        "ray_generators": [vec_to_json(g) for g in f.ray_generators],
        "maximal_cones": [sorted(c) for c in f.maximal_cones],
    }


def fan_from_json(obj) -> Fan2:
    return Fan2(
        tuple(vec_from_json(g) for g in obj["ray_generators"]),
        tuple(tuple(c) for c in obj["maximal_cones"]),
    )


def quasilattice_to_json(q: Quasilattice):
    return {
        "generators": [vec_to_json(g) for g in q.generators],
        "param": scalar_to_json(q.param.value) if q.param else None,
    }


def quasilattice_from_json(obj) -> Quasilattice:
    param = obj.get("param")
    return Quasilattice(
        tuple(vec_from_json(g) for g in obj["generators"]),
        ParamSpec(scalar_from_json(param)) if param is not None else None,
    )


def group_to_json(g: GroupDesc):
    return {
        "kind": g.kind,
        "order": g.order,
        "rotation_coefficient": scalar_to_json(g.rotation_coefficient)
        if g.rotation_coefficient is not None
        else None,
    }


def vector_config_to_json(v: VectorConfig):
    return {
        "vectors": [vec_to_json(x) for x in v.vectors],
        "ghost_indices": sorted(v.ghost_indices),
    }


def vector_config_from_json(obj) -> VectorConfig:
    return VectorConfig(
        tuple(vec_from_json(x) for x in obj["vectors"]),
        frozenset(obj.get("ghost_indices", ())),
    )


def point_config_to_json(p: PointConfig):
    return {"points": [vec_to_json(x) for x in p.points]}


def point_config_from_json(obj) -> PointConfig:
    return PointConfig(tuple(vec_from_json(x) for x in obj["points"]))


def matrix_to_json(rows):
    return [[scalar_to_json(x) for x in row] for row in rows]


def subsets_to_json(subsets):
    return sorted(sorted(s) for s in subsets)


def triangulation_to_json(t: Triangulation):
    return {"subsets": subsets_to_json(t.subsets)}


def chamber_to_json(c: VirtualChamber):
    return {"subsets": subsets_to_json(c.subsets)}


def chamber_from_json(obj) -> VirtualChamber:
    return VirtualChamber(frozenset(frozenset(s) for s in obj["subsets"]))


def component_to_json(c: MomentComponent):
    return {
        "coefficients": [scalar_to_json(x) for x in c.coefficients],
        "constant": scalar_to_json(c.constant),
        "equation": c.render(),
    }


def presentation_to_json(p: QuasifoldPresentation):
    return {
        "facet_count": p.facet_count,
        "relation_rows": matrix_to_json(p.relation_rows),
        "level_components": [component_to_json(c) for c in p.level_components],
        "group_weight_rows": matrix_to_json(p.group_weight_rows),
        "group_phase_map": p.group_phases(),
        "quasitorus": p.quasitorus,
        "gamma": group_to_json(p.gamma) if p.gamma else None,
        "divisor_orders": [list(x) for x in p.divisor_orders],
    }


def cut_result_to_json(r: CutResult):
    return {
        "kept_piece": polyhedron_to_json(r.kept_piece),
        "other_piece": polyhedron_to_json(r.other_piece),
        "reduced_face": polyhedron_to_json(r.reduced_face),
        "augmented_quasilattice": quasilattice_to_json(r.augmented_quasilattice),
        "gamma": group_to_json(r.gamma),
        "cut_halfplane": halfplane_to_json(r.cut_halfplane),
    }


def leaf_report_to_json(r: LeafReport):
    return {
        "generic_leaf": r.generic_leaf,
        "generic_closure": r.generic_closure,
        "special_leaf_generic_stratum": r.special_leaf_generic_stratum,
        "special_leaf_degenerate_stratum": r.special_leaf_degenerate_stratum,
        "covering_degree": r.covering_degree,
        "notes": list(r.notes),
    }

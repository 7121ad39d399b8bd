"""Fans in the plane: normal fans of pointed polyhedra and the
simplicial / rational / smooth / complete predicate suite."""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import Vec2, cross, dot, is_zero_vec, primitive_int_vector, rot90, solve2x2
from .polyhedron import Polyhedron2, sort_by_angle
from .quasilattice import Quasilattice
from .scalar import Q


class NonSimpleError(ValueError):
    """A vertex lies on more than two facets."""


class NotALatticeError(ValueError):
    """Smoothness asked relative to a dense quasilattice."""


@dataclass(frozen=True)
class Fan2:
    """Rays (as explicit generator vectors, never rescaled) and maximal
    cones given as pairs of ray indices."""

    ray_generators: tuple[Vec2, ...]
    maximal_cones: tuple[tuple[int, int], ...]
    # optional provenance: vertex (as a point) per maximal cone, facet per ray
    cone_vertices: tuple[Vec2, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        gens = tuple(tuple(Q(x) for x in g) for g in self.ray_generators)
        object.__setattr__(self, "ray_generators", gens)
        for g in gens:
            if is_zero_vec(g):
                raise ValueError("zero ray generator")
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                if cross(gens[i], gens[j]).is_zero() and dot(gens[i], gens[j]).sign() > 0:
                    raise ValueError(f"rays {i} and {j} are positive multiples")
        for i, j in self.maximal_cones:
            if cross(gens[i], gens[j]).is_zero():
                raise ValueError(f"cone ({i},{j}) is degenerate")


def normal_fan(p: Polyhedron2) -> Fan2:
    """Rays are the inward facet normals as stored in the hrep; maximal
    cones pair the two facets meeting at each vertex."""
    rays = tuple(h.normal for h in p.hrep)
    cones = []
    for v in p.vertices:
        tight = [i for i, h in enumerate(p.hrep) if h.tight(v)]
        if len(tight) != 2:
            raise NonSimpleError(
                f"vertex ({v[0]}, {v[1]}) lies on {len(tight)} facets"
            )
        cones.append(tuple(tight))
    return Fan2(rays, tuple(cones), cone_vertices=tuple(p.vertices))


def is_complete(fan: Fan2) -> bool:
    """Do the maximal cones tile the plane?  True iff the rays, in angular
    order, are consecutively paired by the cones, each pair salient."""
    gens = fan.ray_generators
    k = len(gens)
    if k < 3 or len(fan.maximal_cones) != k:
        return False
    order = sort_by_angle(list(gens))
    index_of = {g: i for i, g in enumerate(gens)}
    ring = [index_of[g] for g in order]
    expected = set()
    for t in range(k):
        i, j = ring[t], ring[(t + 1) % k]
        if cross(gens[i], gens[j]).sign() <= 0:
            return False  # gap or reflex step in the angular sweep
        expected.add(frozenset((i, j)))
    return expected == {frozenset(c) for c in fan.maximal_cones}


def is_rational(fan: Fan2, q: Quasilattice) -> bool:
    """Every ray contains a nonzero point of q."""
    return all(q.ray_meets(g) for g in fan.ray_generators)


def _primitive_in_lattice(g: Vec2, basis) -> list[int] | None:
    """Primitive lattice coordinates of the ray through g, or None if the
    ray misses the lattice."""
    c = solve2x2(
        (basis[0][0], basis[1][0]),
        (basis[0][1], basis[1][1]),
        g,
    )
    if c is None:
        return None
    if not (c[0].is_rational() and c[1].is_rational()):
        return None
    return primitive_int_vector([c[0].r, c[1].r])


def is_smooth(fan: Fan2, lattice: Quasilattice) -> bool:
    """Rational with respect to the lattice, and the primitive generators of
    each maximal cone form a lattice basis (determinant +-1)."""
    if not lattice.is_lattice():
        raise NotALatticeError("primitivity is undefined for dense quasilattices")
    basis = lattice.lattice_basis()
    prims = []
    for g in fan.ray_generators:
        p = _primitive_in_lattice(g, basis)
        if p is None:
            return False  # ray not rational in this lattice
        prims.append(p)
    for i, j in fan.maximal_cones:
        det = prims[i][0] * prims[j][1] - prims[i][1] * prims[j][0]
        if abs(det) != 1:
            return False
    return True

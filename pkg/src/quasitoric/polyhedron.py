"""Exact 2D convex polyhedra: half-plane (H) and vertex+ray (V) descriptions.

Polyhedra may be unbounded but must be pointed (have at least one vertex).
Vertex enumeration is the O(n^2) pairwise-intersection method, which is
exact and entirely adequate in the plane.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from .linalg import Vec2, cross, dot, is_zero_vec, rot90, smul, solve2x2, vadd, vneg, vsub
from .scalar import Q, QuadScalar


class InfeasibleRegionError(ValueError):
    """The half-plane system has empty intersection."""


class NotPointedError(ValueError):
    """The region is nonempty but has no vertex (full plane, slab, ...)."""


@dataclass(frozen=True)
class HalfPlane:
    """The constraint <mu, normal> >= offset, with inward-pointing normal."""

    normal: Vec2
    offset: QuadScalar

    def __post_init__(self):
        if is_zero_vec(self.normal):
            raise ValueError("half-plane normal must be nonzero")
        object.__setattr__(self, "offset", Q(self.offset))

    def slack(self, point: Vec2) -> QuadScalar:
        return dot(point, self.normal) - self.offset

    def holds(self, point: Vec2) -> bool:
        return self.slack(point).sign() >= 0

    def tight(self, point: Vec2) -> bool:
        return self.slack(point).is_zero()

    def flipped(self) -> "HalfPlane":
        return HalfPlane(vneg(self.normal), -self.offset)

    def _key(self):
        # scale-normalized key for duplicate detection only; the stored
        # normal is data and is never rescaled
        n, o = self.normal, self.offset
        lead = n[0] if not n[0].is_zero() else n[1]
        inv = lead.inv()
        return (n[0] * inv, n[1] * inv, o * inv, lead.sign())


def _dedup_halfplanes(hrep):
    seen = set()
    out = []
    for h in hrep:
        k = h._key()
        if k not in seen:
            seen.add(k)
            out.append(h)
    return out


def _angle_class(v: Vec2) -> int:
    """0 for the upper half turn (includes +x axis), 1 for the lower."""
    s1 = v[1].sign()
    if s1 > 0 or (s1 == 0 and v[0].sign() > 0):
        return 0
    return 1


def _angle_cmp(u: Vec2, v: Vec2) -> int:
    cu, cv = _angle_class(u), _angle_class(v)
    if cu != cv:
        return -1 if cu < cv else 1
    c = cross(u, v).sign()
    return -c


def sort_by_angle(vectors: list[Vec2]) -> list[Vec2]:
    """Counterclockwise angular order starting from the +x axis."""
    return sorted(vectors, key=functools.cmp_to_key(_angle_cmp))


def _lex_cmp(p: Vec2, q: Vec2) -> int:
    for a, b in zip(p, q):
        s = (a - b).sign()
        if s:
            return s
    return 0


def _order_ccw(points: list[Vec2]) -> list[Vec2]:
    if len(points) <= 2:
        return sorted(points, key=functools.cmp_to_key(_lex_cmp))
    n = len(points)
    cx = points[0][0]
    cy = points[0][1]
    for p in points[1:]:
        cx = cx + p[0]
        cy = cy + p[1]
    centroid = (cx / n, cy / n)
    rel = sorted(points, key=functools.cmp_to_key(
        lambda p, q: _angle_cmp(vsub(p, centroid), vsub(q, centroid))))
    # rotate so the lexicographically smallest vertex comes first
    best = 0
    for i in range(1, n):
        if _lex_cmp(rel[i], rel[best]) < 0:
            best = i
    return rel[best:] + rel[:best]


def _canonical_ray(r: Vec2) -> Vec2:
    lead = r[0] if not r[0].is_zero() else r[1]
    return smul(abs(lead).inv(), r)


def feasible(hrep: list[HalfPlane]) -> bool:
    """Exact Fourier-Motzkin feasibility for <mu, n_i> >= c_i in the plane."""
    # constraints as a*x + b*y >= c
    cons = [(h.normal[0], h.normal[1], h.offset) for h in hrep]
    lower, upper, rest = [], [], []  # bounds on x given y
    for a, b, c in cons:
        sa = a.sign()
        if sa > 0:
            lower.append((b, c, a))  # x >= (c - b*y)/a
        elif sa < 0:
            upper.append((b, c, a))  # x <= (c - b*y)/a
        else:
            rest.append((b, c))  # b*y >= c
    # eliminate x: for each (lower, upper) pair require compatibility
    for bl, cl, al in lower:
        for bu, cu, au in upper:
            # (cl - bl*y)/al <= (cu - bu*y)/au with al>0, au<0
            # multiply out: au*(cl - bl*y) >= al*(cu - bu*y)   (au<0 flips)
            b = al * bu - au * bl
            c = al * cu - au * cl
            rest.append((b, c))
    lo, hi = None, None
    for b, c in rest:
        sb = b.sign()
        if sb > 0:
            v = c / b
            if lo is None or v > lo:
                lo = v
        elif sb < 0:
            v = c / b
            if hi is None or v < hi:
                hi = v
        elif c.sign() > 0:
            return False
    return lo is None or hi is None or lo <= hi


@dataclass(frozen=True)
class Polyhedron2:
    """A pointed 2D convex polyhedron; vertices counterclockwise, plus
    recession-ray directions when unbounded."""

    hrep: tuple[HalfPlane, ...]
    vertices: tuple[Vec2, ...]
    rays: tuple[Vec2, ...] = field(default_factory=tuple)

    @property
    def bounded(self) -> bool:
        return not self.rays

    @property
    def simple(self) -> bool:
        return all(
            sum(1 for h in self.hrep if h.tight(v)) == 2 for v in self.vertices
        )

    def contains(self, point: Vec2) -> bool:
        return all(h.holds(point) for h in self.hrep)

    def interior_contains(self, point: Vec2) -> bool:
        return all(h.slack(point).sign() > 0 for h in self.hrep)

    def area(self) -> QuadScalar:
        if not self.bounded:
            raise ValueError("area of an unbounded polyhedron")
        total = Q(0)
        vs = self.vertices
        for i in range(len(vs)):
            total = total + cross(vs[i], vs[(i + 1) % len(vs)])
        return abs(total) / 2

    def same_region(self, other: "Polyhedron2") -> bool:
        return (
            set(self.vertices) == set(other.vertices)
            and {_canonical_ray(r) for r in self.rays}
            == {_canonical_ray(r) for r in other.rays}
        )

    def __eq__(self, other):
        if not isinstance(other, Polyhedron2):
            return NotImplemented
        return self.vertices == other.vertices and self.rays == other.rays

    def __hash__(self):
        return hash((self.vertices, self.rays))


def _recession_rays(hrep: list[HalfPlane]) -> list[Vec2]:
    candidates = []
    for h in hrep:
        for r in (rot90(h.normal), vneg(rot90(h.normal))):
            if all(dot(r, g.normal).sign() >= 0 for g in hrep):
                candidates.append(_canonical_ray(r))
    out = []
    for r in candidates:
        if r not in out:
            out.append(r)
    return out


def _drop_redundant(hrep: list[HalfPlane]):
    """A constraint is redundant iff the region cut by the others is still
    inside it; decided by recomputing vertices/rays of the reduced system."""
    kept = list(hrep)
    changed = True
    while changed:
        changed = False
        for idx in range(len(kept)):
            others = kept[:idx] + kept[idx + 1 :]
            if not others:
                continue
            h = kept[idx]
            verts = _candidate_vertices(others)
            if not verts:
                continue  # reduced region unpointed or odd; keep h
            if all(h.holds(v) for v in verts) and all(
                dot(r, h.normal).sign() >= 0 for r in _recession_rays(others)
            ):
                kept.pop(idx)
                changed = True
                break
    return kept


def _candidate_vertices(hrep: list[HalfPlane]) -> list[Vec2]:
    pts = []
    for i in range(len(hrep)):
        for j in range(i + 1, len(hrep)):
            p = solve2x2(hrep[i].normal, hrep[j].normal,
                         (hrep[i].offset, hrep[j].offset))
            if p is None:
                continue
            if all(h.holds(p) for h in hrep) and p not in pts:
                pts.append(p)
    return pts


def vrep_from_hrep(hrep: list[HalfPlane]) -> Polyhedron2:
    """Enumerate vertices and recession rays of a half-plane intersection.

    Raises InfeasibleRegionError for empty regions and NotPointedError for
    nonempty regions without a vertex.
    """
    hrep = _dedup_halfplanes(hrep)
    verts = _candidate_vertices(hrep)
    if not verts:
        if feasible(hrep):
            raise NotPointedError("region has no vertex")
        raise InfeasibleRegionError("constraints have empty intersection")
    rays = _recession_rays(hrep)
    hrep = _drop_redundant(hrep)
    return Polyhedron2(tuple(hrep), tuple(_order_ccw(verts)), tuple(rays))


def hrep_from_vrep(vertices: list[Vec2], rays: list[Vec2] = ()) -> list[HalfPlane]:
    """Facet constraints of conv(vertices) + cone(rays); needs >= 1 vertex."""
    if not vertices:
        raise ValueError("need at least one vertex")
    vertices = list(vertices)
    rays = list(rays)
    if len(vertices) == 1 and not rays:
        (v,) = vertices
        return [
            HalfPlane((Q(1), Q(0)), v[0]),
            HalfPlane((Q(-1), Q(0)), -v[0]),
            HalfPlane((Q(0), Q(1)), v[1]),
            HalfPlane((Q(0), Q(-1)), -v[1]),
        ]
    cands = []
    for i, v in enumerate(vertices):
        for w in vertices[i + 1 :]:
            e = vsub(w, v)
            if is_zero_vec(e):
                continue
            for n in (rot90(e), vneg(rot90(e))):
                cands.append(HalfPlane(n, dot(v, n)))
        for r in rays:
            for n in (rot90(r), vneg(rot90(r))):
                cands.append(HalfPlane(n, dot(v, n)))
    valid = [
        h
        for h in cands
        if all(h.holds(v) for v in vertices)
        and all(dot(r, h.normal).sign() >= 0 for r in rays)
    ]
    valid = _dedup_halfplanes(valid)
    # keep only facets: tight at two vertices, or a vertex plus a parallel ray
    out = []
    for h in valid:
        tight_v = sum(1 for v in vertices if h.tight(v))
        tight_r = sum(1 for r in rays if dot(r, h.normal).is_zero())
        if tight_v >= 2 or (tight_v >= 1 and tight_r >= 1):
            out.append(h)
    return out


def polygon(points: list[Vec2]) -> Polyhedron2:
    """Bounded polyhedron from vertices in any order."""
    return vrep_from_hrep(hrep_from_vrep(points))


def intersect_halfplane(p: Polyhedron2, h: HalfPlane) -> Polyhedron2 | None:
    """Intersection with one more half-plane; None when empty."""
    try:
        return vrep_from_hrep(list(p.hrep) + [h])
    except InfeasibleRegionError:
        return None

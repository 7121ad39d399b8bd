"""Triangulated vector configurations, ghost augmentation, Gale duality,
virtual chambers, and the exact polytopality test.

Index sets in triangulations and chambers are 1-based, matching the usual
convention for configuration combinatorics.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import (
    Vec2,
    cross,
    dot,
    is_zero_vec,
    kernel_basis,
    matrix_rank,
    rot90,
    solve_linear,
    vneg,
    vsub,
)
from .polyhedron import HalfPlane, InfeasibleRegionError, vrep_from_hrep
from .scalar import Q, QuadScalar


class NotBalancedError(ValueError):
    """Relation basis with an all-ones row needs a balanced configuration."""


@dataclass(frozen=True)
class VectorConfig:
    vectors: tuple[Vec2, ...]
    ghost_indices: frozenset[int] = field(default_factory=frozenset)  # 1-based

    def __post_init__(self):
        vecs = tuple(tuple(Q(x) for x in v) for v in self.vectors)
        object.__setattr__(self, "vectors", vecs)
        object.__setattr__(self, "ghost_indices", frozenset(self.ghost_indices))
        if len(vecs) < 2:
            raise ValueError("need at least two vectors")

    def __len__(self):
        return len(self.vectors)

    def total(self) -> Vec2:
        sx, sy = Q(0), Q(0)
        for v in self.vectors:
            sx, sy = sx + v[0], sy + v[1]
        return (sx, sy)

    def span_dim(self) -> int:
        return matrix_rank([[v[0], v[1]] for v in self.vectors])


@dataclass(frozen=True)
class Triangulation:
    """Subsets of {1..d}; the maximal elements (cardinality 2 in the plane)
    carry the fan combinatorics, ghosts appear in no subset."""

    subsets: frozenset[frozenset[int]]

    def __post_init__(self):
        object.__setattr__(
            self, "subsets", frozenset(frozenset(s) for s in self.subsets)
        )
        maximal = self.maximal()
        if maximal and any(len(s) != 2 for s in maximal):
            raise ValueError("maximal triangulation elements must be pairs")

    def maximal(self) -> frozenset[frozenset[int]]:
        top = max((len(s) for s in self.subsets), default=0)
        return frozenset(s for s in self.subsets if len(s) == top)

    def covered_indices(self) -> frozenset[int]:
        out: set[int] = set()
        for s in self.subsets:
            out |= s
        return frozenset(out)


@dataclass(frozen=True)
class PointConfig:
    """Points of C written as exact (re, im) pairs."""

    points: tuple[tuple[QuadScalar, QuadScalar], ...]

    def __post_init__(self):
        pts = tuple((Q(p[0]), Q(p[1])) for p in self.points)
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return len(self.points)

    def to_complex(self) -> list[complex]:
        return [complex(p[0].to_float(), p[1].to_float()) for p in self.points]

    def conjugate(self) -> "PointConfig":
        return PointConfig(tuple((p[0], -p[1]) for p in self.points))


@dataclass(frozen=True)
class VirtualChamber:
    subsets: frozenset[frozenset[int]]  # 1-based, each of cardinality d-2

    def __post_init__(self):
        object.__setattr__(
            self, "subsets", frozenset(frozenset(s) for s in self.subsets)
        )


def is_balanced(v: VectorConfig) -> bool:
    return is_zero_vec(v.total())


def is_odd(v: VectorConfig) -> bool:
    return (len(v) - v.span_dim()) % 2 == 1


def augment_ghosts(v: VectorConfig) -> VectorConfig:
    """Append ghost vectors until the configuration is balanced and odd.

    Balance: append minus the current sum.  Parity: a single zero ghost flips
    card - dim(span) without touching the balance.
    """
    vectors = list(v.vectors)
    ghosts = set(v.ghost_indices)
    total = v.total()
    if not is_zero_vec(total):
        vectors.append(vneg(total))
        ghosts.add(len(vectors))
    work = VectorConfig(tuple(vectors), frozenset(ghosts))
    if not is_odd(work):
        vectors.append((Q(0), Q(0)))
        ghosts.add(len(vectors))
        work = VectorConfig(tuple(vectors), frozenset(ghosts))
    return work


def relation_basis(v: VectorConfig) -> list[list[QuadScalar]]:
    """Basis of the relation space, as (d-2) rows of length d.

    The first row is all ones (this is where balance is used); the remaining
    rows come from the standard kernel basis of the configuration matrix,
    echelon-reduced so each has leading entry 1 in its own column.
    """
    if not is_balanced(v):
        raise NotBalancedError("configuration must sum to zero")
    rows = _kernel_rows(v.vectors)
    d = len(v)
    ones = [Q(1)] * d
    # the all-ones vector is the sum of all standard kernel vectors, so
    # dropping the last of them keeps a basis once ones is prepended
    reduced = _echelonize(rows[:-1])
    return [ones] + reduced


def _kernel_rows(vectors) -> list[list[QuadScalar]]:
    mat = [[v[0] for v in vectors], [v[1] for v in vectors]]
    return kernel_basis(mat)


def _echelonize(rows: list[list[QuadScalar]]) -> list[list[QuadScalar]]:
    """Scale each row's leading entry to 1 and clear it from later rows,
    preserving row order."""
    rows = [list(r) for r in rows]
    for i, row in enumerate(rows):
        lead = next((c for c, x in enumerate(row) if not x.is_zero()), None)
        if lead is None:
            raise ValueError("zero row in kernel basis")
        inv = row[lead].inv()
        rows[i] = [x * inv for x in row]
        for j in range(len(rows)):
            if j != i and not rows[j][lead].is_zero():
                f = rows[j][lead]
                rows[j] = [x - f * y for x, y in zip(rows[j], rows[i])]
    return rows


def gale_dual(v: VectorConfig) -> PointConfig:
    """Columns of the relation matrix below the all-ones row, read as
    complex numbers (row 2 real parts, row 3 imaginary parts)."""
    if not is_odd(v):
        raise ValueError("configuration must be odd (card - dim span odd)")
    b = relation_basis(v)
    if len(b) < 3:
        raise ValueError("need at least 3 relation rows for a Gale dual in C")
    re, im = b[1], b[2]
    return PointConfig(tuple((re[j], im[j]) for j in range(len(v))))


def chamber_from_triangulation(t: Triangulation, d: int) -> VirtualChamber:
    """Complements in {1..d} of the maximal triangulation elements."""
    if d < 4:
        raise ValueError("need d >= 4")
    full = frozenset(range(1, d + 1))
    return VirtualChamber(frozenset(full - s for s in t.maximal()))


def _triangle_halfplanes(pts: list[Vec2]) -> list[tuple[HalfPlane, bool]]:
    """Constraints cutting out the relative interior of the convex hull of
    three points, as (half-plane, strict) pairs; degenerate cases (segment,
    single point) turn facet constraints into weak equalities."""
    p1, p2, p3 = pts
    orient = cross(vsub(p2, p1), vsub(p3, p1))
    if not orient.is_zero():
        out = []
        for u, v, w in ((p1, p2, p3), (p2, p3, p1), (p3, p1, p2)):
            n = rot90(vsub(v, u))
            if dot(vsub(w, u), n).sign() < 0:
                n = vneg(n)
            out.append((HalfPlane(n, dot(u, n)), True))
        return out
    # collinear: the relative interior of the extreme segment
    direction = next(
        (vsub(b, a) for a, b in ((p1, p2), (p1, p3), (p2, p3)) if not is_zero_vec(vsub(b, a))),
        None,
    )
    if direction is None:  # all three coincide: a single point
        return [
            (HalfPlane((Q(1), Q(0)), p1[0]), False),
            (HalfPlane((Q(-1), Q(0)), -p1[0]), False),
            (HalfPlane((Q(0), Q(1)), p1[1]), False),
            (HalfPlane((Q(0), Q(-1)), -p1[1]), False),
        ]
    params = [dot(p, direction) for p in pts]
    n = rot90(direction)
    return [
        (HalfPlane(n, dot(p1, n)), False),
        (HalfPlane(vneg(n), -dot(p1, n)), False),
        (HalfPlane(direction, min(params)), True),
        (HalfPlane(vneg(direction), -max(params)), True),
    ]


def is_polytopal(
    lam: PointConfig, chamber: VirtualChamber
) -> tuple[bool, Vec2 | None]:
    """Exact test that the relative interiors of the chamber's triangles have
    a common point; on success also returns such a witness point.

    (The closed hulls always share the common ghost point, so the meaningful
    chamber condition is the open one.)
    """
    constraints: list[tuple[HalfPlane, bool]] = []
    for sigma in chamber.subsets:
        if len(sigma) != 3:
            raise ValueError("only triangle chambers (m = 1) are supported")
        pts = [lam.points[i - 1] for i in sorted(sigma)]
        constraints.extend(_triangle_halfplanes(pts))
    try:
        region = vrep_from_hrep([h for h, _ in constraints])
    except InfeasibleRegionError:
        return False, None
    vs = region.vertices
    # a strict constraint is satisfiable on the closed region iff some vertex
    # has positive slack; the vertex centroid then satisfies all of them at
    # once (slacks are affine, nonnegative at every vertex)
    for h, strict in constraints:
        if strict and all(h.slack(v).is_zero() for v in vs):
            return False, None
    n = len(vs)
    witness = (
        sum((v[0] for v in vs), Q(0)) / n,
        sum((v[1] for v in vs), Q(0)) / n,
    )
    return True, witness


def affine_equivalent(lam: PointConfig, other: PointConfig) -> bool:
    """Is there an invertible real-affine map of the plane carrying one
    configuration to the other pointwise, in order?"""
    if len(lam) != len(other):
        return False
    pts, qts = list(lam.points), list(other.points)
    frame = _affine_frame(pts)
    if frame is None:
        return _collinear_equivalent(pts, qts)
    i, j, k = frame
    # unknowns: matrix (m00,m01,m10,m11) and translation (t0,t1)
    rows, rhs = [], []
    for idx in (i, j, k):
        x, y = pts[idx]
        rows.append([x, y, Q(0), Q(0), Q(1), Q(0)])
        rhs.append(qts[idx][0])
        rows.append([Q(0), Q(0), x, y, Q(0), Q(1)])
        rhs.append(qts[idx][1])
    sol = solve_linear(rows, rhs)
    if sol is None:
        return False
    m00, m01, m10, m11, t0, t1 = sol
    if (m00 * m11 - m01 * m10).is_zero():
        return False
    for p, q in zip(pts, qts):
        ix = m00 * p[0] + m01 * p[1] + t0
        iy = m10 * p[0] + m11 * p[1] + t1
        if not ((ix - q[0]).is_zero() and (iy - q[1]).is_zero()):
            return False
    return True


def _affine_frame(pts) -> tuple[int, int, int] | None:
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if not cross(vsub(pts[j], pts[i]), vsub(pts[k], pts[i])).is_zero():
                    return i, j, k
    return None


def _collinear_equivalent(pts, qts) -> bool:
    """Both configurations collinear: affine coordinates along the line of a
    fixed frame pair must agree."""
    if _affine_frame(qts) is not None:
        return False
    frame = next(
        ((i, j) for i in range(len(pts)) for j in range(i + 1, len(pts))
         if not is_zero_vec(vsub(pts[j], pts[i]))),
        None,
    )
    if frame is None:  # all points of lam coincide
        return all(is_zero_vec(vsub(q, qts[0])) for q in qts)
    i, j = frame
    u = vsub(pts[j], pts[i])
    w = vsub(qts[j], qts[i])
    if is_zero_vec(w):
        return False
    uu = dot(u, u)
    ww = dot(w, w)
    for p, q in zip(pts, qts):
        t = dot(vsub(p, pts[i]), u) / uu
        # p must actually be on the line (it is, both configs are collinear)
        s = dot(vsub(q, qts[i]), w) / ww
        if not (t - s).is_zero():
            return False
        if not is_zero_vec(vsub(vsub(q, qts[i]), (s * w[0], s * w[1]))):
            return False
    return True

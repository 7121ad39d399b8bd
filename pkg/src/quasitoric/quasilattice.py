"""Quasilattices: Z-spans of plane vectors over Q(sqrt(d)).

Membership is decided exactly: splitting every coordinate into rational and
sqrt(d) parts turns "is v an integer combination of the generators" into an
integer linear system, solved by Hermite-style reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .linalg import Vec2, cross, integer_solve, kernel_basis, matrix_rank
from .scalar import ParamSpec, Q, QuadScalar, ScalarContextError


class QuotientUnsupportedError(ValueError):
    """Quotient description requested for an untagged quasilattice."""


@dataclass(frozen=True)
class GroupDesc:
    """The quotient group Q_a / Z^2: trivial, Z/qZ, or a dense rotation group."""

    kind: str  # "trivial" | "finite_cyclic" | "dense_cyclic"
    order: int | None = None
    rotation_coefficient: QuadScalar | None = None  # rotation by 2*pi*a

    def __post_init__(self):
        if self.kind not in ("trivial", "finite_cyclic", "dense_cyclic"):
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.kind == "finite_cyclic" and (self.order is None or self.order < 2):
            raise ValueError("finite_cyclic needs order >= 2")


def _context_d(vectors) -> int | None:
    d = None
    for v in vectors:
        for x in v:
            if x.d is not None:
                if d is None:
                    d = x.d
                elif d != x.d:
                    raise ScalarContextError("mixed sqrt contexts in quasilattice")
    return d


def _rational_rows(vectors: list[Vec2]) -> list[list[Fraction]]:
    """Each vector becomes the 4-tuple (x.r, x.s, y.r, y.s) over Q."""
    _context_d(vectors)  # context check
    return [[v[0].r, v[0].s, v[1].r, v[1].s] for v in vectors]


def _scaled_integer_system(cols: list[list[Fraction]], rhs: list[Fraction]):
    """Scale each equation by the lcm of its denominators."""
    a_rows, b_out = [], []
    for i in range(len(rhs)):
        den = Fraction(rhs[i]).denominator
        for c in cols:
            den = lcm(den, Fraction(c[i]).denominator)
        a_rows.append([int(Fraction(c[i]) * den) for c in cols])
        b_out.append(int(Fraction(rhs[i]) * den))
    return a_rows, b_out


@dataclass(frozen=True)
class Quasilattice:
    generators: tuple[Vec2, ...]
    param: ParamSpec | None = None

    def __post_init__(self):
        gens = tuple(tuple(Q(x) for x in g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if not any(
            not cross(gens[i], gens[j]).is_zero()
            for i in range(len(gens))
            for j in range(i + 1, len(gens))
        ):
            raise ValueError("generators must span the plane")

    # -- membership -----------------------------------------------------------

    def member_witness(self, v: Vec2) -> list[int] | None:
        v = (Q(v[0]), Q(v[1]))
        quads = list(self.generators) + [v]
        rows = _rational_rows(quads)
        cols = rows[:-1]  # one column of 4 rationals per generator
        cols = [list(c) for c in cols]
        rhs = rows[-1]
        a, b = _scaled_integer_system(cols, rhs)
        return integer_solve(a, b)

    def member(self, v: Vec2) -> bool:
        return self.member_witness(v) is not None

    def ray_meets(self, g: Vec2) -> bool:
        """Does the ray through g contain a nonzero quasilattice point?

        Equivalent to: the rational solution space of
        sum_i m_i gen_i - t*g = 0 (t in Q(sqrt(d)), m_i in Q) contains a
        vector with t != 0; rational solutions rescale to integer ones.
        """
        g = (Q(g[0]), Q(g[1]))
        d = _context_d(list(self.generators) + [g]) or 0
        n = len(self.generators)
        gen_cols = [[c[i] for c in _rational_rows(list(self.generators))] for i in range(4)]
        # columns for t_r and t_s where t = t_r + t_s*sqrt(d):
        # coordinate c of t*g splits as
        #   rational part: t_r*g_c.r + t_s*g_c.s*d
        #   sqrt part:     t_r*g_c.s + t_s*g_c.r
        t_cols = [
            [g[0].r, g[0].s * d],
            [g[0].s, g[0].r],
            [g[1].r, g[1].s * d],
            [g[1].s, g[1].r],
        ]
        rows = [
            [Q(gen_cols[i][j]) for j in range(n)] + [-Q(t_cols[i][0]), -Q(t_cols[i][1])]
            for i in range(4)
        ]
        for vec in kernel_basis(rows):
            if not (vec[n].is_zero() and vec[n + 1].is_zero()):
                return True
        return False

    # -- structure -------------------------------------------------------------

    def is_lattice(self) -> bool:
        """Discrete iff the generators span a rank <= 2 subgroup; rank is
        computed over Q after splitting coordinates into (r, s) parts."""
        rows = [[Q(x) for x in row] for row in _rational_rows(list(self.generators))]
        return matrix_rank(rows) <= 2

    def lattice_basis(self) -> tuple[Vec2, Vec2]:
        """A Z-basis of a rank-2 discrete quasilattice, via HNF in Z^4."""
        from .linalg import hnf_rows

        if not self.is_lattice():
            raise ValueError("dense quasilattice has no lattice basis")
        d = _context_d(list(self.generators))
        rows = _rational_rows(list(self.generators))
        den = 1
        for row in rows:
            for x in row:
                den = lcm(den, x.denominator)
        int_rows = [[int(x * den) for x in row] for row in rows]
        basis = hnf_rows(int_rows)
        if len(basis) != 2:
            raise ValueError("quasilattice does not have rank 2")
        out = []
        for h in basis:
            out.append(
                (
                    QuadScalar(Fraction(h[0], den), Fraction(h[1], den), d if h[1] else None),
                    QuadScalar(Fraction(h[2], den), Fraction(h[3], den), d if h[3] else None),
                )
            )
        return tuple(out)

    def augment(self, nu: Vec2) -> "Quasilattice":
        nu = (Q(nu[0]), Q(nu[1]))
        if nu[0].is_zero() and nu[1].is_zero():
            raise ValueError("cannot augment by the zero vector")
        return Quasilattice(self.generators + (nu,), self.param)

    def equivalent(self, other: "Quasilattice") -> bool:
        """Membership-equivalence: each generator lies in the other group."""
        return all(other.member(g) for g in self.generators) and all(
            self.member(g) for g in other.generators
        )

    def gamma_quotient(self) -> GroupDesc:
        """Q_a / Z^2 for a tagged Q_a: trivial, Z/qZ, or dense rotations by 2*pi*a."""
        if self.param is None:
            raise QuotientUnsupportedError(
                "quotient description only available for parameter-tagged quasilattices"
            )
        a = self.param
        if not a.rational:
            return GroupDesc("dense_cyclic", rotation_coefficient=a.value)
        if a.q == 1:
            return GroupDesc("trivial")
        return GroupDesc("finite_cyclic", order=a.q, rotation_coefficient=a.value)


def z2() -> Quasilattice:
    return Quasilattice(((Q(1), Q(0)), (Q(0), Q(1))))


def hirzebruch_quasilattice(a: ParamSpec) -> Quasilattice:
    """Q_a = span_Z{(1,0),(0,1),(-1,a)} = Z x (Z + aZ)."""
    return Quasilattice(
        ((Q(1), Q(0)), (Q(0), Q(1)), (Q(-1), a.value)),
        param=a,
    )


def quotient_order(sub: Quasilattice, sup: Quasilattice) -> int:
    """Index [sup : sub] for nested rank-2 lattices, via determinant ratio."""
    b_sub = sub.lattice_basis()
    b_sup = sup.lattice_basis()
    ratio = cross(b_sub[0], b_sub[1]) / cross(b_sup[0], b_sup[1])
    if not (ratio.is_rational() and abs(ratio).r.denominator == 1):
        raise ValueError("lattices are not nested")
    return abs(int(abs(ratio).r))

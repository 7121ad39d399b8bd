"""The generalized Delzant construction at the data level: level-set
equations, cutting-group phase maps, and quasifold presentations.

Presentations are data, not spaces: equations, weight rows, and group
descriptions carry all of the checkable content."""

from __future__ import annotations

from dataclasses import dataclass, field

from .gale import NotBalancedError, VectorConfig, _echelonize, _kernel_rows, is_balanced, relation_basis
from .linalg import Vec2, dot
from .polyhedron import HalfPlane, Polyhedron2
from .quasilattice import GroupDesc, Quasilattice
from .scalar import Q, QuadScalar, format_scalar


class TripleError(ValueError):
    """A facet normal does not belong to the quasilattice."""


@dataclass(frozen=True)
class PolytopeTriple:
    """(P, {X_i}, Q): polytope, ray generators given by the facet normals,
    containing quasilattice; optionally extra half-planes (extra X's with
    their offsets, beyond the facets of P)."""

    polytope: Polyhedron2
    quasilattice: Quasilattice
    extra_halfplanes: tuple[HalfPlane, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if not self.polytope.simple:
            raise TripleError("polytope must be simple")
        for h in self.halfplanes():
            if not self.quasilattice.member(h.normal):
                raise TripleError(
                    f"normal ({h.normal[0]}, {h.normal[1]}) is not in the quasilattice"
                )

    def halfplanes(self) -> tuple[HalfPlane, ...]:
        return tuple(self.polytope.hrep) + tuple(self.extra_halfplanes)

    def normals(self) -> list[Vec2]:
        return [h.normal for h in self.halfplanes()]

    def offsets(self) -> list[QuadScalar]:
        return [h.offset for h in self.halfplanes()]


@dataclass(frozen=True)
class MomentComponent:
    """One component sum_i b_i (|z_i|^2 + lambda_i) = sum b_i |z_i|^2 - c."""

    coefficients: tuple[QuadScalar, ...]
    constant: QuadScalar  # c = -sum b_i lambda_i; the level set is sum b|z|^2 = c

    def render(self) -> str:
        return f"{_render_modulus_form(self.coefficients)} = {format_scalar(self.constant)}"

    def eval_sq(self, moduli_sq: list[QuadScalar]) -> QuadScalar:
        total = -self.constant
        for b, m in zip(self.coefficients, moduli_sq):
            total = total + b * Q(m)
        return total

    def eval_complex(self, z: list[complex]) -> float:
        return sum(
            float(b) * (w.real * w.real + w.imag * w.imag)
            for b, w in zip(self.coefficients, z)
        ) - float(self.constant)


def _render_modulus_form(coeffs) -> str:
    parts = []
    for i, b in enumerate(coeffs, start=1):
        if b.is_zero():
            continue
        if b == 1:
            parts.append(f"|z{i}|^2")
        elif b == -1:
            parts.append(f"-|z{i}|^2")
        else:
            parts.append(f"({format_scalar(b)})|z{i}|^2")
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


@dataclass(frozen=True)
class QuasifoldPresentation:
    facet_count: int
    relation_rows: tuple[tuple[QuadScalar, ...], ...]
    level_components: tuple[MomentComponent, ...]
    group_weight_rows: tuple[tuple[QuadScalar, ...], ...]  # phase map of the cutting group N
    quasitorus: str
    gamma: GroupDesc | None
    divisor_orders: tuple[tuple[int, int], ...]  # (facet index 1-based, order)

    def level_equations(self) -> list[str]:
        return [c.render() for c in self.level_components]

    def group_phases(self) -> str:
        return render_phase_map(self.group_weight_rows)


_PARAM_NAMES = "rstuv"


def render_phase_map(rows) -> str:
    """Human-readable phase map of exp(span of rows); one parameter per row,
    named in order of the rows' leading columns."""
    order = sorted(range(len(rows)), key=lambda i: _leading(rows[i]))
    names = {}
    for name_idx, row_idx in enumerate(order):
        names[row_idx] = _PARAM_NAMES[name_idx % len(_PARAM_NAMES)]
    d = len(rows[0]) if rows else 0
    coords = []
    for j in range(d):
        terms = []
        for i, row in enumerate(rows):
            b = row[j]
            if b.is_zero():
                continue
            if b == 1:
                terms.append(names[i])
            else:
                terms.append(f"({format_scalar(b)}){names[i]}")
        phase = " + ".join(terms) if terms else "0"
        coords.append(f"e^(2*pi*i*({phase}))" if phase != "0" else "1")
    return "(" + ", ".join(coords) + ")"


def _leading(row) -> int:
    return next((c for c, x in enumerate(row) if not x.is_zero()), len(row))


def kernel_rows_for(normals: list[Vec2]) -> list[list[QuadScalar]]:
    """Relation rows for the normals: the balanced path goes through
    relation_basis (all-ones first row); otherwise the echelonized kernel."""
    config = VectorConfig(tuple(normals))
    if is_balanced(config):
        return relation_basis(config)
    return _echelonize(_kernel_rows(normals))


def moment_map_coeffs(
    triple: PolytopeTriple, rows: list[list[QuadScalar]]
) -> list[MomentComponent]:
    """Components sum_i b_i (|z_i|^2 + lambda_i) of the moment map for the
    subgroup exp(span rows) acting on C^d."""
    normals = triple.normals()
    offsets = triple.offsets()
    d = len(normals)
    out = []
    for row in rows:
        if len(row) != d:
            raise ValueError(f"row length {len(row)} != facet count {d}")
        for k in range(2):
            acc = Q(0)
            for b, n in zip(row, normals):
                acc = acc + b * n[k]
            if not acc.is_zero():
                raise ValueError("relation row does not annihilate the normals")
        c = Q(0)
        for b, lam in zip(row, offsets):
            c = c - b * lam
        out.append(MomentComponent(tuple(row), c))
    return out


def eval_moment_map(components, z: list[complex]) -> list[float]:
    return [c.eval_complex(z) for c in components]


def eval_moment_map_sq(components, moduli_sq) -> list[QuadScalar]:
    return [c.eval_sq(moduli_sq) for c in components]


def level_set_member(components, z: list[complex], tol: float) -> bool:
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    return all(abs(r) <= tol for r in eval_moment_map(components, z))


def level_set_member_sq(components, moduli_sq) -> bool:
    return all(r.is_zero() for r in eval_moment_map_sq(components, moduli_sq))


def residual_action_weights(rows: list[list[QuadScalar]]) -> list[list[QuadScalar]]:
    """The residual torus weights: the relation rows other than the all-ones
    diagonal row (which must be present)."""
    ones = [r for r in rows if all(x == 1 for x in r)]
    if not ones:
        raise ValueError("no all-ones row: residual action undefined")
    return [list(r) for r in rows if not all(x == 1 for x in r)]


def presentation(triple: PolytopeTriple) -> QuasifoldPresentation:
    """Symplectic quasifold presentation: level-set equations of the moment
    map plus the phase map of the cutting group."""
    normals = triple.normals()
    rows = kernel_rows_for(normals)
    components = moment_map_coeffs(triple, rows)
    q = triple.quasilattice
    gamma = None
    quasitorus = "R^2/Q (untagged quasilattice)"
    divisors: list[tuple[int, int]] = []
    if q.param is not None:
        gamma = q.gamma_quotient()
        if gamma.kind == "trivial":
            quasitorus = "S^1 x S^1"
        elif gamma.kind == "finite_cyclic":
            quasitorus = f"S^1 x (S^1/Z_{gamma.order})"
        else:
            quasitorus = "S^1 x (S^1/Gamma_a)"
        if gamma.kind == "finite_cyclic":
            # the two horizontal facets (bases of the trapezoid) pick up
            # orbifold divisors of order q
            for idx, n in enumerate(normals, start=1):
                if n[0].is_zero():
                    divisors.append((idx, gamma.order))
    return QuasifoldPresentation(
        facet_count=len(normals),
        relation_rows=tuple(tuple(r) for r in rows),
        level_components=tuple(components),
        group_weight_rows=tuple(tuple(r) for r in rows),
        quasitorus=quasitorus,
        gamma=gamma,
        divisor_orders=tuple(divisors),
    )

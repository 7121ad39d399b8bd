"""Gale duality: relation bases, ghost augmentation, chambers, polytopality,
and affine equivalence of dual configurations."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasitoric.gale import (
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
from quasitoric.pipeline import (
    hirzebruch_triangulation,
    hirzebruch_vector_config,
)
from quasitoric.scalar import ParamSpec, Q, parse_scalar, sqrt

from conftest import fractions, params


def hirzebruch_chamber():
    return VirtualChamber(
        frozenset(
            frozenset(s) for s in ({3, 4, 5}, {1, 3, 5}, {1, 2, 5}, {2, 4, 5})
        )
    )


def test_augment_ghosts_hirzebruch():
    a = ParamSpec(parse_scalar("sqrt(2)"))
    vc = hirzebruch_vector_config(a)
    assert len(vc) == 5
    assert vc.ghost_indices == frozenset({5})
    assert vc.vectors[4] == (Q(0), -sqrt(2))
    assert is_balanced(vc) and is_odd(vc)


def test_augment_ghosts_already_balanced():
    vc = VectorConfig(((Q(1), Q(0)), (Q(-1), Q(0)), (Q(0), Q(1)), (Q(0), Q(-1))))
    out = augment_ghosts(vc)
    # balanced but even: a single zero ghost fixes the parity
    assert len(out) == 5
    assert out.vectors[4] == (Q(0), Q(0))
    assert is_balanced(out) and is_odd(out)


def test_relation_basis_regression():
    """The relation matrix of V_a in its canonical form."""
    for text in ("2", "3/2", "sqrt(2)", "1+sqrt(2)"):
        a = ParamSpec(parse_scalar(text))
        rows = relation_basis(hirzebruch_vector_config(a))
        assert rows == [
            [Q(1), Q(1), Q(1), Q(1), Q(1)],
            [Q(0), Q(1), Q(1), Q(0), Q(0)],
            [Q(1), Q(0), a.value, Q(1), Q(0)],
        ]


def test_relation_basis_needs_balance():
    with pytest.raises(NotBalancedError):
        relation_basis(VectorConfig(((Q(1), Q(0)), (Q(0), Q(1)))))


def test_gale_dual_regression():
    """Lambda_a = (i, 1, 1 + i a, i, 0)."""
    a = ParamSpec(parse_scalar("sqrt(2)"))
    lam = gale_dual(hirzebruch_vector_config(a))
    assert lam.points == (
        (Q(0), Q(1)),
        (Q(1), Q(0)),
        (Q(1), a.value),
        (Q(0), Q(1)),
        (Q(0), Q(0)),
    )


@settings(max_examples=100, deadline=None)
@given(
    st.lists(
        st.tuples(fractions(max_num=6, max_den=3), fractions(max_num=6, max_den=3)),
        min_size=3,
        max_size=6,
    )
)
def test_relation_basis_annihilates_random_configs(raw):
    """For any planar configuration, after ghost augmentation the relation
    rows exactly annihilate the vectors, and the row count is d - rank."""
    vecs = tuple((Q(x), Q(y)) for x, y in raw)
    try:
        vc = augment_ghosts(VectorConfig(vecs))
    except ValueError:
        return
    rows = relation_basis(vc)
    d = len(vc)
    assert len(rows) == d - vc.span_dim()
    for row in rows:
        sx, sy = Q(0), Q(0)
        for b, v in zip(row, vc.vectors):
            sx, sy = sx + b * v[0], sy + b * v[1]
        assert sx.is_zero() and sy.is_zero()
    # the rows are independent: the echelon leading columns are distinct
    from quasitoric.linalg import matrix_rank

    assert matrix_rank([list(r) for r in rows]) == len(rows)


def test_chamber_from_triangulation():
    t = hirzebruch_triangulation()
    chamber = chamber_from_triangulation(t, 5)
    assert chamber.subsets == hirzebruch_chamber().subsets


def test_polytopal_family():
    for text in ("1", "2", "3/2", "sqrt(2)", "1+sqrt(2)"):
        a = ParamSpec(parse_scalar(text))
        lam = gale_dual(hirzebruch_vector_config(a))
        ok, witness = is_polytopal(lam, hirzebruch_chamber())
        assert ok and witness is not None
        # the witness is interior to every chamber triangle
        from quasitoric.gale import _triangle_halfplanes

        for sigma in hirzebruch_chamber().subsets:
            pts = [lam.points[i - 1] for i in sorted(sigma)]
            for h, strict in _triangle_halfplanes(pts):
                assert h.slack(witness).sign() > 0 if strict else h.tight(witness)


def test_polytopal_perturbed_failure():
    """Reflecting Lambda_4 below the axis pulls the {2,4,5} triangle off the
    others: no common relative-interior point remains."""
    lam = PointConfig(
        (
            (Q(0), Q(1)),
            (Q(1), Q(0)),
            (Q(1), Q(1)),
            (Q(0), Q(-1)),
            (Q(0), Q(0)),
        )
    )
    ok, witness = is_polytopal(lam, hirzebruch_chamber())
    assert not ok and witness is None


def test_polytopal_degenerate_triangle():
    """A collinear triple forces the witness onto a line; here the line
    misses the open triangles, so the test fails."""
    lam = PointConfig(
        (
            (Q(0), Q(1)),
            (Q(1), Q(0)),
            (Q(1), Q(1)),
            (Q(-10), Q(0)),  # {2,4,5} degenerates to a segment on the axis
            (Q(0), Q(0)),
        )
    )
    ok, witness = is_polytopal(lam, hirzebruch_chamber())
    assert not ok and witness is None


def test_affine_equivalence_of_duals():
    """Gale duals of the same configuration written in different bases are
    affinely equivalent."""
    a = ParamSpec(parse_scalar("sqrt(2)"))
    lam = gale_dual(hirzebruch_vector_config(a))
    # apply an explicit invertible affine map
    moved = PointConfig(
        tuple(
            (2 * p[0] + p[1] + Q(3), p[0] - p[1] - Q(1))
            for p in lam.points
        )
    )
    assert affine_equivalent(lam, moved)
    assert affine_equivalent(moved, lam)
    # a genuinely different configuration is not equivalent
    other = PointConfig(lam.points[:4] + ((Q(5), Q(5)),))
    assert not affine_equivalent(lam, other)


def test_affine_equivalence_collinear():
    line = PointConfig(((Q(0), Q(0)), (Q(1), Q(0)), (Q(2), Q(0))))
    moved = PointConfig(((Q(1), Q(1)), (Q(2), Q(3)), (Q(3), Q(5))))
    assert affine_equivalent(line, moved)
    not_matching = PointConfig(((Q(1), Q(1)), (Q(2), Q(3)), (Q(4), Q(7))))
    assert not affine_equivalent(line, not_matching)


def test_triangulation_validation():
    with pytest.raises(ValueError):
        Triangulation(frozenset({frozenset({1, 2, 3})}))
    t = hirzebruch_triangulation()
    assert t.maximal() == frozenset(
        frozenset(s) for s in ({1, 2}, {2, 4}, {3, 4}, {1, 3})
    )
    assert t.covered_indices() == frozenset({1, 2, 3, 4})

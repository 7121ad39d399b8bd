"""Normal fans and the complete / rational / smooth predicates."""

import pytest

from quasitoric.fan import (
    Fan2,
    NonSimpleError,
    NotALatticeError,
    is_complete,
    is_rational,
    is_smooth,
    normal_fan,
)
from quasitoric.pipeline import trapezoid, strip
from quasitoric.polyhedron import HalfPlane, polygon, vrep_from_hrep
from quasitoric.quasilattice import hirzebruch_quasilattice, z2
from quasitoric.scalar import ParamSpec, Q, parse_scalar, sqrt


def test_fan_validation():
    with pytest.raises(ValueError):
        Fan2(((Q(0), Q(0)),), ())
    with pytest.raises(ValueError):
        Fan2(((Q(1), Q(0)), (Q(2), Q(0))), ())  # positive multiples
    with pytest.raises(ValueError):
        Fan2(((Q(1), Q(0)), (Q(-1), Q(0))), ((0, 1),))  # degenerate cone


def test_normal_fan_of_square():
    p = polygon([(Q(0), Q(0)), (Q(1), Q(0)), (Q(1), Q(1)), (Q(0), Q(1))])
    fan = normal_fan(p)
    assert len(fan.ray_generators) == 4
    assert len(fan.maximal_cones) == 4
    assert is_complete(fan)
    assert is_rational(fan, z2())
    assert is_smooth(fan, z2())


def test_normal_fan_nonsimple():
    # vrep_from_hrep drops tangent constraints as redundant, so build the
    # defective description by hand: a corner-touching diagonal facet
    from quasitoric.polyhedron import Polyhedron2

    square = vrep_from_hrep(
        [
            HalfPlane((Q(1), Q(0)), Q(0)),
            HalfPlane((Q(0), Q(1)), Q(0)),
            HalfPlane((Q(-1), Q(0)), Q(-1)),
            HalfPlane((Q(0), Q(-1)), Q(-1)),
        ]
    )
    defective = Polyhedron2(
        square.hrep + (HalfPlane((Q(1), Q(1)), Q(0)),),
        square.vertices,
        square.rays,
    )
    assert not defective.simple
    with pytest.raises(NonSimpleError):
        normal_fan(defective)


def test_incomplete_fan_of_unbounded_polyhedron():
    fan = normal_fan(strip())
    assert not is_complete(fan)


def test_trapezoid_fan_predicates_integer():
    for n in range(1, 11):
        a = ParamSpec(Q(n))
        fan = normal_fan(trapezoid(a))
        assert is_complete(fan)
        assert is_rational(fan, z2())
        assert is_smooth(fan, z2())
        assert is_rational(fan, hirzebruch_quasilattice(a))


def test_trapezoid_fan_predicates_fractional():
    a = ParamSpec(parse_scalar("3/2"))
    fan = normal_fan(trapezoid(a))
    assert is_complete(fan)
    assert is_rational(fan, z2())  # (-1, 3/2) spans a rational ray
    assert not is_smooth(fan, z2())  # primitive (-2, 3) gives |det| = 3 and 2


def test_trapezoid_fan_predicates_irrational():
    a = ParamSpec(parse_scalar("sqrt(2)"))
    fan = normal_fan(trapezoid(a))
    assert is_complete(fan)
    assert not is_rational(fan, z2())
    assert is_rational(fan, hirzebruch_quasilattice(a))
    assert not is_smooth(fan, z2())
    with pytest.raises(NotALatticeError):
        is_smooth(fan, hirzebruch_quasilattice(a))


def test_is_complete_needs_all_cones():
    p = polygon([(Q(0), Q(0)), (Q(1), Q(0)), (Q(0), Q(1))])
    fan = normal_fan(p)
    assert is_complete(fan)
    partial = Fan2(fan.ray_generators, fan.maximal_cones[:-1])
    assert not is_complete(partial)

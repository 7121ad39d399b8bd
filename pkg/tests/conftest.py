from fractions import Fraction

from hypothesis import strategies as st

from quasitoric.scalar import ParamSpec, QuadScalar, parse_scalar

SQUAREFREE_DS = [2, 3, 5, 7]


def fractions(max_num=30, max_den=12):
    return st.builds(
        Fraction,
        st.integers(-max_num, max_num),
        st.integers(1, max_den),
    )


def rational_scalars(max_num=30, max_den=12):
    return st.builds(QuadScalar, fractions(max_num, max_den))


def quad_scalars(d, max_num=20, max_den=8):
    """Elements of Q(sqrt(d)), irrational part allowed to vanish."""
    return st.builds(
        lambda r, s: QuadScalar(r, s, d if s != 0 else None),
        fractions(max_num, max_den),
        fractions(max_num, max_den),
    )


def any_scalars():
    return st.one_of(
        rational_scalars(),
        *[quad_scalars(d) for d in SQUAREFREE_DS],
    )


def params():
    """Positive parameters: rationals and rational + sqrt(d) combinations."""
    return st.one_of(
        st.builds(lambda p, q: ParamSpec(QuadScalar(Fraction(p, q))),
                  st.integers(1, 12), st.integers(1, 12)),
        st.sampled_from([
            ParamSpec(parse_scalar("sqrt(2)")),
            ParamSpec(parse_scalar("sqrt(3)")),
            ParamSpec(parse_scalar("1+sqrt(2)")),
            ParamSpec(parse_scalar("1/2+1/2*sqrt(5)")),
        ]),
    )

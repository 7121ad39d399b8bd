"""Exact arithmetic in Q and real quadratic fields Q(sqrt(d)).

Every coordinate in this package is a ``QuadScalar``: an element r + s*sqrt(d)
with r, s rational and d a fixed squarefree integer > 1.  Pure rationals are
the degenerate case s = 0 and carry no d.  The field is totally ordered and
all comparisons are exact.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union


class ScalarDomainError(ZeroDivisionError):
    """Inversion of zero."""


class ScalarContextError(ValueError):
    """Operands living in different quadratic fields Q(sqrt(d))."""


def is_squarefree(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


def _check_d(d):
    if d is not None:
        if not isinstance(d, int) or d <= 1 or not is_squarefree(d):
            raise ScalarContextError(f"d must be a squarefree integer > 1, got {d!r}")
    return d


Rat = Union[int, Fraction]


@dataclass(frozen=True)
class QuadScalar:
    """An exact element r + s*sqrt(d); canonical form has d=None when s=0."""

    r: Fraction
    s: Fraction = Fraction(0)
    d: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "r", Fraction(self.r))
        object.__setattr__(self, "s", Fraction(self.s))
        _check_d(self.d)
        if self.s == 0:
            object.__setattr__(self, "d", None)
        elif self.d is None:
            raise ScalarContextError("irrational part given without a d context")

    # -- context handling ----------------------------------------------------

    @staticmethod
    def _join_d(x: "QuadScalar", y: "QuadScalar") -> int | None:
        if x.d is None:
            return y.d
        if y.d is None or x.d == y.d:
            return x.d
        raise ScalarContextError(f"mixed contexts sqrt({x.d}) and sqrt({y.d})")

    @staticmethod
    def coerce(value) -> "QuadScalar":
        if isinstance(value, QuadScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return QuadScalar(Fraction(value))
        if isinstance(value, str):
            return parse_scalar(value)
        raise TypeError(f"cannot interpret {value!r} as a QuadScalar")

    # -- ring/field operations -----------------------------------------------

    def __add__(self, other):
        o = QuadScalar.coerce(other)
        return QuadScalar(self.r + o.r, self.s + o.s, QuadScalar._join_d(self, o))

    __radd__ = __add__

    def __neg__(self):
        return QuadScalar(-self.r, -self.s, self.d)

    def __sub__(self, other):
        return self + (-QuadScalar.coerce(other))

    def __rsub__(self, other):
        return QuadScalar.coerce(other) - self

    def __mul__(self, other):
        o = QuadScalar.coerce(other)
        d = QuadScalar._join_d(self, o)
        dv = d if d is not None else 0
        return QuadScalar(self.r * o.r + self.s * o.s * dv, self.r * o.s + self.s * o.r, d)

    __rmul__ = __mul__

    def inv(self) -> "QuadScalar":
        if self.is_zero():
            raise ScalarDomainError("inverse of zero")
        if self.s == 0:
            return QuadScalar(1 / self.r)
        # rationalize: 1/(r+s*sqrt(d)) = (r-s*sqrt(d))/(r^2-s^2 d)
        norm = self.r * self.r - self.s * self.s * self.d
        return QuadScalar(self.r / norm, -self.s / norm, self.d)

    def __truediv__(self, other):
        return self * QuadScalar.coerce(other).inv()

    def __rtruediv__(self, other):
        return QuadScalar.coerce(other) * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        out = QuadScalar(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "QuadScalar":
        return QuadScalar(self.r, -self.s, self.d)

    # -- order ----------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.r == 0 and self.s == 0

    def sign(self) -> int:
        """Exact sign of r + s*sqrt(d), by comparing r^2 against s^2*d."""
        if self.s == 0:
            return (self.r > 0) - (self.r < 0)
        if self.r == 0:
            return 1 if self.s > 0 else -1
        if self.r > 0 and self.s > 0:
            return 1
        if self.r < 0 and self.s < 0:
            return -1
        # opposite signs: the larger of r^2, s^2*d decides
        rr = self.r * self.r
        ss = self.s * self.s * self.d
        if rr == ss:
            # would mean sqrt(d) rational; impossible for squarefree d > 1
            raise AssertionError("sqrt(d) cannot be rational")
        return (1 if self.r > 0 else -1) if rr > ss else (1 if self.s > 0 else -1)

    def __lt__(self, other):
        return (self - QuadScalar.coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - QuadScalar.coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - QuadScalar.coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - QuadScalar.coerce(other)).sign() >= 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, str, QuadScalar)):
            o = QuadScalar.coerce(other)
            return self.r == o.r and self.s == o.s and self.d == o.d
        return NotImplemented

    def __hash__(self):
        if self.s == 0:
            return hash(self.r)
        return hash((self.r, self.s, self.d))

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __bool__(self):
        return not self.is_zero()

    # -- queries and conversions ----------------------------------------------

    def is_rational(self) -> bool:
        return self.s == 0

    def is_integer(self) -> bool:
        return self.s == 0 and self.r.denominator == 1

    def to_float(self) -> float:
        x = self.r.numerator / self.r.denominator
        if self.s:
            x += (self.s.numerator / self.s.denominator) * math.sqrt(self.d)
        return x

    __float__ = to_float

    def __repr__(self):
        return f"QuadScalar({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


ZERO = QuadScalar(0)
ONE = QuadScalar(1)


def Q(value, den=None) -> QuadScalar:
    """Shorthand constructor from int, Fraction, 'p/q' string, or QuadScalar;
    Q(p, q) builds the fraction p/q."""
    if den is not None:
        return QuadScalar(Fraction(value, den))
    return QuadScalar.coerce(value)


def sqrt(d: int) -> QuadScalar:
    return QuadScalar(Fraction(0), Fraction(1), d)


# -- text form ------------------------------------------------------------

_TERM = re.compile(
    r"""\s*(?P<sign>[+-]?)\s*
        (?:
          (?P<coef>\d+(?:/\d+)?)\s*(?:\*\s*sqrt\(\s*(?P<d1>\d+)\s*\))?
          |
          sqrt\(\s*(?P<d2>\d+)\s*\)
        )\s*""",
    re.VERBOSE,
)


def parse_scalar(text: str) -> QuadScalar:
    """Parse 'p/q', 'r+s*sqrt(d)', 'sqrt(d)' and signed combinations thereof."""
    if not isinstance(text, str) or not text.strip():
        raise ValueError(f"empty scalar expression: {text!r}")
    pos = 0
    total = QuadScalar(0)
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse scalar {text!r} at position {pos}")
        if not first and m.group("sign") == "":
            raise ValueError(f"missing +/- between terms in {text!r}")
        sgn = -1 if m.group("sign") == "-" else 1
        if m.group("d2") is not None:
            term = sqrt(int(m.group("d2")))
        else:
            coef = Fraction(m.group("coef"))
            if m.group("d1") is not None:
                term = QuadScalar(Fraction(0), coef, int(m.group("d1")))
            else:
                term = QuadScalar(coef)
        total = total + sgn * term
        pos = m.end()
        first = False
    return total


def format_scalar(x: QuadScalar) -> str:
    if x.s == 0:
        return str(x.r)
    parts = []
    if x.r != 0:
        parts.append(str(x.r))
    if x.s == 1:
        st = f"sqrt({x.d})"
    elif x.s == -1:
        st = f"-sqrt({x.d})"
    else:
        st = f"{x.s}*sqrt({x.d})"
    if parts and not st.startswith("-"):
        return f"{parts[0]}+{st}"
    return "".join(parts) + st


def scalar_to_json(x: QuadScalar) -> dict:
    return {
        "r": str(x.r),
        "s": str(x.s),
        "d": x.d,
        "float": x.to_float(),
    }


def scalar_from_json(obj) -> QuadScalar:
    if isinstance(obj, str):
        return parse_scalar(obj)
    if isinstance(obj, int):
        return QuadScalar(Fraction(obj))
    if isinstance(obj, dict):
        return QuadScalar(Fraction(obj["r"]), Fraction(obj.get("s", "0")), obj.get("d"))
    raise ValueError(f"not a scalar JSON form: {obj!r}")


@dataclass(frozen=True)
class ParamSpec:
    """A positive family parameter with its rationality data.

    For rational values, p/q is the reduced fraction with gcd(p, q) = 1.
    """

    value: QuadScalar

    def __post_init__(self):
        object.__setattr__(self, "value", QuadScalar.coerce(self.value))
        if self.value.sign() <= 0:
            raise ValueError(f"parameter must be positive, got {self.value}")

    @property
    def rational(self) -> bool:
        return self.value.is_rational()

    @property
    def p(self) -> int:
        if not self.rational:
            raise ValueError("irrational parameter has no numerator")
        return self.value.r.numerator

    @property
    def q(self) -> int:
        if not self.rational:
            raise ValueError("irrational parameter has no denominator")
        return self.value.r.denominator

    @property
    def is_integer(self) -> bool:
        return self.rational and self.q == 1

    def __str__(self):
        return format_scalar(self.value)

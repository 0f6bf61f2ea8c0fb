"""Scalar fields for exact and float computation.

Exact values are elements of sympy's Gaussian rational field ``QQ_I``.
Bargmann coefficients additionally carry powers of sqrt(2); those live in
:class:`SurdScalar`, backed by the cyclotomic field Q(zeta) with
zeta = exp(i*pi/4), which holds both i and sqrt(2). Float values are plain
``complex`` numbers compared with a relative tolerance passed by the caller.

Mixing an exact value with a float yields a float, so a single float
coefficient turns a whole computation into float mode. Floats never enter a
sympy domain: ``QQ_I.convert`` would silently rationalize them.
"""

from __future__ import annotations

import cmath
import math
import numbers
import re
from collections.abc import Iterable
from fractions import Fraction
from typing import Any

from sympy import QQ, QQ_I, Dummy, I, Poly, factor_list, sqrt

from .const import DEFAULT_TOL, QUARTER_TURN_SNAP
from .exceptions import InvalidInput

TWO_PI = 2.0 * math.pi
_SQRT2 = math.sqrt(2.0)

# Q(zeta_8); sqrt(2) = zeta - zeta^3 and i = zeta^2
SURD_FIELD = QQ.algebraic_field(sqrt(2) * (1 + I) / 2)

# "p/q" with optional signs and surrounding blanks
RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*$")


def _is_rational_number(value: Any) -> bool:
    """Return True for ints and Fractions (bools excluded)."""
    return isinstance(value, numbers.Rational) and not isinstance(value, bool)


def _is_float_number(value: Any) -> bool:
    """Return True for float-like numbers that are not rational."""
    return isinstance(value, numbers.Complex) and not isinstance(
        value, numbers.Rational
    )


def _qq(value: Any) -> Any:
    """Return value as an element of QQ."""
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _fraction(value: Any) -> Fraction:
    """Return a QQ element as a Fraction."""
    return Fraction(int(value.numerator), int(value.denominator))


class GaussianRational:
    """Exact complex number ``re + i*im`` with rational parts.

    The value is held as a ``QQ_I`` element; arithmetic between exact values
    is done by sympy and arithmetic with floats falls back to ``complex``.
    """

    __slots__ = ("element",)

    element: Any

    def __init__(self, re: Any = 0, im: Any = 0) -> None:
        object.__setattr__(self, "element", QQ_I(_qq(re), _qq(im)))

    @classmethod
    def from_element(cls, element: Any) -> GaussianRational:
        """Wrap a ``QQ_I`` element."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "element", element)
        return obj

    @classmethod
    def coerce(cls, value: Any) -> GaussianRational | None:
        """Return value as a GaussianRational, or None when it is not rational."""
        if isinstance(value, GaussianRational):
            return value
        if _is_rational_number(value):
            return cls(value)
        return None

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError(f"GaussianRational is immutable: {name}")

    @property
    def re(self) -> Fraction:
        return _fraction(self.element.x)

    @property
    def im(self) -> Fraction:
        return _fraction(self.element.y)

    real = re
    imag = im

    def _lift(self, other: Any) -> Any:
        o = GaussianRational.coerce(other)
        return None if o is None else o.element

    def __add__(self, other: Any) -> Any:
        o = self._lift(other)
        if o is not None:
            return GaussianRational.from_element(self.element + o)
        if _is_float_number(other):
            return complex(self) + other
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: Any) -> Any:
        o = self._lift(other)
        if o is not None:
            return GaussianRational.from_element(self.element - o)
        if _is_float_number(other):
            return complex(self) - other
        return NotImplemented

    def __rsub__(self, other: Any) -> Any:
        o = self._lift(other)
        if o is not None:
            return GaussianRational.from_element(o - self.element)
        if _is_float_number(other):
            return other - complex(self)
        return NotImplemented

    def __mul__(self, other: Any) -> Any:
        o = self._lift(other)
        if o is not None:
            return GaussianRational.from_element(self.element * o)
        if _is_float_number(other):
            return complex(self) * other
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> Any:
        o = self._lift(other)
        if o is not None:
            if not o:
                raise ZeroDivisionError("division by exact zero")
            return GaussianRational.from_element(self.element / o)
        if _is_float_number(other):
            return complex(self) / other
        return NotImplemented

    def __rtruediv__(self, other: Any) -> Any:
        o = self._lift(other)
        if o is not None:
            if not self.element:
                raise ZeroDivisionError("division by exact zero")
            return GaussianRational.from_element(o / self.element)
        if _is_float_number(other):
            return other / complex(self)
        return NotImplemented

    def __neg__(self) -> GaussianRational:
        return GaussianRational.from_element(-self.element)

    def __pos__(self) -> GaussianRational:
        return self

    def __pow__(self, exponent: int) -> GaussianRational:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0 and not self.element:
            raise ZeroDivisionError("division by exact zero")
        return GaussianRational.from_element(self.element**exponent)

    def conjugate(self) -> GaussianRational:
        """Return the complex conjugate."""
        x, y = self.element.x, self.element.y
        return GaussianRational.from_element(QQ_I(x, -y))

    def abs2(self) -> Fraction:
        """Return the exact squared modulus."""
        x, y = self.element.x, self.element.y
        return _fraction(x * x + y * y)

    def __abs__(self) -> float:
        return math.hypot(float(self.re), float(self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __bool__(self) -> bool:
        return bool(self.element)

    def __eq__(self, other: object) -> bool:
        o = self._lift(other)
        if o is not None:
            return bool(self.element == o)
        if _is_float_number(other):
            return complex(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.element.y:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({self})"

    def __str__(self) -> str:
        re_part, im_part = self.re, self.im
        if im_part == 0:
            return format_real(re_part)
        if re_part == 0:
            return f"{format_real(im_part)}i"
        sign = "+" if im_part > 0 else "-"
        return f"{format_real(re_part)}{sign}{format_real(abs(im_part))}i"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I_UNIT = GaussianRational(0, 1)


class SurdScalar:
    """Exact value ``rational + surd * sqrt(2)`` over the Gaussian rationals.

    Held as an element of :data:`SURD_FIELD` with coefficients c0..c3 in the
    powers of zeta. The parts are rational = c0 + c2*i and
    surd = (c1 - c3)/2 + (c1 + c3)/2 * i.
    """

    __slots__ = ("element",)

    element: Any

    def __init__(self, rational: Any = ZERO, surd: Any = ZERO) -> None:
        parts = []
        for name, value in (("rational", rational), ("surd", surd)):
            part = GaussianRational.coerce(value)
            if part is None:
                raise TypeError(f"SurdScalar part must be rational: {name}")
            parts.append(part)
        (p, q), (u, v) = ((part.re, part.im) for part in parts)
        coefficients = (p, u + v, q, v - u)
        element = SURD_FIELD.new([_qq(c) for c in reversed(coefficients)])
        object.__setattr__(self, "element", element)

    @classmethod
    def from_element(cls, element: Any) -> SurdScalar:
        """Wrap an element of :data:`SURD_FIELD`."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "element", element)
        return obj

    @classmethod
    def coerce(cls, value: Any) -> SurdScalar | None:
        """Return value as a SurdScalar, or None when it is not exact."""
        if isinstance(value, SurdScalar):
            return value
        gr = GaussianRational.coerce(value)
        if gr is not None:
            return cls(gr)
        return None

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError(f"SurdScalar is immutable: {name}")

    def _coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        high_first = [_fraction(c) for c in self.element.to_list()]
        c0, c1, c2, c3 = ([Fraction(0)] * (4 - len(high_first)) + high_first)[::-1]
        return c0, c1, c2, c3

    @property
    def rational(self) -> GaussianRational:
        c0, _, c2, _ = self._coefficients()
        return GaussianRational(c0, c2)

    @property
    def surd(self) -> GaussianRational:
        _, c1, _, c3 = self._coefficients()
        return GaussianRational((c1 - c3) / 2, (c1 + c3) / 2)

    def _lift(self, other: Any) -> Any:
        o = SurdScalar.coerce(other)
        return None if o is None else o.element

    def __add__(self, other: Any) -> Any:
        o = self._lift(other)
        if o is not None:
            return SurdScalar.from_element(self.element + o)
        if _is_float_number(other):
            return complex(self) + other
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: Any) -> Any:
        o = self._lift(other)
        if o is not None:
            return SurdScalar.from_element(self.element - o)
        if _is_float_number(other):
            return complex(self) - other
        return NotImplemented

    def __rsub__(self, other: Any) -> Any:
        o = self._lift(other)
        if o is not None:
            return SurdScalar.from_element(o - self.element)
        if _is_float_number(other):
            return other - complex(self)
        return NotImplemented

    def __mul__(self, other: Any) -> Any:
        o = self._lift(other)
        if o is not None:
            return SurdScalar.from_element(self.element * o)
        if _is_float_number(other):
            return complex(self) * other
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> SurdScalar:
        """Return 1/self."""
        if not self.element:
            raise ZeroDivisionError("division by exact zero")
        return SurdScalar.from_element(SURD_FIELD.one / self.element)

    def __truediv__(self, other: Any) -> Any:
        o = SurdScalar.coerce(other)
        if o is not None:
            return self * o.inverse()
        if _is_float_number(other):
            return complex(self) / other
        return NotImplemented

    def __rtruediv__(self, other: Any) -> Any:
        o = SurdScalar.coerce(other)
        if o is not None:
            return o * self.inverse()
        if _is_float_number(other):
            return other / complex(self)
        return NotImplemented

    def __neg__(self) -> SurdScalar:
        return SurdScalar.from_element(-self.element)

    def __pos__(self) -> SurdScalar:
        return self

    def __pow__(self, exponent: int) -> SurdScalar:
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        return SurdScalar.from_element(base.element ** abs(exponent))

    def conjugate(self) -> SurdScalar:
        """Return the complex conjugate; zeta maps to zeta^-1 = -zeta^3."""
        c0, c1, c2, c3 = self._coefficients()
        conjugated = (c0, -c3, -c2, -c1)
        return SurdScalar.from_element(
            SURD_FIELD.new([_qq(c) for c in reversed(conjugated)])
        )

    def __complex__(self) -> complex:
        return complex(self.rational) + _SQRT2 * complex(self.surd)

    def __abs__(self) -> float:
        return abs(complex(self))

    def __bool__(self) -> bool:
        return bool(self.element)

    def __eq__(self, other: object) -> bool:
        o = self._lift(other)
        if o is not None:
            return bool(self.element == o)
        if _is_float_number(other):
            return complex(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        rational, surd = self.rational, self.surd
        if not surd:
            return hash(rational)
        return hash((rational, surd))

    def __repr__(self) -> str:
        return f"SurdScalar({self})"

    def __str__(self) -> str:
        rational, surd = self.rational, self.surd
        if not surd:
            return str(rational)
        return f"({rational})+({surd})*sqrt2"


SQRT2 = SurdScalar(ZERO, ONE)

Scalar = GaussianRational | SurdScalar | complex


def as_scalar(value: Any) -> Scalar:
    """Coerce a number into the scalar field it belongs to."""
    if isinstance(value, (GaussianRational, SurdScalar)):
        return value
    if isinstance(value, bool):
        raise InvalidInput(f"not a scalar: {value!r}")
    if _is_rational_number(value):
        return GaussianRational(Fraction(value))
    if isinstance(value, numbers.Complex):
        return complex(value)
    raise InvalidInput(f"not a scalar: {value!r}")


def is_exact(value: Any) -> bool:
    """Return True when value belongs to an exact field."""
    return isinstance(value, (GaussianRational, SurdScalar)) or _is_rational_number(
        value
    )


def all_exact(values: Iterable[Any]) -> bool:
    """Return True when every value is exact."""
    return all(is_exact(v) for v in values)


def to_complex(value: Any) -> complex:
    """Embed a scalar into double precision."""
    return complex(value)


def zero_like(exact: bool) -> Scalar:
    """Return the zero of the exact field or of the floats."""
    return ZERO if exact else 0j


def abs2(value: Any) -> Any:
    """Return |value|^2, exactly when value is exact."""
    if is_exact(value):
        return value * value.conjugate()
    return abs(value) ** 2


def is_zero(value: Any, tol: float = DEFAULT_TOL) -> bool:
    """Exact zero test, or |value| <= tol for floats."""
    if is_exact(value):
        return not value
    return abs(value) <= tol


def approx_equal(x: Any, y: Any, tol: float = DEFAULT_TOL) -> bool:
    """Exact equality, or |x-y| <= tol * max(1, |x|, |y|) when a float is involved."""
    if is_exact(x) and is_exact(y):
        return bool(x == y)
    cx, cy = complex(x), complex(y)
    return abs(cx - cy) <= tol * max(1.0, abs(cx), abs(cy))


def is_unimodular(value: Any, tol: float = DEFAULT_TOL) -> bool:
    """Return True when |value| = 1."""
    return approx_equal(abs2(value), 1, tol)


def unit_from_tangent(t: Fraction | int) -> GaussianRational:
    """Return the exact unit ((1-t^2) + 2ti) / (1+t^2), i.e. exp(2i*atan(t))."""
    t = Fraction(t)
    d = 1 + t * t
    return GaussianRational((1 - t * t) / d, 2 * t / d)


def gaussian_root(value: GaussianRational, n: int) -> GaussianRational | None:
    """Return an n-th root of value in Q(i), or None when there is none.

    The roots are read off the linear factors of x^n - value over Q(i).
    """
    if n < 1:
        raise InvalidInput(f"root order must be positive: {n}")
    x = Dummy("x")
    _, factors = factor_list(x**n - QQ_I.to_sympy(value.element), x, gaussian=True)
    for factor, _ in factors:
        poly = Poly(factor, x)
        if poly.degree() == 1:
            lead, const = (QQ_I.from_sympy(c) for c in poly.all_coeffs())
            return GaussianRational.from_element(-const / lead)
    return None


def unit_from_angle(theta: float) -> Scalar:
    """Return exp(i*theta); quarter turns give the exact units 1, i, -1, -i."""
    turns = theta / (math.pi / 2)
    nearest = round(turns)
    if abs(turns - nearest) <= QUARTER_TURN_SNAP:
        return (ONE, I_UNIT, -ONE, -I_UNIT)[nearest % 4]
    return cmath.exp(1j * theta)


def angle_of(value: Any) -> float:
    """Return the argument of value reduced to [0, 2*pi)."""
    angle = cmath.phase(complex(value)) % TWO_PI
    # x % 2pi can round up to 2pi for tiny negative x
    return 0.0 if angle >= TWO_PI else angle


def format_real(value: Fraction) -> str:
    """Format a rational as ``p`` or ``p/q``."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_real(value: Any) -> Fraction | float:
    """Parse a real part: ints, "p/q" and decimal strings are exact, floats are not."""
    if isinstance(value, bool):
        raise InvalidInput(f"not a number: {value!r}")
    if _is_rational_number(value):
        return Fraction(value)
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        m = RATIONAL_RE.match(value)
        if m:
            num, den = int(m.group(1)), int(m.group(2))
            if den == 0:
                raise InvalidInput(f"zero denominator in {value!r}")
            return Fraction(num, den)
        try:
            return Fraction(value.strip())
        except ValueError as err:
            raise InvalidInput(f"not a rational number: {value!r}") from err
    raise InvalidInput(f"not a number: {value!r}")


def parse_scalar(value: Any) -> Scalar:
    """Parse ``[re, im]`` or a bare real into a scalar."""
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise InvalidInput(f"complex values are [re, im] pairs: {value!r}")
        re_part, im_part = parse_real(value[0]), parse_real(value[1])
    else:
        re_part, im_part = parse_real(value), Fraction(0)
    if isinstance(re_part, float) or isinstance(im_part, float):
        return complex(float(re_part), float(im_part))
    return GaussianRational(re_part, im_part)


def scalar_to_json(value: Any) -> Any:
    """Return the JSON form of a scalar: exact parts as strings, floats as numbers."""
    if isinstance(value, SurdScalar):
        return {
            "rational": scalar_to_json(value.rational),
            "sqrt2": scalar_to_json(value.surd),
        }
    gr = GaussianRational.coerce(value)
    if gr is not None:
        return [format_real(gr.re), format_real(gr.im)]
    c = complex(value)
    return [c.real, c.imag]

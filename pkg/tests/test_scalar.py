"""Tests for exact and float scalars."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest
from sympy import QQ, QQ_I

from radar_ambiguity.exceptions import InvalidInput
from radar_ambiguity.scalar import (
    I_UNIT,
    ONE,
    SQRT2,
    ZERO,
    GaussianRational,
    SurdScalar,
    abs2,
    angle_of,
    approx_equal,
    gaussian_root,
    as_scalar,
    is_exact,
    is_unimodular,
    parse_real,
    parse_scalar,
    scalar_to_json,
    unit_from_angle,
    unit_from_tangent,
)


class TestGaussianRational:
    """Tests for GaussianRational arithmetic."""

    def test_multiply_and_divide(self) -> None:
        """Test products and quotients stay exact."""
        x = GaussianRational(1, 2)
        y = GaussianRational(3, -1)
        assert x * y == GaussianRational(5, 5)
        assert GaussianRational(5, 5) / x == y

    def test_division_by_zero(self) -> None:
        """Test dividing by the exact zero raises."""
        with pytest.raises(ZeroDivisionError):
            ONE / ZERO

    def test_mixing_with_float_gives_complex(self) -> None:
        """Test a float operand turns the result into a complex number."""
        result = GaussianRational(1, 1) * 0.5
        assert isinstance(result, complex)
        assert result == complex(0.5, 0.5)

    def test_powers(self) -> None:
        """Test integer powers, including negative ones."""
        assert I_UNIT**2 == -ONE
        assert I_UNIT**-1 == -I_UNIT
        assert GaussianRational(2) ** -2 == GaussianRational(Fraction(1, 4))

    def test_conjugate_and_modulus(self) -> None:
        """Test conjugation and the exact squared modulus."""
        x = GaussianRational(Fraction(3, 5), Fraction(4, 5))
        assert x.conjugate() == GaussianRational(Fraction(3, 5), Fraction(-4, 5))
        assert x.abs2() == 1
        assert abs2(x) == ONE

    def test_string_form(self) -> None:
        """Test the readable form of exact values."""
        assert str(GaussianRational(1, -2)) == "1-2i"
        assert str(GaussianRational(Fraction(1, 2))) == "1/2"
        assert str(I_UNIT) == "1i"

    def test_backed_by_qq_i(self) -> None:
        """Test the value is a QQ_I element and floats never enter QQ_I."""
        x = GaussianRational(Fraction(1, 2), -3)
        assert x.element == QQ_I(QQ(1, 2), -3)
        assert (x.re, x.im) == (Fraction(1, 2), Fraction(-3))
        result = x + 0.1
        assert isinstance(result, complex)
        assert result == pytest.approx(0.6 - 3j)

    def test_immutable_and_hashable(self) -> None:
        """Test values are frozen and hash like the equal int or Fraction."""
        x = GaussianRational(3)
        with pytest.raises(AttributeError):
            x.element = QQ_I(4)  # type: ignore[misc]
        assert hash(x) == hash(3)
        assert {x: "three"}[3] == "three"
        assert hash(GaussianRational(1, 2)) == hash(GaussianRational(1, 2))


class TestSurdScalar:
    """Tests for values in Q(i)(sqrt 2)."""

    def test_sqrt2_squared(self) -> None:
        """Test sqrt(2) * sqrt(2) is exactly 2."""
        assert SQRT2 * SQRT2 == 2

    def test_inverse(self) -> None:
        """Test 1 / (1 + sqrt 2) = sqrt 2 - 1."""
        x = SurdScalar(ONE, ONE)
        assert x.inverse() == SurdScalar(-ONE, ONE)
        assert x * x.inverse() == 1

    def test_mixes_with_gaussian_rationals(self) -> None:
        """Test products with Gaussian rationals on either side."""
        assert I_UNIT * SQRT2 == SurdScalar(ZERO, I_UNIT)
        assert SQRT2 * 3 == SurdScalar(ZERO, GaussianRational(3))
        assert is_exact(SQRT2 + 1)

    def test_complex_value(self) -> None:
        """Test the float embedding."""
        assert complex(SQRT2 + 1) == pytest.approx(1 + math.sqrt(2))

    def test_parts_survive_the_field(self) -> None:
        """Test rational and surd parts read back from the cyclotomic field."""
        rational = GaussianRational(Fraction(1, 2), -3)
        surd = GaussianRational(2, Fraction(5, 7))
        x = SurdScalar(rational, surd)
        assert (x.rational, x.surd) == (rational, surd)
        expected = complex(rational) + math.sqrt(2) * complex(surd)
        assert complex(x) == pytest.approx(expected)

    def test_sqrt2_element(self) -> None:
        """Test sqrt(2) is zeta - zeta^3 in Q(zeta)."""
        assert SQRT2.element.to_list() == [-1, 0, 1, 0]
        assert (SQRT2 * I_UNIT).element.to_list() == [1, 0, 1, 0]

    def test_conjugate(self) -> None:
        """Test conjugation conjugates both parts and matches the float value."""
        x = SurdScalar(GaussianRational(1, 2), GaussianRational(-3, 4))
        y = x.conjugate()
        assert y.rational == GaussianRational(1, -2)
        assert y.surd == GaussianRational(-3, -4)
        assert complex(y) == pytest.approx(complex(x).conjugate())
        assert x * y == SurdScalar(55, 10)

    def test_float_stays_complex(self) -> None:
        """Test mixing with a float gives a complex number."""
        result = SQRT2 * 0.5
        assert isinstance(result, complex)
        assert result == pytest.approx(math.sqrt(2) / 2)

    def test_hash_matches_gaussian_rational(self) -> None:
        """Test surd-free values hash like their Gaussian rational."""
        assert hash(SurdScalar(GaussianRational(2, 1))) == hash(GaussianRational(2, 1))
        assert SurdScalar(GaussianRational(2, 1)) == GaussianRational(2, 1)


class TestUnits:
    """Tests for exact and float units."""

    def test_unit_from_tangent(self) -> None:
        """Test rational points of the unit circle."""
        unit = unit_from_tangent(Fraction(1, 2))
        assert unit == GaussianRational(Fraction(3, 5), Fraction(4, 5))
        assert is_unimodular(unit)

    def test_gaussian_root(self) -> None:
        """Test exact roots in Q(i) and their absence."""
        u = GaussianRational(Fraction(3, 5), Fraction(4, 5))
        root = gaussian_root(u * u, 2)
        assert root in (u, -u)
        assert gaussian_root(-ONE, 2) in (I_UNIT, -I_UNIT)
        assert gaussian_root(u, 2) is None
        assert gaussian_root(I_UNIT, 2) is None
        cube = gaussian_root(u**3, 3)
        assert cube is not None
        assert cube**3 == u**3
        with pytest.raises(InvalidInput):
            gaussian_root(u, 0)

    def test_quarter_turns_are_exact(self) -> None:
        """Test quarter turns snap to the exact units."""
        assert unit_from_angle(0.0) is ONE
        assert unit_from_angle(math.pi / 2) is I_UNIT
        assert unit_from_angle(-math.pi / 2) == -I_UNIT

    def test_other_angles_are_complex(self) -> None:
        """Test generic angles give complex units."""
        unit = unit_from_angle(0.3)
        assert isinstance(unit, complex)
        assert abs(unit) == pytest.approx(1.0)

    def test_angle_of(self) -> None:
        """Test angles are reduced to [0, 2*pi)."""
        assert angle_of(-ONE) == pytest.approx(math.pi)
        assert angle_of(-I_UNIT) == pytest.approx(1.5 * math.pi)
        assert angle_of(complex(1, -1e-18)) < 2 * math.pi


class TestParsing:
    """Tests for parsing scalar values."""

    def test_parse_real(self) -> None:
        """Test rationals stay exact and floats stay floats."""
        assert parse_real("3/4") == Fraction(3, 4)
        assert parse_real("0.25") == Fraction(1, 4)
        assert parse_real(7) == Fraction(7)
        assert isinstance(parse_real(0.25), float)

    @pytest.mark.parametrize("value", ["1/0", "abc", True, None])
    def test_parse_real_rejects(self, value: object) -> None:
        """Test malformed reals raise InvalidInput."""
        with pytest.raises(InvalidInput):
            parse_real(value)

    def test_parse_scalar(self) -> None:
        """Test pairs and bare reals."""
        assert parse_scalar([1, "1/2"]) == GaussianRational(1, Fraction(1, 2))
        assert parse_scalar("-2") == GaussianRational(-2)
        assert parse_scalar([1.0, 0]) == complex(1.0, 0.0)

    def test_parse_scalar_rejects_triples(self) -> None:
        """Test complex values must be pairs."""
        with pytest.raises(InvalidInput):
            parse_scalar([1, 2, 3])

    def test_as_scalar(self) -> None:
        """Test coercion into the matching field."""
        assert as_scalar(3) == GaussianRational(3)
        assert isinstance(as_scalar(1.5), complex)
        with pytest.raises(InvalidInput):
            as_scalar("1")

    def test_scalar_to_json(self) -> None:
        """Test exact parts are written as strings and floats as numbers."""
        assert scalar_to_json(GaussianRational(Fraction(1, 2), -3)) == ["1/2", "-3"]
        assert scalar_to_json(complex(0.5, 1.0)) == [0.5, 1.0]
        assert scalar_to_json(SQRT2) == {"rational": ["0", "0"], "sqrt2": ["1", "0"]}


class TestComparison:
    """Tests for tolerance-aware comparison."""

    def test_exact_comparison_is_strict(self) -> None:
        """Test exact values compare without tolerance."""
        tiny = GaussianRational(1, Fraction(1, 10**12))
        assert not approx_equal(GaussianRational(1), tiny)

    def test_float_comparison_is_relative(self) -> None:
        """Test float comparison scales with the magnitude."""
        assert approx_equal(1.0, 1.0 + 1e-12)
        assert approx_equal(1e6, 1e6 + 1e-4, 1e-9)
        assert not approx_equal(1.0, 1.001)

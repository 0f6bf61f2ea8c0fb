"""Tests for sequence helpers."""

from __future__ import annotations

from collections import Counter

import pytest

from radar_ambiguity.exceptions import EmptySignal
from radar_ambiguity.models import Signal, SupportSet
from radar_ambiguity.scalar import I_UNIT, GaussianRational
from radar_ambiguity.seqcore import (
    autocorrelation,
    conj_reverse,
    cross_sequence,
    difference_set,
    normalize,
    normalized,
    polynomial_coeffs,
    signal_from_polynomial,
    sum2_multiset,
    sum3_multiset,
    support,
    total_energy,
)


class TestNormalize:
    """Tests for normalization."""

    def test_returns_shift(self) -> None:
        """Test the offset is returned as the shift."""
        s, shift = normalize(Signal.of(1, 2, offset=-3))
        assert s == Signal.of(1, 2)
        assert shift == -3

    def test_empty_signal(self) -> None:
        """Test the zero signal cannot be normalized."""
        with pytest.raises(EmptySignal):
            normalized(Signal.of(0))


class TestCorrelations:
    """Tests for cross sequences and autocorrelations."""

    def test_cross_sequence(self) -> None:
        """Test c_j = a_j conj(a_(j-k))."""
        a = Signal.of(1, I_UNIT, 2)
        assert cross_sequence(a, 0) == [1, 1, 4]
        assert cross_sequence(a, 1) == [0, I_UNIT, 2 * -I_UNIT]
        assert cross_sequence(a, 2) == [0, 0, 2]
        assert cross_sequence(a, 3) == [0, 0, 0]

    def test_autocorrelation(self) -> None:
        """Test lags run from -(L-1) to L-1."""
        assert autocorrelation([GaussianRational(1), GaussianRational(2)]) == [2, 5, 2]

    def test_autocorrelation_is_hermitian(self) -> None:
        """Test s_(-m) = conj(s_m)."""
        row = autocorrelation([GaussianRational(1, 1), I_UNIT, GaussianRational(3)])
        assert row == [v.conjugate() for v in reversed(row)]

    def test_total_energy(self) -> None:
        """Test the energy is the zero-lag coefficient."""
        a = Signal.of(1, I_UNIT, 2)
        assert total_energy(a) == 6


class TestSupports:
    """Tests for support arithmetic."""

    def test_support(self) -> None:
        """Test only nonzero indices are kept."""
        assert support(Signal.of(1, 0, 3, offset=2)) == SupportSet.of([2, 4])

    def test_difference_set(self) -> None:
        """Test all differences including zero."""
        assert difference_set(SupportSet.of([0, 1, 3])) == SupportSet.of(
            [-3, -2, -1, 0, 1, 2, 3]
        )

    def test_sum_multisets(self) -> None:
        """Test sums with multiplicity."""
        support_set = SupportSet.of([0, 1, 2])
        assert sum2_multiset(support_set) == Counter({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})
        assert sum3_multiset(support_set)[3] == 2


class TestPolynomialView:
    """Tests for the coefficient view of a signal."""

    def test_zero_padding(self) -> None:
        """Test a nominal degree pads with zeros."""
        assert polynomial_coeffs(Signal.of(1, 2), 3) == [1, 2, 0, 0]

    def test_nominal_degree_below_signal_degree(self) -> None:
        """Test the signal degree wins over a smaller nominal degree."""
        assert polynomial_coeffs(Signal.of(1, 2, 3), 1) == [1, 2, 3]

    def test_signal_from_polynomial(self) -> None:
        """Test coefficients map to a normalized signal."""
        assert signal_from_polynomial([1, 0, 2]) == Signal.of(1, 0, 2)

    def test_conj_reverse(self) -> None:
        """Test the reversal conjugates the coefficients."""
        assert conj_reverse(Signal.of(1, I_UNIT, 3)) == Signal.of(3, -I_UNIT, 1)

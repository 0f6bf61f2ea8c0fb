"""Finite sequences, supports and coefficient algebra."""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Sequence
from itertools import combinations_with_replacement

from .exceptions import EmptySignal
from .models import Signal, SupportSet
from .scalar import ZERO, Scalar, all_exact, zero_like

_LOGGER = logging.getLogger(__name__)


def normalize(s: Signal) -> tuple[Signal, int]:
    """Return (signal in S(N), shift) with s_j = normalized_(j - shift)."""
    if s.is_empty:
        raise EmptySignal("empty signal")
    return Signal(s.coeffs, 0), s.offset


def normalized(s: Signal) -> Signal:
    """Return only the normalized signal."""
    return normalize(s)[0]


def conj_reverse(a: Signal) -> Signal:
    """Return b_j = conj(a_(N-j)), the time-reversal of a normalized signal."""
    return Signal(tuple(c.conjugate() for c in reversed(a.coeffs)), 0)


def cross_sequence(a: Signal, k: int) -> list[Scalar]:
    """Return c_j = a_j * conj(a_(j-k)) for j over the index range of a."""
    return [a.coefficient(j) * a.coefficient(j - k).conjugate() for j in a.indices]


def autocorrelation(c: Sequence[Scalar]) -> list[Scalar]:
    """Return s_m = sum_n c_n * conj(c_(n-m)) for m = -(L-1)..(L-1)."""
    length = len(c)
    start = zero_like(all_exact(c))
    out: list[Scalar] = []
    for m in range(-(length - 1), length):
        total = start
        for n in range(max(0, m), min(length, length + m)):
            total = total + c[n] * c[n - m].conjugate()
        out.append(total)
    return out


def support(a: Signal) -> SupportSet:
    """Return the absolute indices of the nonzero coefficients."""
    return SupportSet.of(j for j in a.indices if a.coefficient(j) != 0)


def difference_set(support_set: SupportSet) -> SupportSet:
    """Return the difference set {n1 - n2}."""
    return SupportSet.of(n1 - n2 for n1 in support_set for n2 in support_set)


def sum2_multiset(support_set: SupportSet) -> Counter[int]:
    """Return all sums n1 + n2 with n1 <= n2, with multiplicity."""
    return Counter(sum(p) for p in combinations_with_replacement(support_set, 2))


def sum3_multiset(support_set: SupportSet) -> Counter[int]:
    """Return all sums n1 + n2 + n3 with n1 <= n2 <= n3, with multiplicity."""
    return Counter(sum(t) for t in combinations_with_replacement(support_set, 3))


def signal_from_polynomial(coeffs: Sequence[Scalar]) -> Signal:
    """Return the signal of P(z) = sum a_j z^j."""
    return Signal(tuple(coeffs), 0)


def polynomial_coeffs(a: Signal, degree: int | None = None) -> list[Scalar]:
    """Return a_0..a_degree, zero padded, for a normalized signal."""
    n = a.degree if degree is None else degree
    if n < a.degree:
        _LOGGER.debug("Nominal degree %d below signal degree %d", n, a.degree)
        n = a.degree
    pad = zero_like(a.is_exact)
    return list(a.coeffs) + [pad] * (n - a.degree)


def total_energy(a: Signal) -> Scalar:
    """Return sum |a_j|^2."""
    total: Scalar = ZERO
    for c in a.coeffs:
        total = total + c * c.conjugate()
    return total

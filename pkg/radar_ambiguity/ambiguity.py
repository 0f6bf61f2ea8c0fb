"""Discrete ambiguity signatures, partner decisions and trivial transforms."""

from __future__ import annotations

import logging
from collections.abc import Sequence

import numpy as np

from .const import DEFAULT_TOL
from .exceptions import SupportMismatch
from .models import (
    AmbiguitySignature,
    HeisenbergElement,
    Multiplier,
    Signal,
    SupportSet,
)
from .scalar import (
    ONE,
    TWO_PI,
    GaussianRational,
    Scalar,
    abs2,
    angle_of,
    approx_equal,
    gaussian_root,
    is_exact,
    is_zero,
    to_complex,
    unit_from_angle,
)
from .seqcore import autocorrelation, cross_sequence, normalized, support

_LOGGER = logging.getLogger(__name__)


def signature(a: Signal) -> AmbiguitySignature:
    """Return the autocorrelation rows of the cross sequences for k = 0..N."""
    a = normalized(a)
    rows = tuple(
        tuple(autocorrelation(cross_sequence(a, k))) for k in range(a.degree + 1)
    )
    return AmbiguitySignature(degree=a.degree, rows=rows)


def is_partner(a: Signal, b: Signal, tol: float = DEFAULT_TOL) -> bool:
    """Return True when |A(a)(k, y)| = |A(b)(k, y)| for every k and y."""
    a, b = normalized(a), normalized(b)
    if a.degree != b.degree:
        _LOGGER.debug("Degrees differ (%d vs %d), not partners", a.degree, b.degree)
        return False
    sig_a, sig_b = signature(a), signature(b)
    diff = sig_a.first_difference(sig_b, tol)
    if diff is not None:
        _LOGGER.debug("Signatures differ at shift %d, lag %d", *diff)
        return False
    return True


def ambiguity_values(a: Signal, k: int, ys: Sequence[float] | np.ndarray) -> np.ndarray:
    """Evaluate A(a)(k, y) = sum_j a_j conj(a_(j-k)) e^(ijy) at each y."""
    c = np.array([to_complex(v) for v in cross_sequence(a, k)], dtype=complex)
    j = np.arange(a.offset, a.offset + len(c))
    return np.exp(1j * np.outer(np.asarray(ys, dtype=float), j)) @ c


def signature_row_values(
    sig: AmbiguitySignature, k: int, ys: Sequence[float] | np.ndarray
) -> np.ndarray:
    """Evaluate sum_m s_m e^(imy), which equals |A(a)(k, y)|^2."""
    row = np.array([to_complex(v) for v in sig.row(k)], dtype=complex)
    if row.size == 0:
        return np.zeros(len(ys))
    lags = np.arange(row.size) - row.size // 2
    return (np.exp(1j * np.outer(np.asarray(ys, dtype=float), lags)) @ row).real


def heisenberg_action(h: HeisenbergElement, a: Signal) -> Signal:
    """Apply h to a without renormalizing."""
    values: dict[int, Scalar] = {}
    for i in a.indices:
        j = -i - h.shift if h.reflected else i + h.shift
        values[j] = h.phase * h.modulation**j * a.coefficient(i)
    lo = min(values)
    return Signal(tuple(values[j] for j in range(lo, lo + len(values))), lo)


def apply_trivial(h: HeisenbergElement, a: Signal) -> Signal:
    """Apply the trivial transform h and return the normalized result."""
    return normalized(heisenberg_action(h, normalized(a)))


def heisenberg_product(
    g: tuple[float, int, float], g2: tuple[float, int, float]
) -> tuple[float, int, float]:
    """Multiply (alpha, k, beta) elements: (a+a', k+k', b+b'+k'a), angles mod 2*pi."""
    alpha, k, beta = g
    alpha2, k2, beta2 = g2
    return (
        (alpha + alpha2) % TWO_PI,
        k + k2,
        (beta + beta2 + k2 * alpha) % TWO_PI,
    )


def heisenberg_element(
    g: tuple[float, int, float], *, reflected: bool = False
) -> HeisenbergElement:
    """Return the coefficient action of (alpha, k, beta).

    On f(t) = sum a_m e^(imt) the element acts as e^(i beta) e^(ikt) f(t + alpha),
    so b_j = e^(i(beta - k alpha)) e^(ij alpha) a_(j-k). The reflected element
    acts as e^(i beta) e^(-ikt) f(-t + alpha) and reads a_(-j-k) instead, with
    modulation e^(-i alpha).
    """
    alpha, k, beta = g
    omega = -alpha if reflected else alpha
    return HeisenbergElement.from_angles(beta - k * alpha, omega, k, reflected)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _bezout(values: Sequence[int]) -> tuple[int, list[int]]:
    """Return (g, coefficients) with sum(coefficient * value) = g = gcd(values)."""
    g, coefficients = values[0], [1]
    for v in values[1:]:
        g, x, y = _ext_gcd(g, v)
        coefficients = [c * x for c in coefficients] + [y]
    return g, coefficients


def _unit_root(sigma: Scalar, g: int) -> Scalar:
    """Return a g-th root of the unit sigma, exact when Q(i) holds one."""
    if isinstance(sigma, GaussianRational):
        root = gaussian_root(sigma, g)
        if root is not None:
            return root
        _LOGGER.debug("No exact %d-th root of %s, using a float root", g, sigma)
    return unit_from_angle(angle_of(sigma) / g)


def _affine_phase_witness(
    source: Sequence[Scalar], target: Sequence[Scalar], tol: float
) -> tuple[Scalar, Scalar] | None:
    """Find units (phase, rho) with target_j = phase * rho^j * source_j, if any.

    Ratios r_j = target_j / source_j must be units and r_j / r_0 = rho^j.
    With g the gcd of the support offsets, rho^g is pinned down exactly by a
    Bezout product of the ratios; every ratio must then be a power of it.
    Any g-th root serves as rho. An exact root in Q(i) is used when one
    exists, otherwise rho is a float root even for exact inputs.
    """
    for s, t in zip(source, target, strict=True):
        if is_zero(s, tol) != is_zero(t, tol):
            return None
    points = [j for j, s in enumerate(source) if not is_zero(s, tol)]
    ratios = {j: target[j] / source[j] for j in points}
    if not all(approx_equal(abs2(r), 1, tol) for r in ratios.values()):
        return None
    j0 = points[0]
    phase = ratios[j0]
    offsets = [j - j0 for j in points[1:]]
    if not offsets:
        return phase, ONE
    relative = {j - j0: ratios[j] / phase for j in points[1:]}
    g, coefficients = _bezout(offsets)
    sigma: Scalar = ONE
    for d, x in zip(offsets, coefficients, strict=True):
        sigma = sigma * relative[d] ** x
    for d in offsets:
        if not approx_equal(relative[d], sigma ** (d // g), tol):
            return None
    rho = sigma if g == 1 else _unit_root(sigma, g)
    if j0:
        phase = phase / rho**j0
    return phase, rho


def _as_unit(value: Scalar) -> Scalar:
    """Project a float witness onto the unit circle; exact units pass through."""
    if is_exact(value):
        return value
    return complex(value) / abs(complex(value))


def is_trivial_partner(
    a: Signal, b: Signal, tol: float = DEFAULT_TOL
) -> HeisenbergElement | None:
    """Return h with b = apply_trivial(h, a), trying direct before reflected."""
    a, b = normalized(a), normalized(b)
    if a.degree != b.degree:
        return None
    for reflected in (False, True):
        source = a.coeffs[::-1] if reflected else a.coeffs
        witness = _affine_phase_witness(source, b.coeffs, tol)
        if witness is None:
            _LOGGER.debug("No %s witness", "reflected" if reflected else "direct")
            continue
        phase, rho = witness
        return HeisenbergElement(
            phase=_as_unit(phase),
            modulation=_as_unit(rho),
            shift=-a.degree if reflected else 0,
            reflected=reflected,
        )
    return None


def check_multiplier_condition(c: Multiplier, tol: float = DEFAULT_TOL) -> bool:
    """Return True when c(n1)conj(c(n2)) depends only on n1 - n2."""
    by_difference: dict[int, Scalar] = {}
    mapping = c.as_mapping()
    for n1, c1 in mapping.items():
        for n2, c2 in mapping.items():
            value = c1 * c2.conjugate()
            d = n1 - n2
            seen = by_difference.setdefault(d, value)
            if not approx_equal(seen, value, tol):
                _LOGGER.debug(
                    "Condition fails for difference %d at (%d, %d)", d, n1, n2
                )
                return False
    return True


def apply_multiplier(c: Multiplier, a: Signal) -> Signal:
    """Return b_n = c(n) a_n."""
    supp = support(a)
    missing = [n for n in supp if n not in c.support]
    if missing:
        raise SupportMismatch(f"signal support {supp} not contained in {c.support}")
    mapping = c.as_mapping()
    return Signal(
        tuple(mapping.get(j, ONE) * a.coefficient(j) for j in a.indices), a.offset
    )


def restricted_partner_check(
    a: Signal, b: Signal, tol: float = DEFAULT_TOL
) -> list[Scalar] | None:
    """Return units eta_0..eta_N with cross(a, k) = eta_k * cross(b, k), if they exist.

    For negative shifts the factor is conj(eta_k).
    """
    a, b = normalized(a), normalized(b)
    if a.degree != b.degree:
        return None
    etas: list[Scalar] = []
    for k in range(a.degree + 1):
        ca, cb = cross_sequence(a, k), cross_sequence(b, k)
        pivot = next((j for j, v in enumerate(cb) if not is_zero(v, tol)), None)
        if pivot is None:
            if any(not is_zero(v, tol) for v in ca):
                return None
            etas.append(ONE)
            continue
        eta = ca[pivot] / cb[pivot]
        if not approx_equal(abs2(eta), 1, tol):
            _LOGGER.debug("Shift %d ratio %s is not a unit", k, eta)
            return None
        if not all(approx_equal(x, eta * y, tol) for x, y in zip(ca, cb, strict=True)):
            return None
        etas.append(eta)
    return etas


def dense_family_multiplier(
    n: int, inner: Scalar = ONE, outer: Scalar = ONE
) -> Multiplier:
    """Return c = inner on {-n..n} and c(3n+1) = outer.

    The set {-n..n} + {3n+1} only repeats differences inside {-n..n}, so
    the multiplier condition holds for any pair of units.
    """
    points = SupportSet.of([*range(-n, n + 1), 3 * n + 1])
    values = tuple(inner for _ in range(2 * n + 1)) + (outer,)
    return Multiplier(points, values)


def canonical_phase(b: Signal) -> Signal:
    """Rotate a normalized signal so b_0 and b_N are positive reals.

    The modulation is taken from the principal argument of b_N, so the
    result is one representative of the phase/modulation orbit.
    """
    b = normalized(b)
    values = [complex(v) for v in b.coeffs]
    phase = values[0] / abs(values[0])
    values = [v / phase for v in values]
    n = b.degree
    if n > 0:
        last = values[-1]
        omega = -np.angle(last) / n
        values = [v * complex(np.exp(1j * omega * j)) for j, v in enumerate(values)]
    return Signal(tuple(values), 0)

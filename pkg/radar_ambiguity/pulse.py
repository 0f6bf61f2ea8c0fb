"""Continuous ambiguity functions of pulse trains."""

from __future__ import annotations

import cmath
import logging
import math
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import IO, Any

import numpy as np
from scipy import integrate

from .const import (
    CSV_FORMAT,
    CSV_HEADER,
    DEFAULT_PULSE_SAMPLES,
    DEFAULT_PULSE_TOL,
    DEFAULT_SEED,
    PULSE_REGIME_FLAG,
    PULSE_UNIQUENESS_WIDTH,
    SMALL_Y,
)
from .exceptions import EmptyRange, InvalidInput, NonUnimodular
from .models import PulseDescriptor
from .scalar import Scalar, as_scalar, is_unimodular, to_complex, unit_from_angle
from .seqcore import cross_sequence, total_energy

_LOGGER = logging.getLogger(__name__)


def box_ambiguity(eta: float, x: float, y: float) -> complex:
    """Return the ambiguity function of the indicator of [0, eta] at (x, y)."""
    width = float(eta) - abs(x)
    if width <= 0:
        return 0j
    lo, hi = max(0.0, x), min(float(eta), float(eta) + x)
    center = cmath.exp(0.5j * y * (lo + hi))
    if abs(y) < SMALL_Y:
        return center * width * (1 - (width * y) ** 2 / 24)
    return center * 2 * math.sin(width * y / 2) / y


def _undecorated(u: PulseDescriptor, x: float, y: float) -> complex:
    k = math.floor(x + 0.5)
    box = box_ambiguity(float(u.eta), x - k, y)
    if box == 0:
        return 0j
    a = u.signal
    series = sum(
        (
            to_complex(c) * cmath.exp(1j * j * y)
            for j, c in zip(a.indices, cross_sequence(a, k), strict=True)
        ),
        0j,
    )
    return series * box


def pulse_ambiguity(u: PulseDescriptor, x: float, y: float) -> complex:
    """Return A(u)(x, y) from the discrete ambiguity and the box factor.

    The decorated signal c e^(i w t) u(e (t - s)) has ambiguity
    e^(i(w x + y s)) A(u)(e x, e y).
    """
    value = _undecorated(u, u.reflection * x, u.reflection * y)
    if u.is_decorated:
        value *= cmath.exp(1j * (u.modulation * x + y * u.shift))
    return value


def evaluate_pulse(u: PulseDescriptor, t: float) -> complex:
    """Return the decorated pulse train at time t."""
    s = u.reflection * (t - u.shift)
    j = math.floor(s)
    if s - j > float(u.eta):
        return 0j
    carrier = to_complex(u.phase) * cmath.exp(1j * u.modulation * t)
    return carrier * to_complex(u.signal.coefficient(j))


def _support_intervals(u: PulseDescriptor) -> list[tuple[float, float]]:
    eta = float(u.eta)
    intervals = []
    for j in u.signal.indices:
        if u.signal.coefficient(j) == 0:
            continue
        ends = (u.shift + u.reflection * j, u.shift + u.reflection * (j + eta))
        intervals.append((min(ends), max(ends)))
    return intervals


def quadrature_ambiguity(u: PulseDescriptor, x: float, y: float) -> complex:
    """Return the integral of u(t) conj(u(t - x)) e^(iyt).

    Adaptive quadrature runs on each overlap of the pulse supports.
    """
    intervals = _support_intervals(u)

    def integrand(t: float) -> complex:
        shifted = evaluate_pulse(u, t - x).conjugate()
        return evaluate_pulse(u, t) * shifted * cmath.exp(1j * y * t)

    total = 0j
    for lo1, hi1 in intervals:
        for lo2, hi2 in intervals:
            lo, hi = max(lo1, lo2 + x), min(hi1, hi2 + x)
            if hi <= lo:
                continue
            re, _ = integrate.quad(
                lambda t: integrand(t).real, lo, hi, epsabs=1e-13, epsrel=1e-12
            )
            im, _ = integrate.quad(
                lambda t: integrand(t).imag, lo, hi, epsabs=1e-13, epsrel=1e-12
            )
            total += complex(re, im)
    return total


def apply_continuous_trivial(
    u: PulseDescriptor,
    phase: Scalar = 1,
    modulation: float = 0.0,
    shift: float = 0.0,
    reflection: int = 1,
) -> PulseDescriptor:
    """Return v(t) = phase e^(i modulation t) w(reflection (t - shift)) where w is u.

    Decorations compose, so the result stays a single PulseDescriptor.
    """
    phase = as_scalar(phase)
    if not is_unimodular(phase, 1e-9):
        raise NonUnimodular(f"phase must have modulus 1: {phase}")
    if reflection not in (1, -1):
        raise InvalidInput(f"reflection must be +1 or -1: {reflection}")
    carried = unit_from_angle(-u.modulation * reflection * shift)
    return replace(
        u,
        phase=phase * u.phase * carried,
        modulation=modulation + reflection * u.modulation,
        shift=shift + reflection * u.shift,
        reflection=u.reflection * reflection,
    )


def peak(u: PulseDescriptor) -> float:
    """Return A(u)(0, 0) = eta * sum |a_j|^2, the maximum of |A(u)|."""
    return float(u.eta) * abs(to_complex(total_energy(u.signal)))


def _grid_block(u: PulseDescriptor, x: float, ys: np.ndarray) -> np.ndarray:
    values = np.array([pulse_ambiguity(u, x, float(y)) for y in ys], dtype=complex)
    return np.column_stack(
        [np.full(len(ys), x), ys, np.abs(values), values.real, values.imag]
    )


def export_grid(
    u: PulseDescriptor,
    xs: Sequence[float] | np.ndarray,
    ys: Sequence[float] | np.ndarray,
    workers: int | None = None,
) -> np.ndarray:
    """Return rows (x, y, |A|, Re A, Im A) in x-major order.

    Row blocks are computed in parallel.
    """
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if xs.size == 0 or ys.size == 0:
        raise EmptyRange("grid ranges must be nonempty")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        blocks = list(pool.map(lambda x: _grid_block(u, float(x), ys), xs))
    return np.vstack(blocks)


def write_grid_csv(table: np.ndarray, target: str | IO[str]) -> None:
    """Write a grid table with the fixed CSV header and 17 significant digits."""
    np.savetxt(
        target, table, fmt=CSV_FORMAT, delimiter=",", header=CSV_HEADER, comments=""
    )


@dataclass
class PulseReport:
    """Outcome of comparing the closed form with quadrature."""

    samples: int
    tol: float
    max_error: float
    flags: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.max_error <= self.tol

    def to_dict(self) -> dict[str, Any]:
        return {
            "samples": self.samples,
            "tol": self.tol,
            "max_error": self.max_error,
            "passed": self.passed,
            "flags": list(self.flags),
        }


def verify_pulse(
    u: PulseDescriptor,
    samples: int = DEFAULT_PULSE_SAMPLES,
    tol: float = DEFAULT_PULSE_TOL,
    seed: int = DEFAULT_SEED,
) -> PulseReport:
    """Compare pulse_ambiguity with quadrature at random points of the support box."""
    rng = np.random.default_rng(seed)
    reach = u.signal.degree + 1
    xs = rng.uniform(-reach, reach, samples)
    ys = rng.uniform(-math.pi, math.pi, samples)
    errors = [
        abs(pulse_ambiguity(u, x, y) - quadrature_ambiguity(u, x, y))
        for x, y in zip(xs.tolist(), ys.tolist(), strict=True)
    ]
    report = PulseReport(samples=samples, tol=tol, max_error=max(errors, default=0.0))
    if u.eta > PULSE_UNIQUENESS_WIDTH:
        _LOGGER.warning("Pulse width %s is %s", u.eta, PULSE_REGIME_FLAG)
        report.flags.append(PULSE_REGIME_FLAG)
    _LOGGER.debug(
        "Pulse verification: max error %.3g over %d samples",
        report.max_error,
        samples,
    )
    return report

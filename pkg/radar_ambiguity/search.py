"""Randomized numerical search for strange ambiguity partners.

The search minimizes the distance between signature coefficients with
Levenberg-Marquardt from many starts. It is a heuristic: finding nothing is
evidence, never a proof, that a signal has no strange partner.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import numpy as np
from scipy.optimize import least_squares

from .ambiguity import canonical_phase, is_partner, is_trivial_partner
from .const import (
    DEDUPE_TOL,
    DEFAULT_SEARCH_TOL,
    DEFAULT_SEED,
    MAX_DENOMINATOR,
    SEARCH_MAX_NFEV,
    SEARCH_PERTURBATION,
    SEARCH_TRIVIAL_TOL,
    STATUS_CERTIFIED,
    STATUS_NUMERIC_ONLY,
)
from .models import Signal
from .scalar import GaussianRational, to_complex
from .seqcore import normalized

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class StrangeCandidate:
    """A converged signal that is not a trivial partner of the target."""

    signal: Signal
    residual: float
    status: str

    @property
    def certified(self) -> bool:
        return self.status == STATUS_CERTIFIED

    def to_dict(self) -> dict[str, Any]:
        return {
            "signal": self.signal.to_dict(),
            "residual": self.residual,
            "status": self.status,
        }


def _signature_vector(x: np.ndarray, n: int) -> np.ndarray:
    """Return the real-stacked nonnegative-lag signature of b.

    The candidate is b = x[:n+1] + i x[n+1:].
    """
    b = x[: n + 1] + 1j * x[n + 1 :]
    parts = []
    for k in range(n + 1):
        c = b[k:] * np.conj(b[: n + 1 - k])
        parts.append(np.correlate(c, c, "full")[len(c) - 1 :])
    v = np.concatenate(parts)
    return np.concatenate([v.real, v.imag])


def _rationalize(b: Signal) -> Signal:
    """Round every part to the closest fraction with a bounded denominator."""
    return Signal(
        tuple(
            GaussianRational(
                Fraction(v.real).limit_denominator(MAX_DENOMINATOR),
                Fraction(v.imag).limit_denominator(MAX_DENOMINATOR),
            )
            for v in (complex(c) for c in b.coeffs)
        )
    )


class StrangePartnerSearch:
    """Least-squares search for partners of one signal."""

    def __init__(self, a: Signal, tol: float = DEFAULT_SEARCH_TOL) -> None:
        """Prepare the target signature of a."""
        self.a = normalized(a)
        self.tol = tol
        self.degree = self.a.degree
        values = np.array([to_complex(c) for c in self.a.coeffs], dtype=complex)
        self._norm = float(np.linalg.norm(values))
        self._target = _signature_vector(
            np.concatenate([values.real, values.imag]), self.degree
        )
        self._scale = max(1.0, float(np.linalg.norm(self._target)))

    def _residuals(self, x: np.ndarray) -> np.ndarray:
        return _signature_vector(x, self.degree) - self._target

    def _start(self, rng: np.random.Generator, start: Signal | None) -> np.ndarray:
        size = self.degree + 1
        noise = rng.standard_normal(size) + 1j * rng.standard_normal(size)
        if start is None:
            b = noise * (self._norm / float(np.linalg.norm(noise)))
        else:
            base = np.array(
                [to_complex(start.coefficient(j)) for j in range(size)], dtype=complex
            )
            b = base + SEARCH_PERTURBATION * noise
        return np.concatenate([b.real, b.imag])

    def solve(
        self, rng: np.random.Generator, start: Signal | None = None
    ) -> tuple[Signal, float]:
        """Run one restart and return the converged signal and its relative residual."""
        result = least_squares(
            self._residuals,
            self._start(rng, start),
            method="lm",
            ftol=1e-14,
            xtol=1e-14,
            gtol=1e-14,
            max_nfev=SEARCH_MAX_NFEV,
        )
        n = self.degree
        values = result.x[: n + 1] + 1j * result.x[n + 1 :]
        b = Signal(tuple(complex(v) for v in values))
        residual = float(np.linalg.norm(result.fun)) / self._scale
        return b, residual

    def classify(self, b: Signal, residual: float) -> StrangeCandidate | None:
        """Drop trivial partners; certify the rest through rational reconstruction."""
        if b.degree != self.degree:
            return None
        if is_trivial_partner(self.a, b, tol=SEARCH_TRIVIAL_TOL) is not None:
            return None
        canonical = canonical_phase(b)
        if self.a.is_exact:
            exact = _rationalize(canonical)
            if (
                exact.degree == self.degree
                and is_partner(self.a, exact)
                and is_trivial_partner(self.a, exact) is None
            ):
                _LOGGER.debug("Certified strange partner %s", exact)
                return StrangeCandidate(exact, residual, STATUS_CERTIFIED)
        return StrangeCandidate(canonical, residual, STATUS_NUMERIC_ONLY)

    def run(
        self,
        restarts: int,
        seed: int = DEFAULT_SEED,
        workers: int | None = None,
        starts: Sequence[Signal] | None = None,
    ) -> list[StrangeCandidate]:
        """Run the restarts in parallel and return deduplicated candidates."""
        if restarts <= 0:
            return []
        streams = np.random.SeedSequence(seed).spawn(restarts)
        seeds = list(starts) if starts else [None]

        def _one(index: int) -> tuple[Signal, float]:
            rng = np.random.default_rng(streams[index])
            return self.solve(rng, seeds[index % len(seeds)])

        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_one, range(restarts)))

        converged = [(b, r) for b, r in results if r < self.tol]
        candidates = [
            c for c in (self.classify(b, r) for b, r in converged) if c is not None
        ]
        unique = self._deduplicate_candidates(candidates)
        _LOGGER.info(
            "Search on %s: %d restarts, %d converged, %d strange (%d certified)",
            self.a,
            restarts,
            len(converged),
            len(unique),
            sum(c.certified for c in unique),
        )
        return unique

    def _deduplicate_candidates(
        self, candidates: list[StrangeCandidate]
    ) -> list[StrangeCandidate]:
        """Deduplicate candidates, preferring certified ones."""
        ordered = sorted(candidates, key=lambda c: (not c.certified, c.residual))
        result: list[StrangeCandidate] = []
        for candidate in ordered:
            if not any(
                kept.signal.approx_equal(candidate.signal, DEDUPE_TOL)
                for kept in result
            ):
                result.append(candidate)
        return result


def strange_search(
    a: Signal,
    restarts: int,
    tol: float = DEFAULT_SEARCH_TOL,
    *,
    seed: int = DEFAULT_SEED,
    workers: int | None = None,
    starts: Sequence[Signal] | None = None,
) -> list[StrangeCandidate]:
    """Search for strange partners of a from ``restarts`` random starts.

    ``starts`` replaces the random starting points by small perturbations of
    the given signals, cycled over the restarts.
    """
    return StrangePartnerSearch(a, tol).run(
        restarts, seed=seed, workers=workers, starts=starts
    )

"""Fixtures for radar ambiguity tests."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np
import pytest

from radar_ambiguity.models import Signal
from radar_ambiguity.scalar import (
    I_UNIT,
    ONE,
    GaussianRational,
    Scalar,
    unit_from_tangent,
)

# Path to fixtures directory
FIXTURES_DIR = Path(__file__).parent / "fixtures"

WORKED_A = Signal.of(1, 2, 0, 2, 4)
WORKED_B = Signal.of(2, 4, 0, 1, 2)


def load_fixture(filename: str) -> str:
    """Load a fixture file."""
    return (FIXTURES_DIR / filename).read_text()


def load_json_fixture(filename: str) -> dict[str, Any]:
    """Load a JSON fixture file."""
    return json.loads(load_fixture(filename))


def fixture_path(filename: str) -> str:
    """Return the path of a fixture file as a string argument."""
    return str(FIXTURES_DIR / filename)


def random_gaussian(rng: np.random.Generator, bound: int = 5) -> GaussianRational:
    """Return a Gaussian integer with parts in [-bound, bound]."""
    re, im = rng.integers(-bound, bound + 1, size=2)
    return GaussianRational(int(re), int(im))


def random_signal(
    rng: np.random.Generator, degree: int, bound: int = 5, real: bool = False
) -> Signal:
    """Return an exact signal in S(degree) with nonzero endpoints."""
    while True:
        if real:
            values = [
                GaussianRational(int(v))
                for v in rng.integers(-bound, bound + 1, size=degree + 1)
            ]
        else:
            values = [random_gaussian(rng, bound) for _ in range(degree + 1)]
        if values[0] != 0 and values[-1] != 0:
            return Signal(tuple(values))


def random_unit(rng: np.random.Generator) -> Scalar:
    """Return an exact unit: a quarter turn or a rational point of the circle."""
    choice = int(rng.integers(0, 6))
    if choice < 4:
        return (ONE, I_UNIT, -ONE, -I_UNIT)[choice]
    return unit_from_tangent(Fraction(int(rng.integers(1, 9)), int(rng.integers(1, 9))))


@pytest.fixture
def rng() -> np.random.Generator:
    """Return a seeded generator so property tests are deterministic."""
    return np.random.default_rng(20240611)


@pytest.fixture
def worked_pair() -> tuple[Signal, Signal]:
    """Return the strange pair (1,2,0,2,4), (2,4,0,1,2)."""
    return WORKED_A, WORKED_B


@pytest.fixture
def write_doc(tmp_path: Path):
    """Return a helper writing a JSON document into tmp_path."""

    def _write(name: str, document: Any) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return str(path)

    return _write

"""Helpers for parsing command-line arguments and JSON input documents.

Every helper raises InvalidInput with a readable message, so the CLI can
map malformed input to its usage exit code in one place.
"""

from __future__ import annotations

import json
import math
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np

from .const import FLIP_MODULATE, FLIP_SWAP
from .exceptions import EmptyRange, InvalidInput
from .matrix_kron import Flip
from .models import SupportSet
from .scalar import Scalar, parse_real, parse_scalar, unit_from_angle, unit_from_tangent

# One signed integer, blanks allowed around it
INT_RE = re.compile(r"^\s*([+-]?\d+)\s*$")

# Grid shapes such as "3x3"
GRID_RE = re.compile(r"^\s*(\d+)\s*[xX]\s*(\d+)\s*$")

# Slack absorbing rounding in (stop - start) / step
RANGE_SLACK = 1e-9


def parse_int_set(text: str) -> SupportSet:
    """Return the set written as "0,1,5" (braces optional)."""
    body = text.strip().strip("{}")
    if not body:
        return SupportSet(())
    values = []
    for part in body.split(","):
        m = INT_RE.match(part)
        if not m:
            raise InvalidInput(f"not an integer: {part.strip()!r} in {text!r}")
        values.append(int(m.group(1)))
    return SupportSet.of(values)


def parse_range(text: str) -> np.ndarray:
    """Return the inclusive range "start:stop:step" (or a single value) as floats."""
    parts = text.split(":")
    try:
        numbers = [float(parse_real(p.strip())) for p in parts]
    except InvalidInput as err:
        raise InvalidInput(f"bad range {text!r}: {err}") from err
    if len(numbers) == 1:
        return np.array(numbers)
    if len(numbers) != 3:
        raise InvalidInput(f"ranges are start:stop:step, got {text!r}")
    start, stop, step = numbers
    if step <= 0:
        raise InvalidInput(f"range step must be positive: {text!r}")
    count = math.floor((stop - start) / step + RANGE_SLACK) + 1
    if count <= 0:
        raise EmptyRange(f"range {text!r} has no points")
    return start + step * np.arange(count)


def parse_grid_shape(text: str) -> tuple[int, int]:
    """Return (rows, cols) from "RxC"."""
    m = GRID_RE.match(text)
    if not m:
        raise InvalidInput(f"grid shapes look like 3x3, got {text!r}")
    rows, cols = int(m.group(1)), int(m.group(2))
    if rows == 0 or cols == 0:
        raise EmptyRange(f"grid {text!r} has no points")
    return rows, cols


def parse_values(text: str) -> list[Scalar]:
    """Return comma-separated reals ("1,2/3,0.5") as scalars."""
    return [parse_scalar(part.strip()) for part in text.split(",") if part.strip()]


def parse_unit(text: str) -> Scalar:
    """Return a unit written as "@theta" (radians), "tan:t" (exact) or a real +-1."""
    text = text.strip()
    if text.startswith("@"):
        return unit_from_angle(float(parse_real(text[1:])))
    if text.startswith("tan:"):
        t = parse_real(text[4:])
        if isinstance(t, float):
            raise InvalidInput(f"tan: needs a rational, got {text!r}")
        return unit_from_tangent(t)
    return parse_scalar(text)


def parse_factors(text: str) -> list[tuple[Scalar, Scalar]]:
    """Return the factor pairs written as "alpha:beta,alpha:beta"."""
    factors = []
    for part in text.split(","):
        pieces = part.split(":")
        if len(pieces) != 2:
            raise InvalidInput(f"factors look like alpha:beta, got {part.strip()!r}")
        alpha, beta = (parse_scalar(piece.strip()) for piece in pieces)
        factors.append((alpha, beta))
    return factors


def parse_flips(text: str) -> list[Flip]:
    """Return flips written as "j:mode:unit", e.g. "1:swap:1,0:modulate:@1.2"."""
    flips: list[Flip] = []
    if not text.strip():
        return flips
    for part in text.split(","):
        pieces = part.split(":", 2)
        if len(pieces) < 2:
            raise InvalidInput(f"flips look like j:mode[:unit], got {part.strip()!r}")
        m = INT_RE.match(pieces[0])
        mode = pieces[1].strip()
        if not m or mode not in (FLIP_MODULATE, FLIP_SWAP):
            raise InvalidInput(f"bad flip {part.strip()!r}")
        unit = parse_unit(pieces[2]) if len(pieces) == 3 else parse_scalar(1)
        flips.append(Flip(int(m.group(1)), mode, unit))
    return flips


def parse_eta(text: str | Fraction) -> Fraction:
    """Return a pulse width; decimal strings stay exact."""
    if isinstance(text, Fraction):
        return text
    return Fraction(parse_real(text))


def load_document(text: str, source: str = "<input>") -> Any:
    """Parse JSON, reporting the line and column of syntax errors."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise InvalidInput(
            f"{source}:{err.lineno}:{err.colno}: {err.msg}",
            line=err.lineno,
            column=err.colno,
        ) from err


def read_document(path: str) -> Any:
    """Read and parse a JSON document from a path, or stdin for "-"."""
    if path == "-":
        return load_document(sys.stdin.read(), "<stdin>")
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise InvalidInput(f"cannot read {path}: {err.strerror}") from err
    return load_document(text, path)


def contains_float(document: Any) -> bool:
    """Return True when any number in the document is a float literal."""
    if isinstance(document, float):
        return True
    if isinstance(document, dict):
        return any(contains_float(v) for v in document.values())
    if isinstance(document, (list, tuple)):
        return any(contains_float(v) for v in document)
    return False

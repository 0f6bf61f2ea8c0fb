"""Voluptuous schemas for input documents and run options."""

from __future__ import annotations

from typing import Any

import voluptuous as vol

from .const import (
    CONF_MODE,
    CONF_SEED,
    CONF_TOL,
    CONF_VERBOSE,
    CONF_WORKERS,
    DEFAULT_SEED,
    DEFAULT_TOL,
    KEY_ALPHAS,
    KEY_COEFFS,
    KEY_DECORATIONS,
    KEY_ETA,
    KEY_MODULATION,
    KEY_OFFSET,
    KEY_PHASE,
    KEY_REFLECTION,
    KEY_SHIFT,
    KEY_SUPPORT,
    KEY_VALUES,
    MODE_EXACT,
    MODES,
)
from .exceptions import InvalidInput
from .scalar import parse_real


def real(value: Any) -> Any:
    """Accept ints, floats, and "p/q" or decimal strings."""
    try:
        parse_real(value)
    except InvalidInput as err:
        raise vol.Invalid(str(err)) from err
    return value


COMPLEX = vol.Any(vol.ExactSequence([real, real]), real)

SIGNAL_SCHEMA = vol.Schema(
    {
        vol.Optional(KEY_OFFSET, default=0): int,
        vol.Required(KEY_COEFFS): [COMPLEX],
    }
)

DECORATIONS_SCHEMA = vol.Schema(
    {
        vol.Optional(KEY_PHASE, default=1): COMPLEX,
        vol.Optional(KEY_MODULATION, default=0): real,
        vol.Optional(KEY_SHIFT, default=0): real,
        vol.Optional(KEY_REFLECTION, default=1): vol.In([1, -1]),
    }
)

PULSE_SCHEMA = SIGNAL_SCHEMA.extend(
    {
        vol.Optional(KEY_ETA): real,
        vol.Optional(KEY_DECORATIONS, default={}): DECORATIONS_SCHEMA,
    }
)

POLY_SCHEMA = vol.Schema(
    {
        vol.Required(KEY_COEFFS): vol.All([COMPLEX], vol.Length(min=1)),
    }
)

HERMITE_SCHEMA = vol.Schema(
    {
        vol.Required(KEY_ALPHAS): vol.All([COMPLEX], vol.Length(min=1)),
    }
)

MULTIPLIER_SCHEMA = vol.Schema(
    {
        vol.Required(KEY_SUPPORT): [int],
        vol.Required(KEY_VALUES): [COMPLEX],
    }
)

CONFIG_SCHEMA = vol.Schema(
    {
        vol.Optional(CONF_MODE, default=MODE_EXACT): vol.In(MODES),
        vol.Optional(CONF_TOL, default=DEFAULT_TOL): vol.All(
            vol.Coerce(float), vol.Range(min=0, min_included=False)
        ),
        vol.Optional(CONF_SEED, default=DEFAULT_SEED): vol.All(int, vol.Range(min=0)),
        vol.Optional(CONF_WORKERS, default=None): vol.Any(
            None, vol.All(int, vol.Range(min=1))
        ),
        vol.Optional(CONF_VERBOSE, default=False): bool,
    }
)


def validate(schema: vol.Schema, data: Any, source: str = "<input>") -> Any:
    """Run a schema and turn voluptuous errors into InvalidInput."""
    try:
        return schema(data)
    except vol.Invalid as err:
        raise InvalidInput(f"{source}: {err}") from err

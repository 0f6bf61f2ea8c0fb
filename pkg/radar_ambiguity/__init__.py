"""Radar ambiguity functions and ambiguity-partner decisions."""

from __future__ import annotations

from .ambiguity import apply_trivial, is_partner, is_trivial_partner, signature
from .exceptions import AmbiguityError
from .models import HeisenbergElement, PulseDescriptor, Signal, SupportSet

__version__ = "0.1.0"

__all__ = [
    "AmbiguityError",
    "HeisenbergElement",
    "PulseDescriptor",
    "Signal",
    "SupportSet",
    "apply_trivial",
    "is_partner",
    "is_trivial_partner",
    "signature",
]

"""Sidon-type B_k sets and the difference-set rigidity of B_3 sets."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement

import numpy as np

from .const import MAX_BSET_SIZE, ORIENTATION_DIRECT, ORIENTATION_REFLECTED
from .exceptions import HypothesisViolated, SetTooLarge
from .models import SupportSet
from .seqcore import difference_set

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class ShiftWitness:
    """Relation between two sets: other = base - m (direct) or m - base (reflected)."""

    orientation: str
    m: int

    def to_dict(self) -> dict[str, str | int]:
        return {"orientation": self.orientation, "m": self.m}


def _check_size(support_set: SupportSet) -> None:
    if len(support_set) > MAX_BSET_SIZE:
        raise SetTooLarge(
            f"set of size {len(support_set)} exceeds the cap of {MAX_BSET_SIZE}"
        )


def is_Bk(support_set: SupportSet, order: int) -> bool:
    """Return True when all order-fold sums n1 <= ... <= nk are distinct."""
    _check_size(support_set)
    sums = Counter(
        sum(t) for t in combinations_with_replacement(support_set, order)
    )
    return all(count == 1 for count in sums.values())


def is_B2(support_set: SupportSet) -> bool:
    """Return True for Sidon sets."""
    return is_Bk(support_set, 2)


def is_B3(support_set: SupportSet) -> bool:
    """Return True when all triple sums are distinct."""
    return is_Bk(support_set, 3)


def recover_shift(base: SupportSet, other: SupportSet) -> ShiftWitness | None:
    """Return how ``other`` is obtained from the B_3 set ``base``.

    Equal difference sets force other = base - m or other = m - base; the
    direct form wins when both hold.
    """
    if not is_B3(base):
        raise HypothesisViolated(f"hypothesis violated: {base} is not a B3 set")
    if not base.elems or len(base) != len(other):
        return None
    if difference_set(base) != difference_set(other):
        _LOGGER.debug("Difference sets of %s and %s differ", base, other)
        return None
    m = base.elems[0] - other.elems[0]
    if base.shifted(m) == other:
        return ShiftWitness(ORIENTATION_DIRECT, m)
    m = other.elems[0] + base.elems[-1]
    if base.reflected(m) == other:
        return ShiftWitness(ORIENTATION_REFLECTED, m)
    _LOGGER.warning(
        "Equal difference sets without a shift witness: %s, %s", base, other
    )
    return None


def random_bset(
    order: int, size: int, bound: int, rng: np.random.Generator
) -> SupportSet:
    """Greedily build a B_order subset of {0..bound} with up to ``size`` points."""
    chosen: list[int] = []
    for candidate in rng.permutation(bound + 1):
        if len(chosen) >= size:
            break
        trial = SupportSet.of([*chosen, int(candidate)])
        if is_Bk(trial, order):
            chosen.append(int(candidate))
    if len(chosen) < size:
        _LOGGER.debug("Only %d of %d points fit below %d", len(chosen), size, bound)
    return SupportSet.of(chosen)

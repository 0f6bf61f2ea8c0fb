"""Built-in self test over the worked examples of the toolkit."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from . import ambiguity, hermite, lambda_sets, matrix_kron, pulse, search
from .const import DEFAULT_SEED, FLIP_SWAP, SELFTEST_SEARCH_RESTARTS
from .models import HermiteExpansion, Multiplier, PulseDescriptor, Signal, SupportSet
from .polynomial import Poly
from .scalar import SQRT2, unit_from_tangent

_LOGGER = logging.getLogger(__name__)

WORKED_A = Signal.of(1, 2, 0, 2, 4)
WORKED_B = Signal.of(2, 4, 0, 1, 2)


def _kron_worked_example() -> bool:
    base = Signal.of(1, 2)
    return (
        matrix_kron.kron_signal(base, Signal.of(1, 2)) == WORKED_A
        and matrix_kron.kron_signal(base, Signal.of(2, 1)) == WORKED_B
    )


def _kron_matrix_identity() -> bool:
    a, b = Signal.of(1, 2), Signal.of(1, 2)
    product = matrix_kron.kron_matrix(matrix_kron.build_K(a), matrix_kron.build_K(b))
    return product.lattice == matrix_kron.build_K(matrix_kron.kron_signal(a, b)).lattice


def _multiplier_on_sidon_set() -> bool:
    support = SupportSet.of([0, 1, 3])
    c = Multiplier(support, (1, 1, unit_from_tangent(Fraction(1, 2))))
    a = Signal.of(1, 1, 0, 1)
    b = ambiguity.apply_multiplier(c, a)
    return (
        ambiguity.check_multiplier_condition(c)
        and ambiguity.is_partner(a, b)
        and ambiguity.restricted_partner_check(a, b) is not None
    )


def _interleave_strange() -> bool:
    a, b = matrix_kron.interleave(Signal.of(1, 2), 2)
    return (
        a == Signal.of(1, 2, 2, 4)
        and ambiguity.is_partner(a, b)
        and ambiguity.is_trivial_partner(a, b) is None
    )


def _iterated_product_swap() -> bool:
    flipped = matrix_kron.iterated_product(
        [(1, 2), (1, 2)], [matrix_kron.Flip(1, FLIP_SWAP)]
    )
    return flipped == WORKED_B and ambiguity.is_partner(
        matrix_kron.iterated_product([(1, 2), (1, 2)]), flipped
    )


def _padded_strange_pair() -> bool:
    a, b = matrix_kron.padded_strange_pair(2)
    return (
        a.degree == 6
        and ambiguity.is_partner(a, b)
        and ambiguity.is_trivial_partner(a, b) is None
    )


def _degree_two_search_empty() -> bool:
    candidates = search.strange_search(
        Signal.of(1, 2, 3), SELFTEST_SEARCH_RESTARTS, seed=DEFAULT_SEED
    )
    return not any(c.certified for c in candidates)


def _hermite_trivial_partners() -> bool:
    p = Poly.of(3, 1, 2, 1)
    return hermite.algebraic_partner_test(
        p, p.check()
    ) and hermite.algebraic_partner_test(p, p.scale(-1))


def _monomial_pair_trivial_only() -> bool:
    p = Poly.of(0, 2, 0, 0, 1)
    return len(hermite.partner_scan(p)) == 2


def _laguerre_matches_quadrature() -> bool:
    exact = hermite.laguerre_cross(2, 1, 0.5, -1.0)
    numeric = hermite.hermite_quadrature_cross(2, 1, 0.5, -1.0)
    return abs(exact - numeric) <= 1e-8 * max(abs(exact), 1.0)


def _pulse_partner_transport() -> bool:
    eta = Fraction(1, 3)
    u, v = PulseDescriptor(WORKED_A, eta), PulseDescriptor(WORKED_B, eta)
    points = [(0.1, 0.3), (1.2, -2.0), (-2.9, 1.5), (3.05, 0.7)]
    return all(
        math.isclose(
            abs(pulse.pulse_ambiguity(u, x, y)),
            abs(pulse.pulse_ambiguity(v, x, y)),
            rel_tol=1e-10,
            abs_tol=1e-10,
        )
        for x, y in points
    )


@dataclass(frozen=True, kw_only=True)
class SelfTestDescription:
    """Describes one self-test check."""

    key: str
    name: str
    check_fn: Callable[[], bool]


@dataclass(frozen=True)
class SelfTestResult:
    """Outcome of one self-test check."""

    key: str
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "key": self.key,
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
        }


SELFTEST_DESCRIPTIONS: tuple[SelfTestDescription, ...] = (
    SelfTestDescription(
        key="worked_pair_partners",
        name="(1,2,0,2,4) and (2,4,0,1,2) are partners",
        check_fn=lambda: ambiguity.is_partner(WORKED_A, WORKED_B),
    ),
    SelfTestDescription(
        key="worked_pair_not_trivial",
        name="(1,2,0,2,4) and (2,4,0,1,2) are not trivial partners",
        check_fn=lambda: ambiguity.is_trivial_partner(WORKED_A, WORKED_B) is None,
    ),
    SelfTestDescription(
        key="worked_pair_gram",
        name="Gram matrices of the worked pair agree",
        check_fn=lambda: matrix_kron.gram_equal(WORKED_A, WORKED_B),
    ),
    SelfTestDescription(
        key="kron_worked_example",
        name="(1,2)x(1,2) and (1,2)x(2,1) give the worked pair",
        check_fn=_kron_worked_example,
    ),
    SelfTestDescription(
        key="kron_matrix_identity",
        name="K of a Kronecker product is the Kronecker product of K",
        check_fn=_kron_matrix_identity,
    ),
    SelfTestDescription(
        key="padded_strange_pair",
        name="Zero-padded Kronecker pair is strange",
        check_fn=_padded_strange_pair,
    ),
    SelfTestDescription(
        key="interleave_strange",
        name="Interleaving (1,2) with lambda=2 gives strange partners",
        check_fn=_interleave_strange,
    ),
    SelfTestDescription(
        key="iterated_product_swap",
        name="Swapping a factor of (1+2z)(1+2z^3) gives a partner",
        check_fn=_iterated_product_swap,
    ),
    SelfTestDescription(
        key="degree_two_search_empty",
        name="Seeded search certifies no strange partner of (1,2,3)",
        check_fn=_degree_two_search_empty,
    ),
    SelfTestDescription(
        key="powers_of_two_b2",
        name="Powers of two form a B2 set",
        check_fn=lambda: lambda_sets.is_B2(SupportSet.of(2**j for j in range(11))),
    ),
    SelfTestDescription(
        key="multiplier_on_sidon_set",
        name="Unit multipliers on {0,1,3} give restricted partners",
        check_fn=_multiplier_on_sidon_set,
    ),
    SelfTestDescription(
        key="bargmann_h1",
        name="Bargmann map sends H_1 to sqrt(2) Z",
        check_fn=lambda: (
            hermite.bargmann(HermiteExpansion.of(0, 1)) == Poly.of(0, SQRT2)
        ),
    ),
    SelfTestDescription(
        key="hermite_trivial_partners",
        name="cP and P-check are algebraic partners",
        check_fn=_hermite_trivial_partners,
    ),
    SelfTestDescription(
        key="monomial_pair_trivial_only",
        name="Z^4 + 2Z has only trivial partners",
        check_fn=_monomial_pair_trivial_only,
    ),
    SelfTestDescription(
        key="laguerre_quadrature",
        name="Laguerre closed form matches Gauss-Hermite quadrature",
        check_fn=_laguerre_matches_quadrature,
    ),
    SelfTestDescription(
        key="pulse_partner_transport",
        name="Pulse trains of the worked pair have equal ambiguity moduli",
        check_fn=_pulse_partner_transport,
    ),
)


def run_selftest(
    descriptions: Iterable[SelfTestDescription] = SELFTEST_DESCRIPTIONS,
) -> list[SelfTestResult]:
    """Run every check; exceptions count as failures."""
    results: list[SelfTestResult] = []
    for description in descriptions:
        try:
            passed, detail = bool(description.check_fn()), ""
        except Exception as err:  # noqa: BLE001
            passed, detail = False, f"{type(err).__name__}: {err}"
        if not passed:
            _LOGGER.error("Self test %s failed %s", description.key, detail)
        results.append(
            SelfTestResult(description.key, description.name, passed, detail)
        )
    return results


def format_table(results: Iterable[SelfTestResult]) -> str:
    """Return a plain-text pass/fail table."""
    rows = list(results)
    width = max((len(r.key) for r in rows), default=0)
    lines = [
        f"{'PASS' if r.passed else 'FAIL'}  {r.key.ljust(width)}  {r.name}"
        + (f" ({r.detail})" if r.detail else "")
        for r in rows
    ]
    return "\n".join(lines)

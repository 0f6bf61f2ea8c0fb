"""Hermite signals and the algebraic ambiguity problem.

A Hermite signal P(t) e^(-t^2/2) is carried to the polynomial B(P) by the
Bargmann map H_k -> 2^(k/2) Z^k. Two such signals are ambiguity partners
exactly when their Bargmann polynomials satisfy
A_P(z, w) A_P(-z, -w) = A_Q(z, w) A_Q(-z, -w).
"""

from __future__ import annotations

import cmath
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import lru_cache

import numpy as np
from numpy.polynomial.hermite import hermgauss
from scipy.special import eval_hermite

from .const import (
    DEFAULT_CERT_TOL,
    DEFAULT_GENERIC_TOL,
    DEFAULT_HERMITE_NODES,
    DEFAULT_TOL,
    LAGUERRE_SPAN,
    MAX_SCAN_DEGREE,
)
from .exceptions import DegreeCapExceeded, GenericityRequired, InvalidInput
from .models import HermiteExpansion
from .polynomial import BiPoly, Poly
from .scalar import SQRT2, Scalar, SurdScalar, is_zero

_LOGGER = logging.getLogger(__name__)

# Subsets handed to one worker during the factorization scan
SCAN_CHUNK = 64


@lru_cache(maxsize=64)
def hermite_poly(k: int) -> Poly:
    """Return the physicists' Hermite polynomial H_k."""
    if k < 0:
        raise InvalidInput(f"Hermite index must be nonnegative: {k}")
    if k == 0:
        return Poly.of(1)
    previous, current = Poly.of(1), Poly.of(0, 2)
    for n in range(1, k):
        following = Poly.monomial(1, 2) * current - previous.scale(2 * n)
        previous, current = current, following
    return current


def hermite_to_poly(e: HermiteExpansion) -> Poly:
    """Return sum alpha_j H_j in the monomial basis."""
    total = Poly(())
    for j, alpha in enumerate(e.alphas):
        total = total + hermite_poly(j).scale(alpha)
    return total


def _sqrt2_power(alpha: Scalar, j: int) -> Scalar:
    """Return alpha * 2^(j/2), exact when alpha is."""
    half, odd = divmod(j, 2)
    scaled = alpha * 2**half
    if isinstance(scaled, complex):
        return scaled * math.sqrt(2.0) if odd else scaled
    return scaled * SQRT2 if odd else SurdScalar.coerce(scaled)


def bargmann(e: HermiteExpansion) -> Poly:
    """Return sum alpha_j 2^(j/2) Z^j.

    Odd powers carry an exact sqrt(2) in exact mode.
    """
    return Poly(tuple(_sqrt2_power(alpha, j) for j, alpha in enumerate(e.alphas)))


def ambiguity_polynomial(p: Poly) -> BiPoly:
    """Return A_P(z, w) = sum_m P^(m)(z) P*^(m)(w) / m!."""
    if p.degree < 0:
        raise InvalidInput("the zero polynomial has no ambiguity polynomial")
    total = BiPoly({})
    left, right = p, p.star()
    for m in range(p.degree + 1):
        total = total + BiPoly.outer(left, right).scale(Fraction(1, math.factorial(m)))
        left, right = left.derivative(), right.derivative()
    return total


def leading_w_coefficient(b: BiPoly) -> Poly:
    """Return the coefficient of the top power of w as a polynomial in z."""
    return b.coefficient_in_w(b.degree_w)


def recover_from_ambiguity_polynomial(a: BiPoly) -> Poly:
    """Return the monic P with A_P = a up to a positive factor.

    The top row of A_P in w is conj(p_n) * P.
    """
    return leading_w_coefficient(a).monic()


def algebraic_partner_test(p: Poly, q: Poly, tol: float = DEFAULT_TOL) -> bool:
    """Return True when A_P(z,w)A_P(-z,-w) = A_Q(z,w)A_Q(-z,-w)."""
    if p.degree != q.degree:
        _LOGGER.debug("Degrees differ (%d vs %d)", p.degree, q.degree)
        return False
    ap, aq = ambiguity_polynomial(p), ambiguity_polynomial(q)
    return (ap * ap.reflect()).approx_equal(aq * aq.reflect(), tol)


def check_p(p: Poly) -> Poly:
    """Return (-1)^n P(-z)."""
    return p.check()


def star(p: Poly) -> Poly:
    """Return conj(P(conj z))."""
    return p.star()


def bracket_minus(pi: Poly, psi: Poly) -> Poly:
    """Return {Pi, Psi}_- = Pi Psi^v - Pi^v Psi."""
    return pi * psi.check() - pi.check() * psi


def bracket_plus(pi: Poly, psi: Poly) -> Poly:
    """Return {Pi, Psi}_+ = Pi Psi^v + Pi^v Psi."""
    return pi * psi.check() + pi.check() * psi


def is_generic(p: Poly, tol: float = DEFAULT_GENERIC_TOL) -> bool:
    """Return True when the roots are simple and no root is the negative of a root."""
    if p.degree < 1:
        raise InvalidInput("genericity needs a nonconstant polynomial")
    roots = p.roots()
    gaps = np.abs(roots[:, None] - roots[None, :])
    np.fill_diagonal(gaps, np.inf)
    sums = np.abs(roots[:, None] + roots[None, :])
    generic = bool(gaps.min() > tol) and bool(sums.min() > tol)
    if not generic:
        _LOGGER.debug(
            "Not generic: min root gap %.3g, min root sum %.3g", gaps.min(), sums.min()
        )
    return generic


def p1_zero_partners(p: Poly, tol: float = DEFAULT_TOL) -> list[Poly]:
    """Return [P, P^v] for monic P with vanishing subleading coefficient.

    No genericity is needed here: such P has only trivial partners.
    """
    p = p.monic()
    if p.degree < 1 or not is_zero(p.coefficient(p.degree - 1), tol):
        raise InvalidInput("the p1 = 0 path needs a vanishing subleading coefficient")
    partners = [p] if p.check().approx_equal(p, tol) else [p, p.check()]
    for q in partners:
        if not algebraic_partner_test(p, q, tol):
            raise InvalidInput(f"trivial partner {q} failed certification")
    return partners


def _scan_masks(
    p: Poly, roots: np.ndarray, masks: range, cert_tol: float
) -> list[Poly]:
    """Certify the candidates A * B^v for the root subsets encoded by ``masks``."""
    survivors: list[Poly] = []
    for mask in masks:
        chosen = [r for i, r in enumerate(roots) if mask >> i & 1]
        rest = [r for i, r in enumerate(roots) if not mask >> i & 1]
        q = Poly.from_roots(chosen) * Poly.from_roots(rest).check()
        if algebraic_partner_test(p, q, cert_tol):
            survivors.append(q)
    return survivors


def _deduplicate_partners(
    p: Poly, survivors: list[Poly], cert_tol: float
) -> tuple[list[Poly], list[Poly]]:
    """Split survivors into the matched trivial partners and the rest."""
    trivial: list[Poly] = []
    for known in (p, p.check()):
        if any(known.approx_equal(q, cert_tol) for q in survivors) and not any(
            kept.approx_equal(known, cert_tol) for kept in trivial
        ):
            trivial.append(known)
    others: list[Poly] = []
    for q in survivors:
        if any(k.approx_equal(q, cert_tol) for k in trivial + others):
            continue
        others.append(q)
    return trivial, others


def partner_scan(
    p: Poly,
    tol: float = DEFAULT_GENERIC_TOL,
    cert_tol: float = DEFAULT_CERT_TOL,
    workers: int | None = None,
) -> list[Poly]:
    """Return every monic partner of P found through P = AB, Q = AB^v.

    P must be generic unless its subleading coefficient vanishes; that case
    goes straight to the trivial pair.
    """
    if p.degree > MAX_SCAN_DEGREE:
        raise DegreeCapExceeded(
            f"degree {p.degree} exceeds the factorization cap of {MAX_SCAN_DEGREE}"
        )
    if p.degree < 1:
        raise InvalidInput("partner scan needs a nonconstant polynomial")
    p = p.monic()
    if is_zero(p.coefficient(p.degree - 1), cert_tol):
        _LOGGER.debug("Subleading coefficient vanishes, using the p1 = 0 path")
        return p1_zero_partners(p, cert_tol)
    if not is_generic(p, tol):
        raise GenericityRequired("genericity required")

    roots = p.roots()
    total = 2 ** len(roots)
    chunks = [
        range(lo, min(lo + SCAN_CHUNK, total)) for lo in range(0, total, SCAN_CHUNK)
    ]
    _LOGGER.debug("Scanning %d factorizations of %s", total, p)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        found = pool.map(lambda masks: _scan_masks(p, roots, masks, cert_tol), chunks)
        survivors = [q for chunk in found for q in chunk]

    trivial, strange = _deduplicate_partners(p, survivors, cert_tol)
    partners = trivial + strange
    if strange:
        _LOGGER.warning("Scan of %s found non-trivial partners: %s", p, strange)
    _LOGGER.info("Scan of degree %d: %d partners", p.degree, len(partners))
    return partners


def laguerre_cross(j: int, k: int, x: float, y: float) -> complex:
    """Return A(H_j e^(-t^2/2), H_k e^(-t^2/2))(x, y) in closed form."""
    if j < 0 or k < 0:
        raise InvalidInput("Hermite indices must be nonnegative")
    big_x, big_y = x / math.sqrt(2.0), y / math.sqrt(2.0)
    plus, minus = complex(big_x, big_y), complex(-big_x, big_y)
    total = 0j
    for m in range(min(j, k) + 1):
        total += (
            plus ** (j - m)
            * minus ** (k - m)
            / (math.factorial(j - m) * math.factorial(k - m) * math.factorial(m))
        )
    norm = math.sqrt(math.pi * 2 ** (j + k)) * math.factorial(j) * math.factorial(k)
    laguerre = norm * total
    return laguerre * math.exp(-(x * x + y * y) / 4) * cmath.exp(0.5j * x * y)


def hermite_quadrature_cross(
    j: int, k: int, x: float, y: float, nodes: int = DEFAULT_HERMITE_NODES
) -> complex:
    """Return the cross ambiguity of H_j and H_k by Gauss-Hermite quadrature.

    The integrand H_j(t) H_k(t - x) e^(iyt) e^(-t^2/2 - (t-x)^2/2) is
    rewritten around t = s + x/2 so the weight is e^(-s^2).
    """
    s, weights = hermgauss(nodes)
    t = s + x / 2
    integrand = eval_hermite(j, t) * eval_hermite(k, t - x) * np.exp(1j * y * t)
    return complex(np.dot(weights, integrand) * math.exp(-x * x / 4))


def hermite_signal_partner_test(
    p: HermiteExpansion, q: HermiteExpansion, tol: float = DEFAULT_TOL
) -> bool:
    """Return True when P e^(-t^2/2) and Q e^(-t^2/2) are ambiguity partners."""
    return algebraic_partner_test(bargmann(p), bargmann(q), tol)


def laguerre_verify(
    jmax: int,
    shape: tuple[int, int],
    span: float = LAGUERRE_SPAN,
    nodes: int = DEFAULT_HERMITE_NODES,
) -> float:
    """Return the worst relative gap between laguerre_cross and quadrature.

    Every pair j, k <= jmax is checked on a rows x cols grid covering
    [-span, span]^2; the gap is measured against max(|closed form|, 1).
    """
    if jmax < 0:
        raise InvalidInput(f"jmax must be nonnegative: {jmax}")
    rows, cols = shape
    xs, ys = np.linspace(-span, span, rows), np.linspace(-span, span, cols)
    worst = 0.0
    for j in range(jmax + 1):
        for k in range(jmax + 1):
            for x in xs:
                for y in ys:
                    exact = laguerre_cross(j, k, float(x), float(y))
                    numeric = hermite_quadrature_cross(j, k, float(x), float(y), nodes)
                    worst = max(worst, abs(exact - numeric) / max(abs(exact), 1.0))
    _LOGGER.debug("Laguerre check up to j, k = %d: worst gap %.3g", jmax, worst)
    return worst

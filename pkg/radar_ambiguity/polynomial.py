"""Univariate and bivariate polynomials over the toolkit's scalar fields.

Exact polynomials are :class:`sympy.Poly` objects over ``QQ_I``, or over
:data:`~radar_ambiguity.scalar.SURD_FIELD` once a coefficient carries sqrt(2).
Float polynomials are complex numpy arrays; bivariate products go through
:func:`scipy.signal.convolve2d`.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np
import sympy
from numpy.polynomial import polynomial as npp
from scipy import signal
from sympy import QQ_I
from sympy.polys.domains.domain import Domain

from .const import DEFAULT_TOL, KEY_COEFFS
from .scalar import (
    ONE,
    SURD_FIELD,
    ZERO,
    GaussianRational,
    Scalar,
    SurdScalar,
    all_exact,
    as_scalar,
    is_exact,
    parse_scalar,
    scalar_to_json,
    to_complex,
)

Z, W = sympy.symbols("z w")


def _exact_domain(values: Iterable[Scalar]) -> Domain:
    """Return the smallest exact domain holding every value."""
    if any(isinstance(v, SurdScalar) for v in values):
        return SURD_FIELD
    return QQ_I


def _to_element(value: Any, domain: Domain) -> Any:
    if domain == QQ_I or isinstance(value, SurdScalar):
        return value.element
    return SurdScalar(value).element


def _from_element(element: Any, domain: Domain) -> Scalar:
    if domain == QQ_I:
        return GaussianRational.from_element(element)
    return SurdScalar.from_element(element)


def _pad_add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Add arrays of possibly different shapes, aligned at index zero."""
    shape = tuple(max(x, y) for x, y in zip(a.shape, b.shape, strict=True))
    out = np.zeros(shape, dtype=complex)
    out[tuple(slice(0, n) for n in a.shape)] += a
    out[tuple(slice(0, n) for n in b.shape)] += b
    return out


@dataclass(frozen=True)
class Poly:
    """Polynomial sum p_k Z^k with ascending coefficients and nonzero leading term."""

    coeffs: tuple[Scalar, ...]
    _rep: Any = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        """Coerce coefficients, strip zero top terms and build the backing rep."""
        values = [as_scalar(c) for c in self.coeffs]
        if all_exact(values):
            domain = _exact_domain(values)
            high_first = [_to_element(v, domain) for v in reversed(values)]
            rep = sympy.Poly.from_list(high_first, Z, domain=domain)
            object.__setattr__(self, "coeffs", self._coeffs_of(rep))
        else:
            rep = np.array([to_complex(v) for v in values], dtype=complex)
            rep = np.trim_zeros(rep, "b")
            object.__setattr__(self, "coeffs", tuple(complex(c) for c in rep))
        object.__setattr__(self, "_rep", rep)

    @staticmethod
    def _coeffs_of(rep: sympy.Poly) -> tuple[Scalar, ...]:
        domain = rep.get_domain()
        return tuple(_from_element(e, domain) for e in reversed(rep.rep.to_list()))

    @classmethod
    def _wrap(cls, rep: Any) -> Poly:
        """Wrap a sympy Poly or an ascending complex array."""
        if isinstance(rep, sympy.Poly):
            coeffs = cls._coeffs_of(rep)
        else:
            rep = np.trim_zeros(rep, "b")
            coeffs = tuple(complex(c) for c in rep)
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "_rep", rep)
        return obj

    @classmethod
    def of(cls, *values: Any) -> Poly:
        return cls(tuple(values))

    @classmethod
    def monomial(cls, k: int, coefficient: Scalar = ONE) -> Poly:
        """Return coefficient * Z^k."""
        return cls((ZERO,) * k + (coefficient,))

    @classmethod
    def from_roots(cls, roots: Iterable[complex]) -> Poly:
        """Return the monic float polynomial with the given roots."""
        roots = list(roots)
        if not roots:
            return cls((1 + 0j,))
        return cls(tuple(complex(c) for c in npp.polyfromroots(roots)))

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Poly:
        """Create a Poly from its JSON document."""
        return cls(tuple(parse_scalar(c) for c in data.get(KEY_COEFFS, [])))

    def to_dict(self) -> dict[str, Any]:
        return {KEY_COEFFS: [scalar_to_json(c) for c in self.coeffs]}

    def as_sympy(self, domain: Domain | None = None) -> sympy.Poly:
        """Return the exact polynomial as a sympy Poly over domain."""
        if not self.is_exact:
            raise TypeError("float polynomials have no sympy form")
        if domain is None or self._rep.get_domain() == domain:
            return self._rep
        high_first = [_to_element(c, domain) for c in reversed(self.coeffs)]
        return sympy.Poly.from_list(high_first, Z, domain=domain)

    def _pair(self, other: Poly) -> tuple[Any, Any]:
        """Return both operands in one backing: sympy when exact, numpy otherwise."""
        if self.is_exact and other.is_exact:
            domain = _exact_domain(self.coeffs + other.coeffs)
            return self.as_sympy(domain), other.as_sympy(domain)
        return self.to_numpy(), other.to_numpy()

    @property
    def degree(self) -> int:
        """Return the degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Scalar:
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.leading == 1

    @property
    def is_exact(self) -> bool:
        return isinstance(self._rep, sympy.Poly)

    def coefficient(self, k: int) -> Scalar:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def __add__(self, other: Poly) -> Poly:
        a, b = self._pair(other)
        if isinstance(a, sympy.Poly):
            return Poly._wrap(a + b)
        return Poly._wrap(_pad_add(a, b))

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __neg__(self) -> Poly:
        return Poly._wrap(-self._rep)

    def __mul__(self, other: Poly | Any) -> Poly:
        if not isinstance(other, Poly):
            return self.scale(other)
        if not self.coeffs or not other.coeffs:
            return Poly(())
        a, b = self._pair(other)
        if isinstance(a, sympy.Poly):
            return Poly._wrap(a * b)
        return Poly._wrap(np.convolve(a, b))

    def __rmul__(self, other: Any) -> Poly:
        return self.scale(other)

    def scale(self, factor: Any) -> Poly:
        """Multiply every coefficient by a scalar."""
        return self * Poly((factor,))

    def __call__(self, z: Any) -> Any:
        total: Any = ZERO
        for c in reversed(self.coeffs):
            total = total * z + c
        return total

    def derivative(self) -> Poly:
        if self.is_exact:
            return Poly._wrap(self._rep.diff(Z))
        if self.degree < 1:
            return Poly(())
        return Poly._wrap(npp.polyder(self._rep))

    def star(self) -> Poly:
        """Return P*(z) = conj(P(conj z))."""
        return Poly(tuple(c.conjugate() for c in self.coeffs))

    def check(self) -> Poly:
        """Return (-1)^n P(-z); monic stays monic."""
        n = self.degree
        return Poly(
            tuple(c if (n + k) % 2 == 0 else -c for k, c in enumerate(self.coeffs))
        )

    def negate_argument(self) -> Poly:
        """Return P(-z)."""
        return Poly(
            tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))
        )

    def monic(self) -> Poly:
        if self.is_exact:
            return Poly._wrap(self._rep.monic())
        return Poly._wrap(self._rep / self._rep[-1])

    def to_numpy(self) -> np.ndarray:
        return np.array([to_complex(c) for c in self.coeffs], dtype=complex)

    def roots(self) -> np.ndarray:
        """Return roots as eigenvalues of the companion matrix."""
        if self.degree < 1:
            return np.zeros(0, dtype=complex)
        return np.linalg.eigvals(npp.polycompanion(self.to_numpy()))

    def to_float(self) -> Poly:
        return Poly(tuple(to_complex(c) for c in self.coeffs))

    def approx_equal(self, other: Poly, tol: float = DEFAULT_TOL) -> bool:
        """Compare coefficients, relative to the largest coefficient in float mode."""
        n = max(len(self.coeffs), len(other.coeffs))
        pairs = [(self.coefficient(k), other.coefficient(k)) for k in range(n)]
        if all(is_exact(x) and is_exact(y) for x, y in pairs):
            return all(x == y for x, y in pairs)
        scale = max([1.0] + [abs(complex(v)) for pair in pairs for v in pair])
        return all(abs(complex(x) - complex(y)) <= tol * scale for x, y in pairs)

    def __str__(self) -> str:
        terms = [f"({c})Z^{k}" for k, c in enumerate(self.coeffs) if c != 0]
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class BiPoly:
    """Bivariate polynomial sum c[dz, dw] z^dz w^dw stored sparsely.

    Exact grids are sympy Polys in (z, w); float grids are 2-D complex arrays.
    """

    terms: Mapping[tuple[int, int], Scalar] = field(default_factory=dict)
    _rep: Any = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        """Drop exact zeros and build the backing rep."""
        terms = {key: as_scalar(v) for key, v in self.terms.items() if v != 0}
        if all_exact(terms.values()):
            domain = _exact_domain(terms.values())
            rep = sympy.Poly.from_dict(
                {key: _to_element(v, domain) for key, v in terms.items()},
                Z,
                W,
                domain=domain,
            )
        else:
            rows = max((i for i, _ in terms), default=-1) + 1
            cols = max((j for _, j in terms), default=-1) + 1
            rep = np.zeros((rows, cols), dtype=complex)
            for (i, j), v in terms.items():
                rep[i, j] = to_complex(v)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_rep", rep)

    @classmethod
    def _wrap(cls, rep: Any) -> BiPoly:
        if isinstance(rep, sympy.Poly):
            domain = rep.get_domain()
            return cls(
                {
                    (int(i), int(j)): _from_element(v, domain)
                    for (i, j), v in rep.rep.to_dict().items()
                }
            )
        rows, cols = np.nonzero(rep)
        return cls(
            {
                (int(i), int(j)): complex(rep[i, j])
                for i, j in zip(rows, cols, strict=True)
            }
        )

    @classmethod
    def outer(cls, p: Poly, q: Poly) -> BiPoly:
        """Return p(z) * q(w)."""
        return cls(
            {
                (i, j): a * b
                for i, a in enumerate(p.coeffs)
                for j, b in enumerate(q.coeffs)
            }
        )

    @property
    def is_exact(self) -> bool:
        return isinstance(self._rep, sympy.Poly)

    def as_sympy(self, domain: Domain | None = None) -> sympy.Poly:
        """Return the exact grid as a sympy Poly in (z, w) over domain."""
        if not self.is_exact:
            raise TypeError("float polynomials have no sympy form")
        if domain is None or self._rep.get_domain() == domain:
            return self._rep
        return sympy.Poly.from_dict(
            {key: _to_element(v, domain) for key, v in self.terms.items()},
            Z,
            W,
            domain=domain,
        )

    def to_numpy(self) -> np.ndarray:
        if self.is_exact:
            out = np.zeros((self.degree_z + 1, self.degree_w + 1), dtype=complex)
            for (i, j), v in self.terms.items():
                out[i, j] = to_complex(v)
            return out
        return self._rep

    def _pair(self, other: BiPoly) -> tuple[Any, Any]:
        if self.is_exact and other.is_exact:
            values: Sequence[Scalar] = [*self.terms.values(), *other.terms.values()]
            domain = _exact_domain(values)
            return self.as_sympy(domain), other.as_sympy(domain)
        return self.to_numpy(), other.to_numpy()

    @property
    def degree_z(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    @property
    def degree_w(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    @property
    def grid(self) -> list[list[Scalar]]:
        """Return the dense grid c[dz][dw]."""
        rows, cols = self.degree_z + 1, self.degree_w + 1
        return [
            [self.terms.get((i, j), ZERO) for j in range(cols)] for i in range(rows)
        ]

    def __add__(self, other: BiPoly) -> BiPoly:
        a, b = self._pair(other)
        if isinstance(a, sympy.Poly):
            return BiPoly._wrap(a + b)
        return BiPoly._wrap(_pad_add(a, b))

    def __mul__(self, other: BiPoly) -> BiPoly:
        if not self.terms or not other.terms:
            return BiPoly({})
        a, b = self._pair(other)
        if isinstance(a, sympy.Poly):
            return BiPoly._wrap(a * b)
        return BiPoly._wrap(signal.convolve2d(a, b))

    def scale(self, factor: Any) -> BiPoly:
        return self * BiPoly({(0, 0): factor})

    def reflect(self) -> BiPoly:
        """Return B(-z, -w)."""
        return BiPoly(
            {
                (i, j): v if (i + j) % 2 == 0 else -v
                for (i, j), v in self.terms.items()
            }
        )

    def coefficient_in_w(self, dw: int) -> Poly:
        """Return the coefficient of w^dw as a polynomial in z."""
        width = self.degree_z + 1
        return Poly(tuple(self.terms.get((i, dw), ZERO) for i in range(width)))

    def __call__(self, z: Any, w: Any) -> Any:
        total: Any = ZERO
        for (i, j), v in self.terms.items():
            total = total + v * z**i * w**j
        return total

    def approx_equal(self, other: BiPoly, tol: float = DEFAULT_TOL) -> bool:
        """Compare grids, relative to the largest coefficient in float mode."""
        keys = set(self.terms) | set(other.terms)
        pairs = [(self.terms.get(k, ZERO), other.terms.get(k, ZERO)) for k in keys]
        if all(is_exact(x) and is_exact(y) for x, y in pairs):
            return all(x == y for x, y in pairs)
        scale = max([1.0] + [abs(complex(v)) for pair in pairs for v in pair])
        return all(abs(complex(x) - complex(y)) <= tol * scale for x, y in pairs)

    def to_dict(self) -> dict[str, Any]:
        return {
            "grid": [[scalar_to_json(v) for v in row] for row in self.grid],
        }

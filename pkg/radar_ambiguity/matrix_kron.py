"""Ambiguity matrices, the Gram criterion and Kronecker-product partner constructions.

The matrix K_a lives on the lattice of pairs (m, l), 0 <= m, l <= N, with
entry a_m * a_l. Its (i, j) view uses i = l - m (difference) and
j = l + m (sum). As a dense matrix its rows are indexed by the sum and its
columns by the difference, so that K*K contracts over the sum and
K_a*K_a = K_b*K_b exactly when a and b are ambiguity partners.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from functools import reduce

import numpy as np
import scipy.sparse

from .const import DEFAULT_TOL, FLIP_MODULATE, FLIP_SWAP, MAX_DENSE_N
from .exceptions import InvalidInput, NonUnimodular
from .models import Signal
from .polynomial import Poly
from .scalar import (
    ONE,
    ZERO,
    Scalar,
    approx_equal,
    as_scalar,
    is_unimodular,
    scalar_to_json,
    to_complex,
)
from .seqcore import normalized, polynomial_coeffs

_LOGGER = logging.getLogger(__name__)

Index = tuple[int, int]


@dataclass(frozen=True)
class SparseMatrix:
    """Sparse matrix of scalars keyed by (row, column)."""

    shape: tuple[int, int]
    entries: Mapping[Index, Scalar] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Drop exact zeros."""
        object.__setattr__(
            self, "entries", {key: v for key, v in self.entries.items() if v != 0}
        )

    def adjoint(self) -> SparseMatrix:
        """Return the conjugate transpose."""
        rows, cols = self.shape
        return SparseMatrix(
            (cols, rows), {(c, r): v.conjugate() for (r, c), v in self.entries.items()}
        )

    def __matmul__(self, other: SparseMatrix) -> SparseMatrix:
        if self.shape[1] != other.shape[0]:
            raise InvalidInput(f"shape mismatch {self.shape} @ {other.shape}")
        by_row: dict[int, list[tuple[int, Scalar]]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out: dict[Index, Scalar] = {}
        for (r, k), a in self.entries.items():
            for c, b in by_row.get(k, ()):
                out[(r, c)] = out.get((r, c), ZERO) + a * b
        return SparseMatrix((self.shape[0], other.shape[1]), out)

    def kron(self, other: SparseMatrix) -> SparseMatrix:
        """Return the block matrix whose (p, q) block is self * other[p, q]."""
        h, w = self.shape
        hb, wb = other.shape
        return SparseMatrix(
            (h * hb, w * wb),
            {
                (rb * h + ra, cb * w + ca): va * vb
                for (ra, ca), va in self.entries.items()
                for (rb, cb), vb in other.entries.items()
            },
        )

    def to_scipy(self) -> scipy.sparse.csr_matrix:
        """Return a complex CSR matrix for float cross-checks."""
        keys = list(self.entries)
        data = np.array([to_complex(self.entries[k]) for k in keys], dtype=complex)
        rows = np.array([k[0] for k in keys], dtype=int)
        cols = np.array([k[1] for k in keys], dtype=int)
        return scipy.sparse.coo_matrix((data, (rows, cols)), shape=self.shape).tocsr()

    def approx_equal(self, other: SparseMatrix, tol: float = DEFAULT_TOL) -> bool:
        if self.shape != other.shape:
            return False
        keys = set(self.entries) | set(other.entries)
        return all(
            approx_equal(self.entries.get(k, ZERO), other.entries.get(k, ZERO), tol)
            for k in keys
        )


@dataclass(frozen=True)
class AmbiguityMatrix:
    """K_a stored on lattice pairs (m, l) -> a_m * a_l."""

    degree: int
    lattice: Mapping[Index, Scalar] = field(default_factory=dict)

    @property
    def entries(self) -> dict[Index, Scalar]:
        """Return the (i, j) = (l - m, l + m) view."""
        return {(l - m, l + m): v for (m, l), v in self.lattice.items()}

    def to_sparse(self) -> SparseMatrix:
        """Return the dense-indexed matrix: row l + m, column l - m + N."""
        n = self.degree
        size = 2 * n + 1
        return SparseMatrix(
            (size, size), {(l + m, l - m + n): v for (m, l), v in self.lattice.items()}
        )

    def gram(self) -> SparseMatrix:
        """Return K*K."""
        k = self.to_sparse()
        return k.adjoint() @ k

    def to_dict(self) -> dict[str, object]:
        return {
            "degree": self.degree,
            "entries": [
                {"i": i, "j": j, "value": scalar_to_json(v)}
                for (i, j), v in sorted(
                    self.entries.items(), key=lambda kv: (kv[0][1], kv[0][0])
                )
            ],
        }


def build_K(a: Signal) -> AmbiguityMatrix:
    """Return the ambiguity matrix of a normalized signal."""
    a = normalized(a)
    points = [(j, c) for j, c in enumerate(a.coeffs) if c != 0]
    return AmbiguityMatrix(
        degree=a.degree,
        lattice={(m, l): am * al for m, am in points for l, al in points},
    )


def gram_equal(a: Signal, b: Signal, tol: float = DEFAULT_TOL) -> bool:
    """Return True when K_a*K_a = K_b*K_b."""
    a, b = normalized(a), normalized(b)
    if a.degree != b.degree:
        return False
    if a.degree > MAX_DENSE_N:
        _LOGGER.debug("Gram product above N=%d stays sparse", MAX_DENSE_N)
    return build_K(a).gram().approx_equal(build_K(b).gram(), tol)


def kron_matrix(
    ka: AmbiguityMatrix, kb: AmbiguityMatrix, stride: int | None = None
) -> AmbiguityMatrix:
    """Return K_a (x) K_b on the lattice.

    Blocks b_m b_l K_a sit at stride-spaced translates.

    The default stride 2N+1 matches kron_signal; N+1 gives the tight variant.
    """
    s = 2 * ka.degree + 1 if stride is None else stride
    return AmbiguityMatrix(
        degree=ka.degree + s * kb.degree,
        lattice={
            (ma + s * mb, la + s * lb): va * vb
            for (ma, la), va in ka.lattice.items()
            for (mb, lb), vb in kb.lattice.items()
        },
    )


def _kron_coeffs(a: Signal, b: Signal, stride: int, degree: int) -> Signal:
    pa = polynomial_coeffs(normalized(a), degree)
    pb = normalized(b).coeffs
    out: dict[int, Scalar] = {}
    for r, br in enumerate(pb):
        for p, ap in enumerate(pa):
            out[p + stride * r] = ap * br
    length = max(out) + 1
    return Signal(tuple(out.get(j, ZERO) for j in range(length)), 0)


def kron_signal(a: Signal, b: Signal, degree: int | None = None) -> Signal:
    """Return a (x) b, the coefficients of P(z) Q(z^(2N+1)).

    ``degree`` regards a as a zero-padded sequence of that nominal length.
    """
    n = normalized(a).degree if degree is None else degree
    return _kron_coeffs(a, b, 2 * n + 1, n)


def kron_signal_tight(a: Signal, b: Signal) -> Signal:
    """Return the coefficients of P(z) Q(z^(N+1))."""
    n = normalized(a).degree
    return _kron_coeffs(a, b, n + 1, n)


def interleave(alpha: Signal, lam: Scalar) -> tuple[Signal, Signal]:
    """Return the interleaved partners of alpha.

    a = (alpha_p, lam*alpha_p) and b = (conj(lam)*alpha_p, alpha_p).
    """
    lam = as_scalar(lam)
    a_vals: list[Scalar] = []
    b_vals: list[Scalar] = []
    for value in normalized(alpha).coeffs:
        a_vals += [value, lam * value]
        b_vals += [lam.conjugate() * value, value]
    a, b = Signal(tuple(a_vals)), Signal(tuple(b_vals))
    if lam == 0:
        _LOGGER.warning("lambda = 0 leaves zero tails; returning renormalized signals")
    return normalized(a), normalized(b)


@dataclass(frozen=True)
class Flip:
    """Replace factor j of an iterated product.

    Modulate gives alpha + c*beta z^(3^j); swap gives beta + c*alpha z^(3^j).
    """

    index: int
    mode: str
    unit: Scalar = ONE

    def __post_init__(self) -> None:
        """Validate the mode and the unit."""
        if self.mode not in (FLIP_MODULATE, FLIP_SWAP):
            raise InvalidInput(f"unknown flip mode: {self.mode}")
        if not is_unimodular(self.unit):
            raise NonUnimodular(f"flip factor {self.unit} is not a unit")


def iterated_product(
    factors: Sequence[tuple[Scalar, Scalar]], flips: Sequence[Flip] = ()
) -> Signal:
    """Return the coefficients of prod_j (alpha_j + beta_j z^(3^j)) after flips."""
    chosen = list(factors)
    for flip in flips:
        if not 0 <= flip.index < len(chosen):
            raise InvalidInput(f"flip index {flip.index} out of range")
        alpha, beta = chosen[flip.index]
        if flip.mode == FLIP_MODULATE:
            chosen[flip.index] = (alpha, flip.unit * beta)
        else:
            chosen[flip.index] = (beta, flip.unit * alpha)
    polys = [
        Poly.of(alpha) + Poly.monomial(3**j, beta)
        for j, (alpha, beta) in enumerate(chosen)
    ]
    product = reduce(lambda p, q: p * q, polys, Poly.of(ONE))
    return normalized(Signal(product.coeffs))


def padded_strange_pair(n: int) -> tuple[Signal, Signal]:
    """Return strange partners in S(2N+2) from (1, 2, 0, ..., 0) in C^(N+1)."""
    if n < 1:
        raise InvalidInput("the padded construction needs N >= 1")
    base = Signal.of(1, 2)
    return (
        kron_signal(base, Signal.of(1, 2), degree=n),
        kron_signal(base, Signal.of(2, 1), degree=n),
    )


def epsilon_kron_example(eps: Scalar) -> tuple[Signal, Signal]:
    """Return (1, eps) (x) (1, eps) and (1, eps) (x) (eps, 1)."""
    a = Signal.of(1, eps)
    return kron_signal(a, Signal.of(1, eps)), kron_signal(a, Signal.of(eps, 1))


def dense_kron_check(
    ka: AmbiguityMatrix, kb: AmbiguityMatrix, tol: float = DEFAULT_TOL
) -> bool:
    """Compare the lattice Kronecker product against scipy.sparse.kron in floats."""
    expected = scipy.sparse.kron(
        kb.to_sparse().to_scipy(), ka.to_sparse().to_scipy(), format="coo"
    ).tocsr()
    actual = kron_matrix(ka, kb).to_sparse().to_scipy()
    if expected.shape != actual.shape:
        return False
    diff = abs(expected - actual)
    return bool(diff.max() <= tol) if diff.nnz else True

"""Data models for the radar ambiguity toolkit."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

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
    MAX_PULSE_WIDTH,
    MODE_EXACT,
)
from .exceptions import InvalidInput, InvalidPulseWidth, NonUnimodular
from .scalar import (
    ONE,
    Scalar,
    all_exact,
    angle_of,
    approx_equal,
    as_scalar,
    is_unimodular,
    parse_real,
    parse_scalar,
    scalar_to_json,
    to_complex,
    unit_from_angle,
    zero_like,
)


@dataclass(frozen=True)
class Signal:
    """Finite complex sequence a_offset, ..., a_(offset+N).

    Exact zeros at both ends are stripped on construction, moving the
    offset, so the zero signal is the empty coefficient tuple.
    """

    coeffs: tuple[Scalar, ...]
    offset: int = 0

    def __post_init__(self) -> None:
        """Coerce coefficients and trim zero tails."""
        values = [as_scalar(c) for c in self.coeffs]
        start = 0
        while start < len(values) and values[start] == 0:
            start += 1
        stop = len(values)
        while stop > start and values[stop - 1] == 0:
            stop -= 1
        object.__setattr__(self, "coeffs", tuple(values[start:stop]))
        object.__setattr__(self, "offset", self.offset + start if stop > start else 0)

    @classmethod
    def of(cls, *values: Any, offset: int = 0) -> Signal:
        """Build a signal from positional coefficients."""
        return cls(tuple(values), offset)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Signal:
        """Create a Signal from its JSON document."""
        return cls(
            coeffs=tuple(parse_scalar(c) for c in data.get(KEY_COEFFS, [])),
            offset=data.get(KEY_OFFSET, 0),
        )

    def to_dict(self) -> dict[str, Any]:
        """Return the JSON document of the signal."""
        return {
            KEY_OFFSET: self.offset,
            KEY_COEFFS: [scalar_to_json(c) for c in self.coeffs],
        }

    @property
    def degree(self) -> int:
        """Return N for a in S(N); -1 for the zero signal."""
        return len(self.coeffs) - 1

    @property
    def is_empty(self) -> bool:
        return not self.coeffs

    @property
    def is_normalized(self) -> bool:
        return bool(self.coeffs) and self.offset == 0

    @property
    def is_exact(self) -> bool:
        return all_exact(self.coeffs)

    @property
    def indices(self) -> range:
        """Return the absolute indices covered by the coefficients."""
        return range(self.offset, self.offset + len(self.coeffs))

    def coefficient(self, j: int) -> Scalar:
        """Return a_j for an absolute index j (zero outside)."""
        pos = j - self.offset
        if 0 <= pos < len(self.coeffs):
            return self.coeffs[pos]
        return zero_like(self.is_exact)

    def to_float(self) -> Signal:
        """Embed the signal into double precision."""
        return Signal(tuple(to_complex(c) for c in self.coeffs), self.offset)

    def approx_equal(self, other: Signal, tol: float = DEFAULT_TOL) -> bool:
        """Compare coefficient by coefficient on the union of both index ranges."""
        lo = min(self.offset, other.offset)
        hi = max(self.offset + len(self.coeffs), other.offset + len(other.coeffs))
        return all(
            approx_equal(self.coefficient(j), other.coefficient(j), tol)
            for j in range(lo, hi)
        )

    def __len__(self) -> int:
        return len(self.coeffs)

    def __str__(self) -> str:
        body = ", ".join(str(c) for c in self.coeffs)
        if self.offset:
            return f"({body})@{self.offset}"
        return f"({body})"


@dataclass(frozen=True)
class SupportSet:
    """Finite set of integers kept sorted and duplicate-free."""

    elems: tuple[int, ...]

    def __post_init__(self) -> None:
        """Sort and deduplicate."""
        object.__setattr__(self, "elems", tuple(sorted({int(n) for n in self.elems})))

    @classmethod
    def of(cls, values: Iterable[int]) -> SupportSet:
        """Build a support set from any iterable of integers."""
        return cls(tuple(values))

    def shifted(self, m: int) -> SupportSet:
        """Return the translate {n - m}."""
        return SupportSet(tuple(n - m for n in self.elems))

    def reflected(self, m: int) -> SupportSet:
        """Return the reflection {m - n}."""
        return SupportSet(tuple(m - n for n in self.elems))

    def __iter__(self) -> Iterator[int]:
        return iter(self.elems)

    def __len__(self) -> int:
        return len(self.elems)

    def __contains__(self, n: object) -> bool:
        return n in self.elems

    def __str__(self) -> str:
        return "{" + ",".join(str(n) for n in self.elems) + "}"


@dataclass(frozen=True)
class AmbiguitySignature:
    """Autocorrelation rows of the cross sequences, one per shift k = 0..N.

    rows[k][m + N] is the lag-m coefficient of |A(a)(k, .)|^2, m = -N..N.
    Negative shifts carry the same moduli and are not stored.
    """

    degree: int
    rows: tuple[tuple[Scalar, ...], ...]

    def row(self, k: int) -> tuple[Scalar, ...]:
        """Return the row for shift k; empty when |k| > N."""
        k = abs(k)
        if k > self.degree:
            return ()
        return self.rows[k]

    def lag(self, k: int, m: int) -> Scalar:
        """Return the lag-m coefficient of row k."""
        row = self.row(k)
        center = len(row) // 2
        return row[center + m]

    def matches(self, other: AmbiguitySignature, tol: float = DEFAULT_TOL) -> bool:
        """Return True when both signatures agree row by row."""
        if self.degree != other.degree:
            return False
        return all(
            approx_equal(x, y, tol)
            for mine, theirs in zip(self.rows, other.rows, strict=True)
            for x, y in zip(mine, theirs, strict=True)
        )

    def first_difference(
        self, other: AmbiguitySignature, tol: float = DEFAULT_TOL
    ) -> tuple[int, int] | None:
        """Return the first (k, m) where the signatures differ, if any."""
        for k, (mine, theirs) in enumerate(zip(self.rows, other.rows, strict=False)):
            center = len(mine) // 2
            for idx, (x, y) in enumerate(zip(mine, theirs, strict=False)):
                if not approx_equal(x, y, tol):
                    return k, idx - center
        return None

    def to_dict(self) -> dict[str, Any]:
        """Return the JSON form, rows keyed by shift."""
        return {
            "degree": self.degree,
            "rows": {
                str(k): [scalar_to_json(v) for v in row]
                for k, row in enumerate(self.rows)
            },
        }


@dataclass(frozen=True)
class HeisenbergElement:
    """Trivial transform b_j = phase * modulation^j * a_(j-l), optionally reflected.

    The reflected form reads a_(-j-l). ``phase`` is e^(i*beta) and
    ``modulation`` is e^(i*omega); both are unit scalars, exact when the
    angle is a quarter turn or a rational point of the circle.
    """

    phase: Scalar = ONE
    modulation: Scalar = ONE
    shift: int = 0
    reflected: bool = False

    def __post_init__(self) -> None:
        """Check both units."""
        for name in ("phase", "modulation"):
            value = as_scalar(getattr(self, name))
            if not is_unimodular(value, 1e-9):
                raise NonUnimodular(f"{name} must have modulus 1: {value}")
            object.__setattr__(self, name, value)

    @classmethod
    def from_angles(
        cls, beta: float, omega: float, shift: int = 0, reflected: bool = False
    ) -> HeisenbergElement:
        """Build an element from its angles in radians."""
        return cls(unit_from_angle(beta), unit_from_angle(omega), shift, reflected)

    @property
    def beta(self) -> float:
        """Return beta in [0, 2*pi)."""
        return angle_of(self.phase)

    @property
    def omega(self) -> float:
        """Return omega in [0, 2*pi)."""
        return angle_of(self.modulation)

    def compose(self, other: HeisenbergElement) -> HeisenbergElement:
        """Return the element acting as ``self`` followed by ``other``."""
        rho = other.modulation
        modulation = (
            rho * self.modulation if not other.reflected else rho / self.modulation
        )
        return HeisenbergElement(
            phase=other.phase * self.phase / self.modulation**other.shift,
            modulation=modulation,
            shift=(
                self.shift - other.shift if self.reflected else self.shift + other.shift
            ),
            reflected=self.reflected != other.reflected,
        )

    def inverse(self) -> HeisenbergElement:
        """Return the element undoing ``self``."""
        if self.reflected:
            return HeisenbergElement(
                phase=self.modulation**self.shift * self.phase.conjugate(),
                modulation=self.modulation,
                shift=self.shift,
                reflected=True,
            )
        return HeisenbergElement(
            phase=(self.phase * self.modulation**self.shift).conjugate(),
            modulation=self.modulation.conjugate(),
            shift=-self.shift,
        )

    def to_dict(self) -> dict[str, Any]:
        """Return the JSON form of the witness."""
        return {
            "beta": self.beta,
            "omega": self.omega,
            "l": self.shift,
            "reflected": self.reflected,
            KEY_PHASE: scalar_to_json(self.phase),
            KEY_MODULATION: scalar_to_json(self.modulation),
        }


@dataclass(frozen=True)
class Multiplier:
    """Unit-modulus multiplier c(n) on a support set."""

    support: SupportSet
    values: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        """Check alignment with the support and unimodularity."""
        values = tuple(as_scalar(v) for v in self.values)
        if len(values) != len(self.support):
            raise InvalidInput(
                f"multiplier has {len(values)} values for {len(self.support)} points"
            )
        for n, value in zip(self.support, values, strict=True):
            if not is_unimodular(value, 1e-9):
                raise NonUnimodular(f"c({n}) = {value} is not a unit")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_angles(cls, support: SupportSet, angles: Iterable[float]) -> Multiplier:
        """Build a multiplier from angles in radians."""
        return cls(support, tuple(unit_from_angle(t) for t in angles))

    @classmethod
    def constant(cls, support: SupportSet, value: Scalar = ONE) -> Multiplier:
        """Return the constant multiplier."""
        return cls(support, tuple(value for _ in support))

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Multiplier:
        """Create a Multiplier from its JSON document, values paired with points."""
        points, values = data.get(KEY_SUPPORT, []), data.get(KEY_VALUES, [])
        if len(points) != len(values):
            raise InvalidInput(
                f"multiplier has {len(values)} values for {len(points)} points"
            )
        pairs = sorted(zip(points, values, strict=True), key=lambda pair: pair[0])
        return cls(
            support=SupportSet.of(n for n, _ in pairs),
            values=tuple(parse_scalar(v) for _, v in pairs),
        )

    def value(self, n: int) -> Scalar:
        """Return c(n) for n in the support."""
        return self.values[self.support.elems.index(n)]

    def as_mapping(self) -> dict[int, Scalar]:
        return dict(zip(self.support, self.values, strict=True))

    def to_dict(self) -> dict[str, Any]:
        return {
            KEY_SUPPORT: list(self.support),
            KEY_VALUES: [scalar_to_json(v) for v in self.values],
        }


@dataclass(frozen=True)
class HermiteExpansion:
    """Coefficients alpha_j of P = sum alpha_j H_j."""

    alphas: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        """Coerce and drop zero top coefficients."""
        values = [as_scalar(a) for a in self.alphas]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "alphas", tuple(values))

    @classmethod
    def of(cls, *values: Any) -> HermiteExpansion:
        return cls(tuple(values))

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> HermiteExpansion:
        """Create a HermiteExpansion from its JSON document."""
        return cls(tuple(parse_scalar(a) for a in data.get(KEY_ALPHAS, [])))

    @property
    def degree(self) -> int:
        return len(self.alphas) - 1


@dataclass(frozen=True)
class PulseDescriptor:
    """Pulse train u(t) = sum a_j chi_[j, j+eta](t) with trivial-transform decorations.

    The decorated signal is
    v(t) = phase * e^(i*modulation*t) * u(reflection*(t - shift)).
    """

    signal: Signal
    eta: Fraction
    phase: Scalar = ONE
    modulation: float = 0.0
    shift: float = 0.0
    reflection: int = 1

    def __post_init__(self) -> None:
        """Validate width, phase and reflection."""
        eta = Fraction(self.eta)
        if not 0 < eta <= MAX_PULSE_WIDTH:
            raise InvalidPulseWidth(f"pulse width must lie in (0, 1/2]: {eta}")
        object.__setattr__(self, "eta", eta)
        phase = as_scalar(self.phase)
        if not is_unimodular(phase, 1e-9):
            raise NonUnimodular(f"pulse phase must have modulus 1: {phase}")
        object.__setattr__(self, "phase", phase)
        if self.reflection not in (1, -1):
            raise InvalidInput(f"reflection must be +1 or -1: {self.reflection}")

    @classmethod
    def from_dict(
        cls, data: dict[str, Any], eta: Fraction | None = None
    ) -> PulseDescriptor:
        """Create a PulseDescriptor from a signal document with optional pulse keys."""
        decorations = data.get(KEY_DECORATIONS, {})
        width = eta if eta is not None else data.get(KEY_ETA)
        if width is None:
            raise InvalidInput("pulse width eta is required")
        parsed = parse_real(width) if not isinstance(width, Fraction) else width
        return cls(
            signal=Signal.from_dict(data),
            eta=Fraction(parsed),
            phase=parse_scalar(decorations.get(KEY_PHASE, 1)),
            modulation=float(parse_real(decorations.get(KEY_MODULATION, 0))),
            shift=float(parse_real(decorations.get(KEY_SHIFT, 0))),
            reflection=int(decorations.get(KEY_REFLECTION, 1)),
        )

    @property
    def is_decorated(self) -> bool:
        return (
            self.phase != 1
            or self.modulation != 0.0
            or self.shift != 0.0
            or self.reflection != 1
        )


@dataclass
class RunConfig:
    """Options shared by every command."""

    mode: str = MODE_EXACT
    tol: float = DEFAULT_TOL
    seed: int = DEFAULT_SEED
    workers: int | None = None
    verbose: bool = False

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> RunConfig:
        """Create a RunConfig from validated options."""
        return cls(
            mode=data.get(CONF_MODE, MODE_EXACT),
            tol=data.get(CONF_TOL, DEFAULT_TOL),
            seed=data.get(CONF_SEED, DEFAULT_SEED),
            workers=data.get(CONF_WORKERS),
            verbose=data.get(CONF_VERBOSE, False),
        )

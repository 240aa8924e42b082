"""Radical trig integrands, sign carriers, and their zero lattices.

Everything downstream (closed-form antiderivatives, jump corrections,
sign-split integration) keys off the exact zero lattices defined here,
so breakpoints are computed from closed-form lattice arithmetic and
never from numeric root-finding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

TWO_PI = 2.0 * math.pi

# ~100x double-precision epsilon; covers rounding of 1 +/- sin/cos near
# the tangential zeros (e.g. x = 3*pi/2 for 1 + sin x).
RADICAND_CLAMP = 1e-12

# Lattice points closer than this to an interval endpoint count as the
# endpoint itself, not as an interior breakpoint.
LATTICE_SNAP = 1e-12

# Guard against absurd breakpoint enumerations.
MAX_SPAN = 1e6


class Family(Enum):
    SINE = "sin"
    COSINE = "cos"


class Sign(Enum):
    PLUS = "+"
    MINUS = "-"


@dataclass(frozen=True)
class IntegrandSpec:
    """One of the four radical integrands sqrt(1 +/- sin x), sqrt(1 +/- cos x)."""

    family: Family
    sign: Sign

    def label(self) -> str:
        return f"sqrt(1 {self.sign.value} {self.family.value} x)"


def _require_finite(x: float, name: str = "x") -> None:
    if not math.isfinite(x):
        raise ValueError(f"{name} must be finite, got {x!r}")


def sgn(x: float) -> int:
    """Sign of x: -1, 0 or +1. Rejects non-finite input."""
    _require_finite(x)
    if x > 0.0:
        return 1
    if x < 0.0:
        return -1
    return 0


def _sqrt_clamped(radicand: float) -> float:
    """sqrt with a tiny-negative clamp.

    Rounding can push 1 +/- sin/cos a hair below zero near tangential
    zeros; anything below -RADICAND_CLAMP means a bug upstream.
    """
    if radicand < -RADICAND_CLAMP:
        raise RuntimeError(f"radicand {radicand!r} below clamp threshold; internal logic error")
    return math.sqrt(radicand) if radicand > 0.0 else 0.0


def eval_integrand(spec: IntegrandSpec, x: float) -> float:
    """Value of sqrt(1 +/- sin x) or sqrt(1 +/- cos x) at x (radians)."""
    _require_finite(x)
    t = math.sin(x) if spec.family is Family.SINE else math.cos(x)
    radicand = 1.0 + t if spec.sign is Sign.PLUS else 1.0 - t
    return _sqrt_clamped(radicand)


class CarrierKind(Enum):
    COS_X = "cos"
    SIN_X = "sin"
    COS_HALF_PLUS_SIN_HALF = "coshalf+sinhalf"
    COS_HALF_MINUS_SIN_HALF = "coshalf-sinhalf"
    SIN_HALF = "sinhalf"
    COS_HALF = "coshalf"
    SIN_HALF_SHIFT = "sinhalf-shifted"
    COS_HALF_SHIFT = "coshalf-shifted"


_SHIFT_KINDS = {CarrierKind.SIN_HALF_SHIFT, CarrierKind.COS_HALF_SHIFT}


@dataclass(frozen=True)
class SignCarrier:
    """A sign-carrying expression with a closed-form zero lattice.

    Zeros sit at ``zero_base + k * period`` for integer k.  ``offset`` is
    only meaningful for the shifted half-angle kinds and must be a
    multiple of pi/4.
    """

    kind: CarrierKind
    offset: float = 0.0

    def __post_init__(self):
        if self.kind in _SHIFT_KINDS:
            _require_finite(self.offset, "offset")
            quarter = math.pi / 4.0
            if abs(self.offset / quarter - round(self.offset / quarter)) > 1e-9:
                raise ValueError(f"offset must be a multiple of pi/4, got {self.offset!r}")
        elif self.offset != 0.0:
            raise ValueError(f"{self.kind} does not take an offset")

    @property
    def period(self) -> float:
        if self.kind in (CarrierKind.COS_X, CarrierKind.SIN_X):
            return math.pi
        return TWO_PI

    @property
    def zero_base(self) -> float:
        k = self.kind
        if k is CarrierKind.COS_X:
            return 0.5 * math.pi
        if k is CarrierKind.SIN_X:
            return 0.0
        if k is CarrierKind.COS_HALF_PLUS_SIN_HALF:
            # cos(x/2) + sin(x/2) = sqrt(2) cos(x/2 - pi/4)
            return 1.5 * math.pi
        if k is CarrierKind.COS_HALF_MINUS_SIN_HALF:
            # cos(x/2) - sin(x/2) = sqrt(2) cos(x/2 + pi/4)
            return 0.5 * math.pi
        if k is CarrierKind.SIN_HALF:
            return 0.0
        if k is CarrierKind.COS_HALF:
            return math.pi
        if k is CarrierKind.SIN_HALF_SHIFT:
            return -2.0 * self.offset
        return math.pi - 2.0 * self.offset  # COS_HALF_SHIFT

    @property
    def _reference_sign(self) -> int:
        """Sign of the carrier on the open interval (zero_base, zero_base + period)."""
        if self.kind in (CarrierKind.SIN_X, CarrierKind.SIN_HALF, CarrierKind.SIN_HALF_SHIFT):
            return 1
        return -1

    def value(self, x: float) -> float:
        _require_finite(x)
        k = self.kind
        if k is CarrierKind.COS_X:
            return math.cos(x)
        if k is CarrierKind.SIN_X:
            return math.sin(x)
        if k is CarrierKind.COS_HALF_PLUS_SIN_HALF:
            return math.cos(0.5 * x) + math.sin(0.5 * x)
        if k is CarrierKind.COS_HALF_MINUS_SIN_HALF:
            return math.cos(0.5 * x) - math.sin(0.5 * x)
        if k is CarrierKind.SIN_HALF:
            return math.sin(0.5 * x)
        if k is CarrierKind.COS_HALF:
            return math.cos(0.5 * x)
        if k is CarrierKind.SIN_HALF_SHIFT:
            return math.sin(0.5 * x + self.offset)
        return math.cos(0.5 * x + self.offset)

    def interval_index(self, x: float) -> int:
        """Index k of the lattice interval (z_k, z_{k+1}] containing x.

        Points within LATTICE_SNAP above a lattice zero are assigned to
        the interval below it, so evaluation at a breakpoint picks up the
        left interval (left-limit convention).
        """
        _require_finite(x)
        t = (x - self.zero_base) / self.period
        k = math.floor(t)
        if (t - k) * self.period <= LATTICE_SNAP:
            k -= 1
        return k

    def sign_at(self, x: float) -> int:
        """Carrier sign from lattice parity; never 0.

        Agrees with sgn(value(x)) away from zeros and is immune to the
        rounding noise of the trig evaluation near them; at a lattice
        zero it returns the sign of the interval just below (left limit).
        """
        k = self.interval_index(x)
        return self._reference_sign if k % 2 == 0 else -self._reference_sign

    def nearest_zero(self, x: float) -> float:
        _require_finite(x)
        k = round((x - self.zero_base) / self.period)
        return self.zero_base + k * self.period


def breakpoints(carrier: SignCarrier, a: float, b: float) -> list[float]:
    """Zeros of the carrier strictly inside (a, b), sorted ascending.

    Computed from the closed-form lattice; zeros within LATTICE_SNAP of
    either endpoint are excluded (treated as interval boundaries).
    """
    _require_finite(a, "a")
    _require_finite(b, "b")
    if b < a:
        raise ValueError(f"reversed interval [{a}, {b}]")
    if b - a > MAX_SPAN:
        raise ValueError(f"interval span {b - a} exceeds {MAX_SPAN}")
    base, period = carrier.zero_base, carrier.period
    k = math.floor((a - base) / period)
    out = []
    while True:
        z = base + k * period
        if z > b:
            break
        if z - a > LATTICE_SNAP and b - z > LATTICE_SNAP:
            out.append(z)
        k += 1
    return out

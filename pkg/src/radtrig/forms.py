"""Closed-form antiderivatives of the radical trig integrands.

Four interchangeable local forms per integrand (each valid between
consecutive zeros of its sign carrier) plus two floor/ceiling-based
global forms that are continuous on all of R.  The generic absolute
value integral combinators live here too:

  abs_over_sqrt_antiderivative   int |f|/sqrt(F) dx  ->  +/-2 sgn(f) sqrt(F)
  abs_antiderivative             int |f| dx          ->  sgn(f) F
  integral_abs_sin               int |sin(ax)| dx    (floor-based, continuous)
  integral_abs_cos               int |cos(ax)| dx    (floor-based, continuous)

The overall sign of the sqrt combinator is not taken on faith: it is
fixed so that the derivative recovers |f|/sqrt(F), which requires
F' = -f for the minus sign and F' = +f for the plus sign.  The
rationalized local forms below inherit their signs from that rule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .kernel import (
    CarrierKind,
    Family,
    IntegrandSpec,
    Sign,
    SignCarrier,
    _require_finite,
    _sqrt_clamped,
    sgn,
)

SQRT2 = math.sqrt(2.0)
TWO_PI = 2.0 * math.pi
QUARTER_PI = 0.25 * math.pi

# |F(root)| above this and the av2 hypothesis ("F vanishes at each root
# of f") does not hold; the result is then only a local antiderivative.
ROOT_VALUE_TOL = 1e-9

_FD_STEP = 1e-6          # finite-difference step for descriptor checks
_FD_REL_TOL = 1e-6       # relative tolerance on F' = +/-f


class FormKind(Enum):
    RATIONALIZED = "A"      # +/-2 sgn(trig x) sqrt(1 -/+ trig x)
    HALF_ANGLE = "B"        # sgn of a half-angle combination times its antiderivative
    SHIFT_FORWARD = "C1"    # half-angle form reached through the shift x -> x + pi/2
    SHIFT_BACKWARD = "C2"   # half-angle form reached through the shift x -> pi/2 - x
    FLOOR_FORWARD = "I1"    # global floor-based form (forward shift route)
    FLOOR_BACKWARD = "I2"   # global ceiling-based form (backward shift route)


LOCAL_FORM_KINDS = frozenset({
    FormKind.RATIONALIZED,
    FormKind.HALF_ANGLE,
    FormKind.SHIFT_FORWARD,
    FormKind.SHIFT_BACKWARD,
})
GLOBAL_FORM_KINDS = frozenset({FormKind.FLOOR_FORWARD, FormKind.FLOOR_BACKWARD})

# The shift routes swap sine for cosine, so they only produce new forms
# for the sine family; the cosine family has A, B and the global forms.
_SINE_ONLY_KINDS = frozenset({FormKind.SHIFT_FORWARD, FormKind.SHIFT_BACKWARD})


@dataclass(frozen=True)
class ClosedForm:
    """One antiderivative expression bound to one integrand."""

    spec: IntegrandSpec
    form: FormKind

    def __post_init__(self):
        if self.spec.family is Family.COSINE and self.form in _SINE_ONLY_KINDS:
            raise ValueError(f"{self.form} is not defined for the cosine family")

    @property
    def is_local(self) -> bool:
        return self.form in LOCAL_FORM_KINDS

    def carrier(self) -> SignCarrier:
        """Sign carrier of a local form; for global forms, the lattice where
        the floor/ceiling term steps (the would-be jump locations)."""
        return _carrier_for(self)


# (scale, carrier, continuous factor): the local form is
# scale * sgn(carrier(x)) * factor(x).
_LocalParts = tuple[float, SignCarrier, Callable[[float], float]]

_LOCAL_TABLE: dict[tuple[Family, Sign, FormKind], _LocalParts] = {
    (Family.SINE, Sign.PLUS, FormKind.RATIONALIZED): (
        -2.0, SignCarrier(CarrierKind.COS_X),
        lambda x: _sqrt_clamped(1.0 - math.sin(x))),
    (Family.SINE, Sign.MINUS, FormKind.RATIONALIZED): (
        2.0, SignCarrier(CarrierKind.COS_X),
        lambda x: _sqrt_clamped(1.0 + math.sin(x))),
    (Family.COSINE, Sign.PLUS, FormKind.RATIONALIZED): (
        2.0, SignCarrier(CarrierKind.SIN_X),
        lambda x: _sqrt_clamped(1.0 - math.cos(x))),
    (Family.COSINE, Sign.MINUS, FormKind.RATIONALIZED): (
        -2.0, SignCarrier(CarrierKind.SIN_X),
        lambda x: _sqrt_clamped(1.0 + math.cos(x))),

    (Family.SINE, Sign.PLUS, FormKind.HALF_ANGLE): (
        2.0, SignCarrier(CarrierKind.COS_HALF_PLUS_SIN_HALF),
        lambda x: math.sin(0.5 * x) - math.cos(0.5 * x)),
    (Family.SINE, Sign.MINUS, FormKind.HALF_ANGLE): (
        2.0, SignCarrier(CarrierKind.COS_HALF_MINUS_SIN_HALF),
        lambda x: math.sin(0.5 * x) + math.cos(0.5 * x)),
    (Family.COSINE, Sign.PLUS, FormKind.HALF_ANGLE): (
        2.0 * SQRT2, SignCarrier(CarrierKind.COS_HALF),
        lambda x: math.sin(0.5 * x)),
    (Family.COSINE, Sign.MINUS, FormKind.HALF_ANGLE): (
        -2.0 * SQRT2, SignCarrier(CarrierKind.SIN_HALF),
        lambda x: math.cos(0.5 * x)),

    (Family.SINE, Sign.PLUS, FormKind.SHIFT_FORWARD): (
        -2.0 * SQRT2, SignCarrier(CarrierKind.SIN_HALF_SHIFT, QUARTER_PI),
        lambda x: math.cos(0.5 * x + QUARTER_PI)),
    (Family.SINE, Sign.MINUS, FormKind.SHIFT_FORWARD): (
        -2.0 * SQRT2, SignCarrier(CarrierKind.SIN_HALF_SHIFT, -QUARTER_PI),
        lambda x: math.cos(0.5 * x - QUARTER_PI)),
    (Family.SINE, Sign.PLUS, FormKind.SHIFT_BACKWARD): (
        2.0 * SQRT2, SignCarrier(CarrierKind.COS_HALF_SHIFT, -QUARTER_PI),
        lambda x: math.sin(0.5 * x - QUARTER_PI)),
    (Family.SINE, Sign.MINUS, FormKind.SHIFT_BACKWARD): (
        2.0 * SQRT2, SignCarrier(CarrierKind.COS_HALF_SHIFT, QUARTER_PI),
        lambda x: math.sin(0.5 * x + QUARTER_PI)),
}

# Global forms step where the matching half-angle carrier vanishes.
_GLOBAL_CARRIER: dict[tuple[Family, Sign], SignCarrier] = {
    (Family.SINE, Sign.PLUS): SignCarrier(CarrierKind.COS_HALF_PLUS_SIN_HALF),
    (Family.SINE, Sign.MINUS): SignCarrier(CarrierKind.COS_HALF_MINUS_SIN_HALF),
    (Family.COSINE, Sign.PLUS): SignCarrier(CarrierKind.COS_HALF),
    (Family.COSINE, Sign.MINUS): SignCarrier(CarrierKind.SIN_HALF),
}


def _carrier_for(cf: ClosedForm) -> SignCarrier:
    if cf.is_local:
        return _LOCAL_TABLE[(cf.spec.family, cf.spec.sign, cf.form)][1]
    return _GLOBAL_CARRIER[(cf.spec.family, cf.spec.sign)]


def local_parts(cf: ClosedForm) -> _LocalParts:
    """Decompose a local form into scale * sgn(carrier) * factor."""
    if not cf.is_local:
        raise ValueError(f"{cf.form} is a global form")
    return _LOCAL_TABLE[(cf.spec.family, cf.spec.sign, cf.form)]


def eval_local_form(cf: ClosedForm, x: float) -> float:
    """Evaluate a local antiderivative (integration constant 0).

    At a carrier zero the value is the limit from the left; the carrier
    sign comes from lattice parity, so rounding noise in the trig
    evaluation near a zero cannot flip it.
    """
    _require_finite(x)
    scale, carrier, factor = local_parts(cf)
    return scale * carrier.sign_at(x) * factor(x)


def eval_global_floor_form(cf: ClosedForm, x: float) -> float:
    """Evaluate a continuous global antiderivative (integration constant 0)."""
    _require_finite(x)
    if cf.form not in GLOBAL_FORM_KINDS:
        raise ValueError(f"{cf.form} is a local form")
    fam, sg = cf.spec.family, cf.spec.sign
    if fam is Family.SINE:
        if cf.form is FormKind.FLOOR_FORWARD:
            if sg is Sign.PLUS:
                k = math.floor(x / TWO_PI + 0.25)
                return 4.0 * SQRT2 * k - 2.0 * SQRT2 * math.cos(0.5 * x + QUARTER_PI - k * math.pi)
            k = math.floor(x / TWO_PI + 0.75)
            return 4.0 * SQRT2 * k + 2.0 * SQRT2 * math.sin(0.5 * x + QUARTER_PI - k * math.pi)
        if sg is Sign.PLUS:
            k = math.ceil(x / TWO_PI - 0.75)
            return 4.0 * SQRT2 * k + 2.0 * SQRT2 * math.sin(0.5 * x - QUARTER_PI - k * math.pi)
        k = math.ceil(x / TWO_PI - 0.25)
        return 4.0 * SQRT2 * k + 2.0 * SQRT2 * math.cos(0.5 * x - QUARTER_PI - k * math.pi)
    # Cosine family: sqrt(1 + cos x) = sqrt(2)|cos(x/2)| and
    # sqrt(1 - cos x) = sqrt(2)|sin(x/2)|, so the forward route applies
    # the |cos|/|sin| antiderivatives directly with half-rate argument.
    if cf.form is FormKind.FLOOR_FORWARD:
        if sg is Sign.PLUS:
            return SQRT2 * integral_abs_cos(0.5, x)
        return SQRT2 * integral_abs_sin(0.5, x)
    # Backward route: the shift y = pi/2 - x turns the cosine integrand
    # into the matching sine one and negates the integral.
    sine_form = ClosedForm(IntegrandSpec(Family.SINE, sg), FormKind.FLOOR_FORWARD)
    return -eval_global_floor_form(sine_form, 0.5 * math.pi - x)


def evaluate_form(cf: ClosedForm, x: float) -> float:
    """Evaluate any closed form, local or global."""
    if cf.is_local:
        return eval_local_form(cf, x)
    return eval_global_floor_form(cf, x)


def all_forms() -> list[ClosedForm]:
    """Every (integrand, form) pair the library defines: 6 sine + 4 cosine."""
    out = []
    for family in Family:
        for sign in Sign:
            for kind in FormKind:
                if family is Family.COSINE and kind in _SINE_ONLY_KINDS:
                    continue
                out.append(ClosedForm(IntegrandSpec(family, sign), kind))
    return out


@dataclass(frozen=True)
class AbsFunctionDescriptor:
    """A function f with an antiderivative-up-to-sign F and a carrier
    whose zero lattice locates the roots of f."""

    f: Callable[[float], float]
    F: Callable[[float], float]
    carrier: SignCarrier

    def relation_sign(self) -> int:
        """+1 if F' = f, -1 if F' = -f, checked by finite differences
        at lattice-interval midpoints; raises if neither holds."""
        votes = []
        base, period = self.carrier.zero_base, self.carrier.period
        for k in range(3):
            x = base + (k + 0.5) * period
            fx = self.f(x)
            if abs(fx) < 1e-9:
                continue
            fd = (self.F(x + _FD_STEP) - self.F(x - _FD_STEP)) / (2.0 * _FD_STEP)
            if abs(fd - fx) <= _FD_REL_TOL * max(1.0, abs(fx)):
                votes.append(1)
            elif abs(fd + fx) <= _FD_REL_TOL * max(1.0, abs(fx)):
                votes.append(-1)
            else:
                raise ValueError("descriptor invalid: F' matches neither f nor -f")
        if not votes or any(v != votes[0] for v in votes):
            raise ValueError("descriptor invalid: inconsistent F'/f relation")
        return votes[0]


def abs_over_sqrt_antiderivative(d: AbsFunctionDescriptor, x: float) -> float:
    """Antiderivative of |f|/sqrt(F) at x: (+/-)2 sgn(f(x)) sqrt(F(x)).

    The overall sign is chosen so the derivative is |f|/sqrt(F), i.e.
    minus when F' = -f and plus when F' = +f.  Requires F(x) > 0.
    """
    _require_finite(x)
    Fx = d.F(x)
    if Fx <= 0.0:
        raise ValueError(f"F(x) must be positive, got {Fx!r} at x={x!r}")
    return 2.0 * d.relation_sign() * sgn(d.f(x)) * math.sqrt(Fx)


@dataclass(frozen=True)
class AbsIntegralResult:
    value: float
    conforming: bool      # False: F does not vanish at the nearest root of f,
    nearest_root: float   # so the value is only a local antiderivative there.


def abs_antiderivative(d: AbsFunctionDescriptor, x: float) -> AbsIntegralResult:
    """Antiderivative of |f| at x: sgn(f(x)) * F(x).

    Continuous across a root r of f only when F(r) = 0; the result flags
    whether that hypothesis holds at the root nearest x.
    """
    _require_finite(x)
    if d.relation_sign() != 1:
        raise ValueError("descriptor invalid here: F must satisfy F' = f")
    root = d.carrier.nearest_zero(x)
    return AbsIntegralResult(
        value=sgn(d.f(x)) * d.F(x),
        conforming=abs(d.F(root)) <= ROOT_VALUE_TOL,
        nearest_root=root,
    )


def _require_rate(alpha: float) -> None:
    _require_finite(alpha, "alpha")
    if alpha == 0.0:
        raise ValueError("alpha must be nonzero")


def integral_abs_sin(alpha: float, x: float) -> float:
    """Continuous antiderivative of |sin(alpha x)| (value 0 convention of
    the floor construction; use differences for definite integrals)."""
    _require_rate(alpha)
    _require_finite(x)
    k = math.floor(alpha * x / math.pi)
    return (2.0 * k - math.cos(alpha * x - k * math.pi)) / alpha


def integral_abs_cos(alpha: float, x: float) -> float:
    """Continuous antiderivative of |cos(alpha x)|."""
    _require_rate(alpha)
    _require_finite(x)
    k = math.floor(alpha * x / math.pi + 0.5)
    return (2.0 * k + math.sin(alpha * x - k * math.pi)) / alpha

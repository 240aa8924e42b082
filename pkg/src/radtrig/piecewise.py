"""Continuous antiderivatives from interval-local ones, and definite
integrals of the radical integrands by four independent routes.

A local form jumps where its sign carrier flips.  The jump sizes follow
analytically from the flip (twice the continuous factor, scaled), so a
cumulative per-interval constant restores continuity; that is what
``globalize`` builds.
"""

from __future__ import annotations

import math
from enum import Enum

from .kernel import IntegrandSpec, breakpoints, eval_integrand, _require_finite
from .forms import (
    ClosedForm,
    FormKind,
    eval_global_floor_form,
    eval_local_form,
    local_parts,
)
from .quadrature import integrate_adaptive

# A point this close to a carrier zero cannot anchor a globalization.
BREAKPOINT_EXCLUSION = 1e-9

# Absolute mismatch allowed between the analytic jump and its numeric
# cross-check at eps = 1e-7 (the smooth factor drifts ~ |h'| * 2e-7).
_JUMP_CHECK_EPS = 1e-7
_JUMP_CHECK_TOL = 1e-5

_ORACLE_TOL = 1e-10


def jump_at(cf: ClosedForm, b: float) -> float:
    """Jump of a local form across a breakpoint b of its carrier:
    lim cf(b+eps) - cf(b-eps).  Zero when the continuous factor
    vanishes at b (removable flip)."""
    _require_finite(b, "b")
    scale, carrier, factor = local_parts(cf)
    k = round((b - carrier.zero_base) / carrier.period)
    z = carrier.zero_base + k * carrier.period
    if abs(b - z) > BREAKPOINT_EXCLUSION:
        raise ValueError(f"{b!r} is not on the carrier's zero lattice")
    sign_before = carrier.sign_at(z)  # left-limit convention
    jump = -2.0 * sign_before * scale * factor(z)
    numeric = (eval_local_form(cf, z + _JUMP_CHECK_EPS)
               - eval_local_form(cf, z - _JUMP_CHECK_EPS))
    if abs(numeric - jump) > _JUMP_CHECK_TOL:
        raise RuntimeError(
            f"analytic jump {jump} disagrees with numeric check {numeric} at {b}")
    return jump


class PiecewiseAntiderivative:
    """A local closed form plus per-interval constants that cancel every
    jump cumulatively outward from the interval containing ``base_point``.

    The corrected evaluator is continuous and nondecreasing.  Correction
    constants are computed lazily and cached; the fill is idempotent, so
    concurrent readers see consistent values.
    """

    def __init__(self, local: ClosedForm, base_point: float):
        if not local.is_local:
            raise ValueError("only local forms can be globalized")
        _require_finite(base_point, "base_point")
        carrier = local.carrier()
        if abs(base_point - carrier.nearest_zero(base_point)) <= BREAKPOINT_EXCLUSION:
            raise ValueError(f"base point {base_point!r} is on a breakpoint")
        self.local = local
        self.base_point = base_point
        self._carrier = carrier
        base_index = carrier.interval_index(base_point)
        self.corrections: dict[int, float] = {base_index: 0.0}
        self._lo = self._hi = base_index

    def _correction(self, k: int) -> float:
        base, period = self._carrier.zero_base, self._carrier.period
        while self._hi < k:
            z = base + (self._hi + 1) * period
            self.corrections[self._hi + 1] = self.corrections[self._hi] - jump_at(self.local, z)
            self._hi += 1
        while self._lo > k:
            z = base + self._lo * period
            self.corrections[self._lo - 1] = self.corrections[self._lo] + jump_at(self.local, z)
            self._lo -= 1
        return self.corrections[k]

    def value(self, x: float) -> float:
        return eval_local_form(self.local, x) + self._correction(self._carrier.interval_index(x))

    __call__ = value


def globalize(cf: ClosedForm, base: float) -> PiecewiseAntiderivative:
    """Continuous antiderivative agreeing with the local form on the
    lattice interval containing ``base`` (which must not sit on a
    breakpoint)."""
    return PiecewiseAntiderivative(cf, base)


class IntegrationMethod(Enum):
    GLOBAL_FORM = "global"
    SPLIT_LOCAL = "split"
    FLOOR_FORM = "floor"
    ORACLE = "oracle"


_GLOBALIZED: dict[IntegrandSpec, PiecewiseAntiderivative] = {}


def _globalized(spec: IntegrandSpec) -> PiecewiseAntiderivative:
    pa = _GLOBALIZED.get(spec)
    if pa is None:
        cf = ClosedForm(spec, FormKind.HALF_ANGLE)
        carrier = cf.carrier()
        pa = globalize(cf, carrier.zero_base + 0.5 * carrier.period)
        _GLOBALIZED[spec] = pa
    return pa


def split_points(spec: IntegrandSpec, a: float, b: float) -> list[float]:
    """Where the sign-splitting route divides [a, b]: the zeros of the
    rationalized form's carrier (cos x for the sine family, sin x for
    the cosine family) strictly inside the interval."""
    lo, hi = (a, b) if a <= b else (b, a)
    carrier = ClosedForm(spec, FormKind.RATIONALIZED).carrier()
    return breakpoints(carrier, lo, hi)


def definite_integral(spec: IntegrandSpec, a: float, b: float,
                      method: IntegrationMethod = IntegrationMethod.GLOBAL_FORM) -> float:
    """Integral of the radical integrand over [a, b] (antisymmetric in
    the bounds).  All methods agree to well below 1e-8; ORACLE is the
    independent numerical check, never a default."""
    _require_finite(a, "a")
    _require_finite(b, "b")
    if a == b:
        return 0.0
    orientation = 1.0
    lo, hi = a, b
    if b < a:
        lo, hi, orientation = b, a, -1.0

    if method is IntegrationMethod.GLOBAL_FORM:
        pa = _globalized(spec)
        return orientation * (pa(hi) - pa(lo))
    if method is IntegrationMethod.SPLIT_LOCAL:
        cf = ClosedForm(spec, FormKind.RATIONALIZED)
        scale, carrier, h = local_parts(cf)
        edges = [lo, *breakpoints(carrier, lo, hi), hi]
        total = 0.0
        for p, q in zip(edges, edges[1:]):
            sigma = carrier.sign_at(0.5 * (p + q))
            total += sigma * scale * (h(q) - h(p))
        return orientation * total
    if method is IntegrationMethod.FLOOR_FORM:
        g = ClosedForm(spec, FormKind.FLOOR_FORWARD)
        return orientation * (eval_global_floor_form(g, hi) - eval_global_floor_form(g, lo))
    if method is IntegrationMethod.ORACLE:
        result = integrate_adaptive(lambda t: eval_integrand(spec, t), lo, hi, tol=_ORACLE_TOL)
        return orientation * result.value
    raise ValueError(f"unknown method {method!r}")

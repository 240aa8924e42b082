"""Self-check suites behind the ``verify`` CLI subcommand.

Every check is deterministic (fixed RNG seeds) so repeated runs print
byte-identical tables.  Each returns the measured worst error alongside
the pass/fail verdict.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .cardioid import Cardioid, arc_length_integrand, length, sample_curve
from .forms import (
    ClosedForm,
    FormKind,
    all_forms,
    eval_global_floor_form,
    evaluate_form,
    integral_abs_cos,
    integral_abs_sin,
)
from .kernel import Family, IntegrandSpec, Sign, breakpoints, eval_integrand
from .piecewise import IntegrationMethod, definite_integral, globalize
from .quadrature import integrate_adaptive

SQRT2 = math.sqrt(2.0)
TWO_PI = 2.0 * math.pi
FOUR_PI = 4.0 * math.pi
_SEED = 20240214

_DERIV_STEP = 1e-6
_DERIV_RTOL = 1e-5
_GAP_EPS = 1e-9
_GAP_TOL = 1e-6

SCOPES = ("all", "forms", "av", "cardioid")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _result(name: str, err: float, tol: float) -> CheckResult:
    return CheckResult(name, err < tol, f"max err {err:.2e} (tol {tol:.0e})")


def _sample_away_from_zeros(rng, carrier, lo, hi, n, min_dist=1e-3):
    pts = []
    while len(pts) < n:
        x = rng.uniform(lo, hi)
        if abs(x - carrier.nearest_zero(x)) > min_dist:
            pts.append(x)
    return pts


def _derivative_recovery_checks(points_per_form=1000) -> list[CheckResult]:
    out = []
    for cf in all_forms():
        rng = random.Random(_SEED)
        pts = _sample_away_from_zeros(rng, cf.carrier(), -FOUR_PI, FOUR_PI, points_per_form)
        worst = 0.0
        for x in pts:
            fd = (evaluate_form(cf, x + _DERIV_STEP)
                  - evaluate_form(cf, x - _DERIV_STEP)) / (2.0 * _DERIV_STEP)
            g = eval_integrand(cf.spec, x)
            worst = max(worst, abs(fd - g) / abs(g))
        out.append(_result(f"derivative recovery {cf.spec.label()} {cf.form.value}",
                           worst, _DERIV_RTOL))
    return out


def _continuity_checks() -> list[CheckResult]:
    out = []
    for cf in all_forms():
        carrier = cf.carrier()
        if cf.is_local:
            evaluator = globalize(cf, carrier.zero_base + 0.5 * carrier.period)
        else:
            evaluator = lambda x, cf=cf: eval_global_floor_form(cf, x)
        worst = 0.0
        for z in breakpoints(carrier, -FOUR_PI - 0.1, FOUR_PI + 0.1):
            worst = max(worst, abs(evaluator(z + _GAP_EPS) - evaluator(z - _GAP_EPS)))
        kind = cf.form.value if not cf.is_local else f"globalized {cf.form.value}"
        out.append(_result(f"continuity {cf.spec.label()} {kind}", worst, _GAP_TOL))
    return out


def _local_forms(spec: IntegrandSpec) -> list[ClosedForm]:
    return [cf for cf in all_forms() if cf.spec == spec and cf.is_local]


def _consistency_checks(grid=200) -> list[CheckResult]:
    out = []
    for family in Family:
        for sign in Sign:
            spec = IntegrandSpec(family, sign)
            forms = _local_forms(spec)
            cuts = sorted({z for cf in forms
                           for z in breakpoints(cf.carrier(), -TWO_PI, TWO_PI)})
            edges = [-TWO_PI, *cuts, TWO_PI]
            worst = 0.0
            for p, q in zip(edges, edges[1:]):
                lo, hi = p + 1e-6, q - 1e-6
                xs = [lo + (hi - lo) * i / (grid - 1) for i in range(grid)]
                for i in range(len(forms)):
                    for j in range(i + 1, len(forms)):
                        diffs = [evaluate_form(forms[i], x) - evaluate_form(forms[j], x)
                                 for x in xs]
                        worst = max(worst, max(diffs) - min(diffs))
            out.append(_result(f"local-form consistency {spec.label()}", worst, 1e-9))
    return out


def _globalized_vs_floor_checks(grid=1000) -> list[CheckResult]:
    out = []
    for family in Family:
        for sign in Sign:
            spec = IntegrandSpec(family, sign)
            cf = ClosedForm(spec, FormKind.RATIONALIZED)
            carrier = cf.carrier()
            pa = globalize(cf, carrier.zero_base + 0.5 * carrier.period)
            floor = ClosedForm(spec, FormKind.FLOOR_FORWARD)
            diffs = []
            for i in range(grid):
                x = -FOUR_PI + 2.0 * FOUR_PI * i / (grid - 1)
                if abs(x - carrier.nearest_zero(x)) < 1e-6:
                    continue
                diffs.append(pa(x) - eval_global_floor_form(floor, x))
            out.append(_result(f"globalized A matches floor form {spec.label()}",
                               max(diffs) - min(diffs), 1e-9))
    return out


def checks_forms() -> list[CheckResult]:
    return (_derivative_recovery_checks()
            + _continuity_checks()
            + _consistency_checks()
            + _globalized_vs_floor_checks())


def _av_quadrature_checks(intervals=10) -> list[CheckResult]:
    out = []
    for alpha in (0.5, 1.0, 2.0, 3.0):
        rng = random.Random(_SEED + int(alpha * 10))
        worst_sin = worst_cos = 0.0
        for _ in range(intervals):
            a, b = sorted((rng.uniform(-10, 10), rng.uniform(-10, 10)))
            got = integral_abs_sin(alpha, b) - integral_abs_sin(alpha, a)
            ref = integrate_adaptive(lambda x: abs(math.sin(alpha * x)), a, b, 1e-9).value
            worst_sin = max(worst_sin, abs(got - ref))
            got = integral_abs_cos(alpha, b) - integral_abs_cos(alpha, a)
            ref = integrate_adaptive(lambda x: abs(math.cos(alpha * x)), a, b, 1e-9).value
            worst_cos = max(worst_cos, abs(got - ref))
        out.append(_result(f"abs-sin antiderivative vs oracle alpha={alpha:g}", worst_sin, 1e-8))
        out.append(_result(f"abs-cos antiderivative vs oracle alpha={alpha:g}", worst_cos, 1e-8))
    return out


def _av_continuity_checks() -> list[CheckResult]:
    out = []
    for alpha in (0.5, 1.0, 2.0, 3.0):
        worst = 0.0
        for k in range(-8, 9):
            z = k * math.pi / alpha
            worst = max(worst, abs(integral_abs_sin(alpha, z + _GAP_EPS)
                                   - integral_abs_sin(alpha, z - _GAP_EPS)))
            z = (k + 0.5) * math.pi / alpha
            worst = max(worst, abs(integral_abs_cos(alpha, z + _GAP_EPS)
                                   - integral_abs_cos(alpha, z - _GAP_EPS)))
        out.append(_result(f"abs-sin/abs-cos continuity alpha={alpha:g}", worst, _GAP_TOL))
    return out


def _av_spot_checks() -> list[CheckResult]:
    err = max(abs(integral_abs_sin(1.0, TWO_PI) - integral_abs_sin(1.0, 0.0) - 4.0),
              abs(integral_abs_cos(1.0, math.pi) - integral_abs_cos(1.0, 0.0) - 2.0))
    return [_result("abs-sin/abs-cos spot values (4 and 2)", err, 1e-10)]


def checks_av() -> list[CheckResult]:
    return _av_quadrature_checks() + _av_continuity_checks() + _av_spot_checks()


def _length_checks() -> list[CheckResult]:
    out = []
    for trig in Family:
        for sign in Sign:
            worst_closed = worst_oracle = 0.0
            for a in (0.5, 1.0, 2.5):
                c = Cardioid(a, trig, sign)
                for method in IntegrationMethod:
                    err = abs(length(c, method) - 8.0 * a)
                    if method is IntegrationMethod.ORACLE:
                        worst_oracle = max(worst_oracle, err)
                    else:
                        worst_closed = max(worst_closed, err)
            label = f"r = a(1 {sign.value} {trig.value} t)"
            out.append(_result(f"cardioid length 8a closed-form {label}", worst_closed, 1e-12))
            out.append(_result(f"cardioid length 8a oracle {label}", worst_oracle, 1e-6))
    return out


def _reduction_checks(samples=2000) -> list[CheckResult]:
    rng = random.Random(_SEED)
    worst = 0.0
    for _ in range(samples):
        a = rng.uniform(1e-3, 10.0)
        theta = rng.uniform(-FOUR_PI, FOUR_PI)
        c = Cardioid(a, rng.choice(list(Family)), rng.choice(list(Sign)))
        expected = c.a * SQRT2 * eval_integrand(c.spec(), theta)
        worst = max(worst, abs(arc_length_integrand(c, theta) - expected))
    return [_result("arc-length integrand reduction identity", worst, 1e-12)]


def _rotation_checks(n=256) -> list[CheckResult]:
    sine = sample_curve(Cardioid(1.0, Family.SINE, Sign.PLUS), n)
    cosine = sample_curve(Cardioid(1.0, Family.COSINE, Sign.PLUS), n)
    worst = 0.0
    for k in range(n + 1):
        xs, ys = sine[(k + n // 4) % n]
        xc, yc = cosine[k]
        worst = max(worst, abs(xc - ys), abs(yc + xs))
    return [_result("cosine cardioid is sine cardioid rotated -90 deg", worst, 1e-12)]


def _closure_checks() -> list[CheckResult]:
    worst = 0.0
    for trig in Family:
        for sign in Sign:
            pts = sample_curve(Cardioid(1.0, trig, sign), 7)
            worst = max(worst, abs(pts[0][0] - pts[-1][0]), abs(pts[0][1] - pts[-1][1]))
    return [_result("sampled curves close up", worst, 1e-12)]


def checks_cardioid() -> list[CheckResult]:
    return (_length_checks() + _reduction_checks() + _rotation_checks()
            + _closure_checks())


def _full_period_checks() -> list[CheckResult]:
    out = []
    target = 4.0 * SQRT2
    for family in Family:
        for sign in Sign:
            spec = IntegrandSpec(family, sign)
            worst_closed = max(
                abs(definite_integral(spec, 0.0, TWO_PI, m) - target)
                for m in (IntegrationMethod.GLOBAL_FORM, IntegrationMethod.SPLIT_LOCAL,
                          IntegrationMethod.FLOOR_FORM))
            err_oracle = abs(definite_integral(spec, 0.0, TWO_PI, IntegrationMethod.ORACLE)
                             - target)
            out.append(_result(f"full-period integral closed {spec.label()}",
                               worst_closed, 1e-12))
            out.append(_result(f"full-period integral oracle {spec.label()}",
                               err_oracle, 1e-8))
    return out


def _method_agreement_checks(intervals=25) -> list[CheckResult]:
    out = []
    for family in Family:
        for sign in Sign:
            spec = IntegrandSpec(family, sign)
            rng = random.Random(_SEED)
            worst = 0.0
            for _ in range(intervals):
                a, b = (rng.uniform(-FOUR_PI, FOUR_PI) for _ in range(2))
                values = [definite_integral(spec, a, b, m) for m in IntegrationMethod]
                worst = max(worst, max(values) - min(values))
            out.append(_result(f"method agreement {spec.label()}", worst, 1e-8))
    return out


def run_scope(scope: str) -> list[CheckResult]:
    if scope == "forms":
        return checks_forms()
    if scope == "av":
        return checks_av()
    if scope == "cardioid":
        return checks_cardioid()
    if scope == "all":
        return (checks_forms() + checks_av() + checks_cardioid()
                + _full_period_checks() + _method_agreement_checks())
    raise ValueError(f"unknown scope {scope!r}")

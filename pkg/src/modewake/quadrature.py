"""Numerical integration engine.

Three entry points:

* :func:`integrate_finite` -- adaptive Gauss-Kronrod (G7/K15) panels on a
  finite interval with an embedded error estimate.
* :func:`integrate_oscillatory_semiinfinite` -- semi-infinite integrals of
  Re[amplitude * exp(i*phase)] with a monotone, unbounded phase.  The axis
  is cut where the phase crosses multiples of pi; the resulting alternating
  panel series is summed with iterated averaging (Euler transform).
* :func:`integrate_sqrt_endpoint` -- same, but with an integrable
  (k**2 - eps**2)**(-1/2) factor at the lower endpoint k = eps, removed
  exactly by the substitution k = sqrt(eps**2 + s**2).

All integrand callables must accept numpy arrays.
"""

import heapq
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "QuadratureConfig",
    "QuadratureResult",
    "NonConvergence",
    "PhaseNotMonotone",
    "integrate_finite",
    "integrate_oscillatory_semiinfinite",
    "integrate_sqrt_endpoint",
    "sqrt_endpoint_substitution",
]


class NonConvergence(RuntimeError):
    """Raised by callers that insist on a converged result."""


class PhaseNotMonotone(ValueError):
    """Phase decreased on the panel boundary grid."""


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-8
    abs_tol: float = 1e-12
    max_subdivisions: int = 2000
    tail_min_periods: int = 8
    accel_terms: int = 6

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be positive")
        if self.abs_tol < 0:
            raise ValueError("abs_tol must be nonnegative")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")
        if self.tail_min_periods < 4:
            raise ValueError("tail_min_periods must be >= 4")
        if self.accel_terms < 2:
            raise ValueError("accel_terms must be >= 2")

    def tolerance(self, value: float) -> float:
        return max(self.abs_tol, self.rel_tol * abs(value))


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    panels_used: int
    converged: bool


# 15-point Kronrod nodes with embedded 7-point Gauss rule (positive half).
_K15_NODES_HALF = np.array(
    [
        0.991455371120813,
        0.949107912342759,
        0.864864423359769,
        0.741531185599394,
        0.586087235467691,
        0.405845151377397,
        0.207784955007898,
        0.0,
    ]
)
_K15_WEIGHTS_HALF = np.array(
    [
        0.022935322010529,
        0.063092092629979,
        0.104790010322250,
        0.140653259715525,
        0.169004726639267,
        0.190350578064785,
        0.204432940075298,
        0.209482141084728,
    ]
)
_G7_WEIGHTS = np.array(
    [
        0.129484966168870,
        0.279705391489277,
        0.381830050505119,
        0.417959183673469,
    ]
)

_K15_NODES = np.concatenate([-_K15_NODES_HALF[:-1], _K15_NODES_HALF[::-1]])
_K15_WEIGHTS = np.concatenate([_K15_WEIGHTS_HALF[:-1], _K15_WEIGHTS_HALF[::-1]])
# Gauss nodes are the odd-indexed Kronrod nodes.
_G7_IDX = np.array([1, 3, 5, 7, 9, 11, 13])
_G7_W = np.concatenate([_G7_WEIGHTS[:-1], _G7_WEIGHTS[::-1]])


def _gk_panel(f, a: float, b: float):
    """One G7/K15 evaluation on [a, b]; returns (kronrod, error)."""
    half = 0.5 * (b - a)
    x = 0.5 * (a + b) + half * _K15_NODES
    fx = np.asarray(f(x), dtype=float)
    kron = half * float(np.dot(_K15_WEIGHTS, fx))
    gauss = half * float(np.dot(_G7_W, fx[_G7_IDX]))
    return kron, abs(kron - gauss)


def integrate_finite(f, a: float, b: float, cfg: QuadratureConfig) -> QuadratureResult:
    """Adaptive bisection of G7/K15 panels until the summed error estimate
    meets ``max(abs_tol, rel_tol*|value|)`` or ``max_subdivisions`` panels
    are in play.  Never raises on non-convergence; check ``converged``.
    """
    if not a < b:
        raise ValueError(f"need a < b, got a={a}, b={b}")
    val, err = _gk_panel(f, a, b)
    counter = 0
    heap = [(-err, counter, a, b, val)]
    total_val, total_err = val, err
    while total_err > cfg.tolerance(total_val) and len(heap) < cfg.max_subdivisions:
        neg_err, _, pa, pb, pval = heapq.heappop(heap)
        total_val -= pval
        total_err += neg_err
        mid = 0.5 * (pa + pb)
        if mid <= pa or mid >= pb:
            # interval at floating-point resolution; put it back and stop
            heapq.heappush(heap, (neg_err, counter + 1, pa, pb, pval))
            total_val += pval
            total_err -= neg_err
            break
        for qa, qb in ((pa, mid), (mid, pb)):
            counter += 1
            v, e = _gk_panel(f, qa, qb)
            heapq.heappush(heap, (-e, counter, qa, qb, v))
            total_val += v
            total_err += e
    return QuadratureResult(
        value=total_val,
        error_estimate=total_err,
        panels_used=len(heap),
        converged=total_err <= cfg.tolerance(total_val),
    )


def _phase_at(phase, k: float) -> float:
    return float(np.asarray(phase(np.array([k])))[0])


def _next_crossing(phase, k_prev: float, p_target: float, step_hint: float):
    """Smallest k > k_prev with phase(k) >= p_target, or None if the phase
    never gets there within a huge bracket.  Monotonicity is checked on the
    probe grid."""
    p_prev = _phase_at(phase, k_prev)
    step = step_hint
    k_lo, p_lo = k_prev, p_prev
    limit = 1e12 * (1.0 + abs(k_prev))
    while True:
        k_hi = k_lo + step
        p_hi = _phase_at(phase, k_hi)
        if p_hi < p_lo - 1e-12 * (1.0 + abs(p_lo)):
            raise PhaseNotMonotone(
                f"phase decreased between k={k_lo} and k={k_hi}"
            )
        if p_hi >= p_target:
            break
        k_lo, p_lo = k_hi, p_hi
        step *= 2.0
        if k_hi > limit:
            return None
    # Bisect the bracket.  The crossing only needs to be located well enough
    # for the panel series to alternate; panel sums are exact regardless.
    for _ in range(200):
        if k_hi - k_lo <= 1e-6 * (1.0 + abs(k_hi)):
            break
        k_mid = 0.5 * (k_lo + k_hi)
        if k_mid <= k_lo or k_mid >= k_hi:
            break
        if _phase_at(phase, k_mid) >= p_target:
            k_hi = k_mid
        else:
            k_lo = k_mid
    return k_hi


def phase_breakpoints(phase, k_start: float, count: int, step_hint: float = 1e-3):
    """Panel boundaries where the phase crosses phase(k_start) + j*pi,
    j = 1..count.  Returns fewer boundaries if the phase tops out."""
    p0 = _phase_at(phase, k_start)
    points = [k_start]
    hint = step_hint
    for j in range(1, count + 1):
        nxt = _next_crossing(phase, points[-1], p0 + j * math.pi, hint)
        if nxt is None:
            break
        hint = max(0.5 * (nxt - points[-1]), 1e-300)
        points.append(nxt)
    return points


def _accelerated(partials, levels: int) -> float:
    """Iterated averaging (Euler transform) of the tail of a partial-sum
    sequence; uses at most ``levels`` averaging passes."""
    use = min(levels + 1, len(partials))
    row = np.array(partials[-use:], dtype=float)
    while len(row) > 1:
        row = 0.5 * (row[1:] + row[:-1])
    return float(row[0])


def _panel_cfg(cfg: QuadratureConfig) -> QuadratureConfig:
    # per-panel tolerances a notch tighter than the target for the sum
    return QuadratureConfig(
        rel_tol=0.1 * cfg.rel_tol,
        abs_tol=0.1 * cfg.abs_tol,
        max_subdivisions=max(cfg.max_subdivisions // 10, 50),
        tail_min_periods=cfg.tail_min_periods,
        accel_terms=cfg.accel_terms,
    )


def _integrate_decaying(f, k_start: float, cfg: QuadratureConfig) -> QuadratureResult:
    """Fallback for a non-oscillatory (flat-phase) integrand: geometrically
    growing panels until two consecutive contributions are negligible."""
    pcfg = _panel_cfg(cfg)
    a = k_start
    length = 1.0 + abs(k_start)
    total = 0.0
    panels = 0
    quiet = 0
    last_err = math.inf
    while panels < cfg.max_subdivisions:
        res = integrate_finite(f, a, a + length, pcfg)
        total += res.value
        panels += res.panels_used
        last_err = abs(res.value) + res.error_estimate
        if last_err <= 0.25 * cfg.tolerance(total):
            quiet += 1
            if quiet >= 2:
                return QuadratureResult(total, last_err, panels, True)
        else:
            quiet = 0
        a += length
        length *= 2.0
    return QuadratureResult(total, last_err, panels, False)


def integrate_oscillatory_semiinfinite(
    amplitude, phase, k_start: float, cfg: QuadratureConfig
) -> QuadratureResult:
    """Evaluate Re of integral_{k_start}^{inf} amplitude(k)*exp(i*phase(k)) dk.

    The phase must be nondecreasing; if it grows without bound the axis is
    partitioned at successive phase increments of pi and the alternating
    partial sums are accelerated by iterated averaging with ``accel_terms``
    levels.  A flat phase falls back to plain panel doubling.
    """

    def f(k):
        return np.asarray(amplitude(k)) * np.cos(np.asarray(phase(k)))

    first = _next_crossing(phase, k_start, _phase_at(phase, k_start) + math.pi, 1e-3)
    if first is None:
        return _integrate_decaying(f, k_start, cfg)

    pcfg = _panel_cfg(cfg)
    p0 = _phase_at(phase, k_start)
    boundaries = [k_start, first]
    partials = []
    total = 0.0
    panel_err = 0.0
    panels = 0
    hint = max(first - k_start, 1e-300)

    est_prev = None
    stable = 0
    j = 1
    min_panels = 2 * cfg.tail_min_periods
    while j <= cfg.max_subdivisions:
        a, b = boundaries[-2], boundaries[-1]
        res = integrate_finite(f, a, b, pcfg)
        total += res.value
        panel_err += res.error_estimate
        panels += res.panels_used
        partials.append(total)

        if len(partials) >= min_panels:
            est = _accelerated(partials, cfg.accel_terms)
            if est_prev is not None:
                # successive accelerated estimates tend to underestimate the
                # distance to the limit; demand a margin below the tolerance
                # and three stable steps in a row
                diff = abs(est - est_prev)
                if diff <= 0.05 * cfg.tolerance(est):
                    stable += 1
                    if stable >= 3:
                        err = diff + panel_err
                        return QuadratureResult(
                            est, err, panels, err <= cfg.tolerance(est)
                        )
                else:
                    stable = 0
            est_prev = est

        j += 1
        nxt = _next_crossing(phase, boundaries[-1], p0 + j * math.pi, hint)
        if nxt is None:
            # phase stopped growing; finish with the decaying-tail fallback
            tail = _integrate_decaying(f, boundaries[-1], cfg)
            value = total + tail.value
            err = panel_err + tail.error_estimate
            return QuadratureResult(
                value, err, panels + tail.panels_used, err <= cfg.tolerance(value)
            )
        hint = max(0.5 * (nxt - boundaries[-1]), 1e-300)
        boundaries.append(nxt)

    est = _accelerated(partials, cfg.accel_terms) if partials else total
    return QuadratureResult(est, math.inf, panels, False)


def sqrt_endpoint_substitution(amplitude_reg, phase, eps: float):
    """Map the k-axis integrand amplitude_reg(k)*(k**2-eps**2)**(-1/2) with
    oscillatory factor cos(phase(k)), k >= eps, onto the s-axis via
    k = sqrt(eps**2 + s**2).  Returns (amplitude_s, phase_s) callables whose
    semi-infinite integral over s >= 0 equals the original over k >= eps.
    """
    if eps < 0:
        raise ValueError(f"eps must be >= 0, got {eps}")

    def amplitude_s(s):
        k = np.hypot(eps, np.asarray(s, dtype=float))
        return np.asarray(amplitude_reg(k)) / k

    def phase_s(s):
        k = np.hypot(eps, np.asarray(s, dtype=float))
        return phase(k)

    return amplitude_s, phase_s


def integrate_sqrt_endpoint(
    amplitude_reg, phase, eps: float, cfg: QuadratureConfig
) -> QuadratureResult:
    """Semi-infinite oscillatory integral with an inverse-square-root
    endpoint singularity at k = eps; ``amplitude_reg`` is the remaining
    smooth amplitude.  The substitution removes the singularity exactly and
    the transformed integral is delegated to the oscillatory engine."""
    amplitude_s, phase_s = sqrt_endpoint_substitution(amplitude_reg, phase, eps)
    return integrate_oscillatory_semiinfinite(amplitude_s, phase_s, 0.0, cfg)

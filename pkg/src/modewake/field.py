"""Steady-state mode elevation on the traverse of a moving point source.

Three evaluation routes for a single mode, all sharing the amplitude
factor A from the dispersion module:

* :func:`eta_exact` -- the oscillatory wavenumber integral
  ``A * Re int N**2 exp(i*y*k*T(k))/S(k) dk`` with branch kernels

      T(k) = sqrt(k**2 +/- eps**2) / sqrt(k**2 + b**2)
      S(k) = sqrt(k**2 +/- eps**2) * sqrt(k**2 + b**2)

  (+ for M > 1 over k in [0, inf); - for M < 1 over k in [eps, inf),
  where the inverse-square-root endpoint is removed by substitution).
* :func:`eta_macdonald` -- near-critical closed form
  ``A*N**2*H/(2*pi) * K0(y*eps**2/(2*b))``, valid on both sides of M = 1.
* :func:`eta_airy` -- supercritical far-field closed form in Ai.

:func:`eta_auto` picks a route from (M, y/H); :func:`eta_multimode` sums
modes 1..n_max.

The K0 argument has two conventions.  The default, ``y*eps**2/(2*b)``,
follows from substituting k = eps*sinh(t) into the small-k reduction of
the exact integral (phase becomes y*eps**2*sinh(2t)/(2b), and the cosine
transform of a sinh phase is a K0).  The alternative ``b*y*eps**2``
(``compat_k0_arg=True``) is kept for comparison; it tracks the exact
integral markedly worse near M = 1 and exists only so that the comparison
can be rerun.
"""

import math
import warnings
from dataclasses import dataclass, field as dc_field, replace

import numpy as np

from .dispersion import (
    CriticalParams,
    Mode,
    ModeDispersion,
    SourceGeometry,
    Stratification,
    amplitude,
    critical_params,
    mode_dispersion,
)
from .quadrature import (
    QuadratureConfig,
    QuadratureResult,
    integrate_oscillatory_semiinfinite,
    integrate_sqrt_endpoint,
)
from .specfun import DomainError, ai_values, k0_values

__all__ = [
    "CriticalSpeed",
    "DomainError",
    "FieldRequest",
    "EtaValue",
    "Regime",
    "AiryCoefficients",
    "BranchKernels",
    "AutoThresholds",
    "branch_kernels",
    "exact_integrand_complex",
    "eta_exact",
    "eta_macdonald",
    "eta_airy",
    "eta_auto",
    "eta_multimode",
    "MultimodeValue",
]

METHODS = ("exact", "macdonald", "airy", "auto")


class CriticalSpeed(ValueError):
    """The source moves exactly at the mode's maximum group velocity."""


@dataclass(frozen=True)
class Regime:
    M: float
    epsilon: float


@dataclass(frozen=True)
class FieldRequest:
    """One field evaluation: stratification, mode, geometry and method."""

    strat: Stratification
    mode: Mode
    geometry: SourceGeometry
    method: str = "auto"
    quad_cfg: QuadratureConfig = dc_field(default_factory=QuadratureConfig)
    compat_k0_arg: bool = False

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")
        self.geometry.validate(self.strat)
        if not self.geometry.y > 0:
            raise DomainError(
                f"traverse offset must be positive, got y={self.geometry.y}"
            )


@dataclass(frozen=True)
class EtaValue:
    value: float
    method_used: str
    error_estimate: float
    regime: Regime
    converged: bool = True


@dataclass(frozen=True)
class AiryCoefficients:
    """p = sqrt(M**2 - 1), beta = V**4 * alpha * (V**2 - c**2)**(-5/2)."""

    p: float
    beta: float


@dataclass(frozen=True)
class BranchKernels:
    """Kernels T, S of the exact integrand for the active Mach branch.

    sign is +1 (M > 1) or -1 (M < 1); T and S accept numpy arrays and use
    sqrt(k**2 + sign*eps**2), clipped at zero against rounding for the
    subcritical branch evaluated at k = eps.
    """

    T: object
    S: object
    sign: int


def _branch_sqrt(k, eps: float, sign: int):
    k = np.asarray(k, dtype=float)
    return np.sqrt(np.maximum(k * k + sign * eps * eps, 0.0))


def branch_kernels(md: ModeDispersion, cp: CriticalParams) -> BranchKernels:
    """T and S for the Mach branch of cp; raises CriticalSpeed at M = 1."""
    if cp.epsilon == 0.0:
        raise CriticalSpeed("branch kernels are undefined at M = 1")
    sign = 1 if cp.M > 1.0 else -1
    b, eps = md.b, cp.epsilon

    def T(k):
        k = np.asarray(k, dtype=float)
        return _branch_sqrt(k, eps, sign) / np.sqrt(k * k + b * b)

    def S(k):
        k = np.asarray(k, dtype=float)
        return _branch_sqrt(k, eps, sign) * np.sqrt(k * k + b * b)

    return BranchKernels(T=T, S=S, sign=sign)


def _setup(req: FieldRequest):
    md = mode_dispersion(req.strat, req.mode)
    cp = critical_params(md, req.geometry.V)
    A = amplitude(
        req.strat, req.mode, req.geometry.V, req.geometry.z, req.geometry.z0
    )
    return md, cp, A


def exact_integrand_complex(md: ModeDispersion, cp: CriticalParams, strat, y: float, k):
    """Complex integrand N**2*exp(i*y*k*T(k))/S(k) with principal-branch
    square roots, valid on the whole k-axis including the evanescent band
    0 < k < eps of the subcritical branch (where its real part vanishes
    identically)."""
    if cp.epsilon == 0.0:
        raise CriticalSpeed("integrand is undefined at M = 1")
    sign = 1 if cp.M > 1.0 else -1
    k = np.asarray(k, dtype=complex)
    root = np.sqrt(k * k + sign * cp.epsilon**2)
    denom = np.sqrt(k * k + md.b * md.b)
    return strat.N**2 * np.exp(1j * y * k * root / denom) / (root * denom)


def eta_exact(req: FieldRequest) -> EtaValue:
    """Exact per-mode elevation by oscillatory quadrature."""
    md, cp, A = _setup(req)
    if cp.epsilon == 0.0:
        raise CriticalSpeed(
            "the exact integral diverges logarithmically at M = 1"
        )
    N2 = req.strat.N**2
    b, eps, y = md.b, cp.epsilon, req.geometry.y
    kern = branch_kernels(md, cp)

    if cp.M > 1.0:

        def amp(k):
            return N2 / kern.S(k)

        def phase(k):
            k = np.asarray(k, dtype=float)
            return y * k * kern.T(k)

        res = integrate_oscillatory_semiinfinite(amp, phase, 0.0, req.quad_cfg)
    else:
        # real part vanishes on (0, eps); integrate from the cutoff with the
        # endpoint substitution
        def amp_reg(k):
            k = np.asarray(k, dtype=float)
            return N2 / np.sqrt(k * k + b * b)

        def phase(k):
            k = np.asarray(k, dtype=float)
            return y * k * _branch_sqrt(k, eps, -1) / np.sqrt(k * k + b * b)

        res = integrate_sqrt_endpoint(amp_reg, phase, eps, req.quad_cfg)

    return EtaValue(
        value=A * res.value,
        method_used="exact",
        error_estimate=abs(A) * res.error_estimate,
        regime=Regime(M=cp.M, epsilon=cp.epsilon),
        converged=res.converged,
    )


def macdonald_argument(md: ModeDispersion, cp: CriticalParams, y: float, compat=False):
    if compat:
        return md.b * y * cp.epsilon**2
    return y * cp.epsilon**2 / (2.0 * md.b)


def eta_macdonald(req: FieldRequest) -> EtaValue:
    """Near-critical asymptotic, valid on both sides of M = 1."""
    md, cp, A = _setup(req)
    if cp.epsilon == 0.0:
        raise CriticalSpeed("the K0 argument vanishes at M = 1")
    strat, y = req.strat, req.geometry.y
    arg = macdonald_argument(md, cp, y, compat=req.compat_k0_arg)
    value = A * strat.N**2 * strat.H / (2.0 * math.pi) * k0_values(arg)
    return EtaValue(
        value=value,
        method_used="macdonald",
        error_estimate=0.0,
        regime=Regime(M=cp.M, epsilon=cp.epsilon),
    )


def airy_coefficients(md: ModeDispersion, cp: CriticalParams, V: float) -> AiryCoefficients:
    if cp.M <= 1.0:
        raise DomainError(f"Airy coefficients require M > 1, got M={cp.M}")
    p = math.sqrt(cp.M**2 - 1.0)
    beta = V**4 * md.alpha * (V**2 - md.c**2) ** -2.5
    return AiryCoefficients(p=p, beta=beta)


def eta_airy(req: FieldRequest) -> EtaValue:
    """Supercritical far-field asymptotic in the Airy function."""
    md, cp, A = _setup(req)
    if cp.M <= 1.0:
        raise DomainError(f"the Airy form requires M > 1, got M={cp.M}")
    strat, y = req.strat, req.geometry.y
    ac = airy_coefficients(md, cp, req.geometry.V)
    scale = (3.0 * ac.beta * y * ac.p) ** (1.0 / 3.0)
    value = (
        A
        * strat.N**2
        / (2.0 * md.b * cp.epsilon * scale)
        * ai_values(y / scale)
    )
    return EtaValue(
        value=value,
        method_used="airy",
        error_estimate=0.0,
        regime=Regime(M=cp.M, epsilon=cp.epsilon),
    )


@dataclass(frozen=True)
class AutoThresholds:
    """Dispatch bounds for eta_auto: Macdonald within |M-1| <= delta_mac,
    Airy for M >= m_airy and y/H >= y_over_h_airy, exact otherwise."""

    delta_mac: float = 0.25
    m_airy: float = 2.0
    y_over_h_airy: float = 2.0


def eta_auto(req: FieldRequest, thresholds: AutoThresholds = AutoThresholds()) -> EtaValue:
    """Regime-dispatching evaluator; method_used records the choice."""
    md, cp, _ = _setup(req)
    y_over_h = req.geometry.y / req.strat.H
    if abs(cp.M - 1.0) <= thresholds.delta_mac:
        chosen = "macdonald"
    elif cp.M >= thresholds.m_airy and y_over_h >= thresholds.y_over_h_airy:
        chosen = "airy"
    else:
        chosen = "exact"
    sub = replace(req, method=chosen)
    return _EVALUATORS[chosen](sub)


@dataclass(frozen=True)
class MultimodeValue:
    """Sum over modes 1..n_max plus the per-mode contributions (None for
    skipped critical modes)."""

    value: float
    error_estimate: float
    per_mode: tuple


def eta_multimode(
    strat: Stratification,
    geometry: SourceGeometry,
    n_max: int,
    method: str = "auto",
    quad_cfg: QuadratureConfig = None,
) -> MultimodeValue:
    """Sum the steady per-mode fields for n = 1..n_max.

    Each mode has its own maximum group velocity c_n = N*H/(pi*n), so the
    same source speed puts different modes in different regimes.  Modes
    sitting exactly at M_n = 1 are skipped with a warning.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    cfg = quad_cfg if quad_cfg is not None else QuadratureConfig()
    total = 0.0
    err = 0.0
    contributions = []
    for n in range(1, n_max + 1):
        md = mode_dispersion(strat, Mode(n))
        cp = critical_params(md, geometry.V)
        if cp.epsilon == 0.0:
            warnings.warn(
                f"mode n={n} is exactly critical (M_n = 1); skipping",
                stacklevel=2,
            )
            contributions.append(None)
            continue
        req = FieldRequest(
            strat=strat, mode=Mode(n), geometry=geometry, method=method, quad_cfg=cfg
        )
        ev = eta_auto(req) if method == "auto" else _EVALUATORS[method](req)
        total += ev.value
        err += ev.error_estimate
        contributions.append(ev)
    return MultimodeValue(value=total, error_estimate=err, per_mode=tuple(contributions))


_EVALUATORS = {
    "exact": eta_exact,
    "macdonald": eta_macdonald,
    "airy": eta_airy,
    "auto": eta_auto,
}

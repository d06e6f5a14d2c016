"""Steady internal-wave mode fields behind a uniformly moving source.

Per-mode elevation on the source traverse in a constant-N channel, via the
exact oscillatory integral, a near-critical Macdonald-K0 asymptotic and a
supercritical far-field Airy asymptotic, plus a sweep CLI that tabulates
the three against each other.
"""

from .dispersion import (
    CriticalParams,
    Mode,
    ModeDispersion,
    SourceGeometry,
    Stratification,
    amplitude,
    critical_params,
    group_velocity,
    lambda_mu,
    mode_dispersion,
    omega,
)
from .field import (
    AutoThresholds,
    BranchKernels,
    CriticalSpeed,
    EtaValue,
    FieldRequest,
    MultimodeValue,
    Regime,
    branch_kernels,
    eta_airy,
    eta_auto,
    eta_exact,
    eta_macdonald,
    eta_multimode,
)
from .quadrature import (
    NonConvergence,
    PhaseNotMonotone,
    QuadratureConfig,
    QuadratureResult,
    integrate_finite,
    integrate_oscillatory_semiinfinite,
    integrate_sqrt_endpoint,
)
from .specfun import DomainError, SpecialValue, airy_ai, bessel_k0

__version__ = "0.1.0"

__all__ = [
    "Stratification",
    "Mode",
    "ModeDispersion",
    "CriticalParams",
    "SourceGeometry",
    "mode_dispersion",
    "omega",
    "group_velocity",
    "lambda_mu",
    "critical_params",
    "amplitude",
    "QuadratureConfig",
    "QuadratureResult",
    "NonConvergence",
    "PhaseNotMonotone",
    "integrate_finite",
    "integrate_oscillatory_semiinfinite",
    "integrate_sqrt_endpoint",
    "SpecialValue",
    "DomainError",
    "bessel_k0",
    "airy_ai",
    "FieldRequest",
    "EtaValue",
    "Regime",
    "BranchKernels",
    "AutoThresholds",
    "MultimodeValue",
    "CriticalSpeed",
    "branch_kernels",
    "eta_exact",
    "eta_macdonald",
    "eta_airy",
    "eta_auto",
    "eta_multimode",
    "__version__",
]

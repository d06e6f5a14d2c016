"""Modal dispersion for a uniformly stratified channel with rigid lids.

For constant buoyancy frequency N in a channel of depth H, mode n has the
closed-form dispersion relation

    omega(k) = N * k / sqrt(k**2 + b**2),    b = n * pi / H

with maximum group velocity c = N / b attained at k -> 0.  A point source
moving at speed V excites each mode in a sub- or supercritical regime
depending on the modal Mach number M = V / c; the criticality parameter
eps = b * sqrt(|1 - M**-2|) controls how close the regime is to M = 1 and,
for M < 1, doubles as the cutoff wavenumber below which the mode is
evanescent on the traverse.
"""

import math
from dataclasses import dataclass

import numpy as np

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
]


@dataclass(frozen=True)
class Stratification:
    """Constant-N channel: buoyancy frequency N (rad/time), depth H (> 0)."""

    N: float
    H: float

    def __post_init__(self):
        if not self.N > 0:
            raise ValueError(f"buoyancy frequency must be positive, got N={self.N}")
        if not self.H > 0:
            raise ValueError(f"channel depth must be positive, got H={self.H}")


@dataclass(frozen=True)
class Mode:
    """Vertical mode index, n >= 1."""

    n: int

    def __post_init__(self):
        if not (isinstance(self.n, (int, np.integer)) and self.n >= 1):
            raise ValueError(f"mode index must be an integer >= 1, got n={self.n}")


@dataclass(frozen=True)
class ModeDispersion:
    """Derived modal constants.

    b      modal wavenumber scale, n*pi/H
    c      maximum group velocity, N/b
    alpha  cubic coefficient of the small-k expansion omega ~ c*k - alpha*k**3
    """

    b: float
    c: float
    alpha: float


@dataclass(frozen=True)
class CriticalParams:
    """Criticality of a (mode, source-speed) pair.

    M        modal Mach number V/c
    epsilon  b*sqrt(|1 - M**-2|); zero exactly at M = 1
    K        cutoff wavenumber: epsilon for M < 1, zero for M >= 1
    """

    M: float
    epsilon: float
    K: float


@dataclass(frozen=True)
class SourceGeometry:
    """Source speed/depth and observation depth/offset.

    Depths are negative (z = 0 is the lid, z = -H the bottom) and must lie
    strictly inside the channel.  y is the horizontal offset on the traverse.
    """

    V: float
    z0: float
    z: float
    y: float

    def validate(self, strat: Stratification):
        if not self.V > 0:
            raise ValueError(f"source speed must be positive, got V={self.V}")
        for name, depth in (("z0", self.z0), ("z", self.z)):
            if not (-strat.H < depth < 0):
                raise ValueError(
                    f"{name}={depth} must lie strictly inside (-H, 0) with H={strat.H}"
                )


def mode_dispersion(strat: Stratification, mode: Mode) -> ModeDispersion:
    """Closed-form modal constants b, c, alpha for a constant-N channel."""
    b = mode.n * math.pi / strat.H
    c = strat.N / b
    alpha = c / (2.0 * b * b)
    return ModeDispersion(b=b, c=c, alpha=alpha)


def omega(md: ModeDispersion, strat: Stratification, k):
    """Modal frequency omega(k) = N*k/sqrt(k**2 + b**2), for k >= 0."""
    k = np.asarray(k, dtype=float)
    return strat.N * k / np.sqrt(k * k + md.b * md.b)


def group_velocity(md: ModeDispersion, strat: Stratification, k):
    """d(omega)/dk = N*b**2/(k**2 + b**2)**(3/2); equals c at k = 0."""
    k = np.asarray(k, dtype=float)
    return strat.N * md.b * md.b / (k * k + md.b * md.b) ** 1.5


def lambda_mu(md: ModeDispersion, strat: Stratification, V: float, k):
    """Return (lambda_squared, mu) with mu = omega(k)/V, lambda^2 = k^2 - mu^2.

    lambda_squared >= 0 marks the propagating band (k > mu).
    """
    k = np.asarray(k, dtype=float)
    mu = omega(md, strat, k) / V
    return k * k - mu * mu, mu


def critical_params(md: ModeDispersion, V: float) -> CriticalParams:
    """Mach number, criticality parameter and cutoff wavenumber for speed V."""
    if not V > 0:
        raise ValueError(f"source speed must be positive, got V={V}")
    M = V / md.c
    epsilon = md.b * math.sqrt(abs(1.0 - M**-2))
    K = epsilon if M < 1.0 else 0.0
    return CriticalParams(M=M, epsilon=epsilon, K=K)


def amplitude(
    strat: Stratification, mode: Mode, V: float, z: float, z0: float
) -> float:
    """Vertical amplitude factor sin(n*pi*z/H)*cos(n*pi*z0/H)/(V*N**2*H**2).

    Unit-amplitude eigenfunctions; vanishes at the n+1 nodal depths of the
    observation eigenfunction and at the nodes of the source derivative
    factor.
    """
    n, H, N = mode.n, strat.H, strat.N
    return (
        math.sin(n * math.pi * z / H)
        * math.cos(n * math.pi * z0 / H)
        / (V * N * N * H * H)
    )

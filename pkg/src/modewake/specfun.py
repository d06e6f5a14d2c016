"""Self-contained Macdonald K0 and Airy Ai evaluation.

Branch layout (switch points chosen where adjacent branches overlap to
better than 1e-12):

K0:  (0, 2]          log-coupled power series
     (2, 8]          Chebyshev fit of sqrt(x)*exp(x)*K0(x)
     (8, inf)        Chebyshev fit in 16/x - 1 (exact limit at infinity)

Ai:  (-inf, -13)     oscillatory asymptotic series (cos/sin pair)
     [-13, -4)       Chebyshev fit of the slowly varying cos/sin pair
     [-4, 2)         Maclaurin series
     [2, 12]         Chebyshev fit of the exponentially scaled function
     (12, inf)       exponential asymptotic series

Relative accuracy is ~1e-13 or better everywhere the field formulas
evaluate these functions; values that underflow the exponential range are
returned as 0.0 with the ``underflow_to_zero`` flag.

The array entry points :func:`k0_values` and :func:`ai_values` dispatch to
numba kernels when available (see ``_backend``), otherwise to the numpy
implementations below.  Both paths share the frozen coefficient tables in
``_specfun_coeffs``.
"""

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.chebyshev import chebval

from ._backend import NUMBA_ENABLED
from ._specfun_coeffs import (
    AI_NEG_P,
    AI_NEG_Q,
    AI_NEG_V_HI,
    AI_NEG_V_LO,
    AI_POS,
    K0_FAR,
    K0_MID,
)

__all__ = ["SpecialValue", "DomainError", "bessel_k0", "airy_ai", "k0_values", "ai_values"]

EULER_GAMMA = 0.5772156649015328606
_AI_ZERO = 0.35502805388781723926  # Ai(0)  = 3**(-2/3)/Gamma(2/3)
_AI_SLOPE = 0.25881940379280679840  # -Ai'(0) = 3**(-1/3)/Gamma(1/3)

_SERIES_TERMS = 30
_ASYMP_TERMS = 25


class DomainError(ValueError):
    """Argument outside the supported domain."""


@dataclass(frozen=True)
class SpecialValue:
    value: float
    domain_flag: str = "normal"  # "normal" or "underflow_to_zero"


def _k0_series(x):
    """Power series branch, x <= 2: K0 = -(log(x/2)+gamma)*I0 + sum."""
    t = 0.25 * x * x
    i0 = np.ones_like(x)
    term = np.ones_like(x)
    hsum = np.zeros_like(x)
    acc = np.zeros_like(x)
    h = 0.0
    for k in range(1, _SERIES_TERMS + 1):
        term = term * t / (k * k)
        i0 += term
        h += 1.0 / k
        acc += term * h
    return -(np.log(0.5 * x) + EULER_GAMMA) * i0 + acc


def k0_numpy(x):
    """Pure-numpy K0 over an array of positive arguments."""
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)
    small = x <= 2.0
    if np.any(small):
        out[small] = _k0_series(x[small])
    mid = (x > 2.0) & (x <= 8.0)
    if np.any(mid):
        xm = x[mid]
        out[mid] = chebval((16.0 / xm - 5.0) / 3.0, K0_MID) * np.exp(-xm) / np.sqrt(xm)
    far = x > 8.0
    if np.any(far):
        xf = x[far]
        with np.errstate(under="ignore"):
            out[far] = chebval(16.0 / xf - 1.0, K0_FAR) * np.exp(-xf) / np.sqrt(xf)
    return out


def _ai_maclaurin(x):
    x3 = x * x * x
    f_sum = np.ones_like(x)
    f_term = np.ones_like(x)
    g_sum = x.copy()
    g_term = x.copy()
    for k in range(_SERIES_TERMS):
        f_term = f_term * x3 / ((3 * k + 2) * (3 * k + 3))
        f_sum += f_term
        g_term = g_term * x3 / ((3 * k + 3) * (3 * k + 4))
        g_sum += g_term
    return _AI_ZERO * f_sum - _AI_SLOPE * g_sum


def _ai_asymp_pq(zeta):
    """Asymptotic cos/sin pair P(zeta), Q(zeta) of the oscillatory region.

    Valid for zeta >= ~28; 25 terms are strictly decreasing there and the
    last retained one is far below double precision.
    """
    p = np.zeros_like(zeta)
    q = np.zeros_like(zeta)
    u = 1.0
    for k in range(_ASYMP_TERMS):
        term = u / zeta**k
        if k % 4 == 0:
            p += term
        elif k % 4 == 1:
            q += term
        elif k % 4 == 2:
            p -= term
        else:
            q -= term
        u *= (6 * k + 1) * (6 * k + 3) * (6 * k + 5) / (216.0 * (k + 1) * (2 * k + 1))
    return p, q


def _ai_asymp_pos(x):
    zeta = (2.0 / 3.0) * x**1.5
    s = np.zeros_like(x)
    u = 1.0
    sign = 1.0
    for k in range(_ASYMP_TERMS):
        s += sign * u / zeta**k
        u *= (6 * k + 1) * (6 * k + 3) * (6 * k + 5) / (216.0 * (k + 1) * (2 * k + 1))
        sign = -sign
    with np.errstate(under="ignore"):
        return np.exp(-zeta) * s / (2.0 * math.sqrt(math.pi) * x**0.25)


def ai_numpy(x):
    """Pure-numpy Ai over an array of real arguments."""
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)

    mac = (x >= -4.0) & (x < 2.0)
    if np.any(mac):
        out[mac] = _ai_maclaurin(x[mac])

    pos_cheb = (x >= 2.0) & (x <= 12.0)
    if np.any(pos_cheb):
        xp = x[pos_cheb]
        zeta = (2.0 / 3.0) * xp**1.5
        g = chebval((2.0 * xp - 14.0) / 10.0, AI_POS)
        out[pos_cheb] = g * np.exp(-zeta) / (2.0 * math.sqrt(math.pi) * xp**0.25)

    pos_asym = x > 12.0
    if np.any(pos_asym):
        out[pos_asym] = _ai_asymp_pos(x[pos_asym])

    neg_cheb = (x >= -13.0) & (x < -4.0)
    if np.any(neg_cheb):
        t = -x[neg_cheb]
        zeta = (2.0 / 3.0) * t**1.5
        u = (2.0 / zeta - (AI_NEG_V_HI + AI_NEG_V_LO)) / (AI_NEG_V_HI - AI_NEG_V_LO)
        p = chebval(u, AI_NEG_P)
        q = chebval(u, AI_NEG_Q)
        th = zeta - 0.25 * math.pi
        out[neg_cheb] = (np.cos(th) * p + np.sin(th) * q) / (
            math.sqrt(math.pi) * t**0.25
        )

    neg_asym = x < -13.0
    if np.any(neg_asym):
        t = -x[neg_asym]
        zeta = (2.0 / 3.0) * t**1.5
        p, q = _ai_asymp_pq(zeta)
        th = zeta - 0.25 * math.pi
        out[neg_asym] = (np.cos(th) * p + np.sin(th) * q) / (
            math.sqrt(math.pi) * t**0.25
        )

    return out


def k0_values(x):
    """K0 on a scalar or array of positive arguments; returns plain floats."""
    arr = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(arr <= 0.0):
        raise DomainError("K0 requires strictly positive arguments")
    if NUMBA_ENABLED:
        from ._specfun_numba import k0_arr

        out = k0_arr(np.ascontiguousarray(arr))
    else:
        out = k0_numpy(arr)
    return out if np.ndim(x) else float(out[0])


def ai_values(x):
    """Ai on a scalar or array of real arguments; returns plain floats."""
    arr = np.atleast_1d(np.asarray(x, dtype=float))
    if NUMBA_ENABLED:
        from ._specfun_numba import ai_arr

        out = ai_arr(np.ascontiguousarray(arr))
    else:
        out = ai_numpy(arr)
    return out if np.ndim(x) else float(out[0])


def bessel_k0(x: float) -> SpecialValue:
    """Macdonald function K0(x), x > 0, with an underflow flag for large x."""
    if not x > 0:
        raise DomainError(f"K0 requires x > 0, got x={x}")
    v = k0_values(float(x))
    flag = "underflow_to_zero" if (v == 0.0 and x > 700.0) else "normal"
    return SpecialValue(value=v, domain_flag=flag)


def airy_ai(x: float) -> SpecialValue:
    """Airy function Ai(x) for any real x, with an underflow flag."""
    v = ai_values(float(x))
    flag = "underflow_to_zero" if (v == 0.0 and x > 100.0) else "normal"
    return SpecialValue(value=v, domain_flag=flag)

"""Numba kernels for K0 and Ai.

Scalar loops compiled with @njit, mirroring the branch logic and the
frozen tables of ``specfun``/``_specfun_coeffs`` exactly; a test pins the
two backends against each other.  Imported lazily so environments without
numba (or with MODEWAKE_DISABLE_NUMBA set) never touch this module.
"""

import math

import numpy as np

from ._backend import njit
from ._specfun_coeffs import (
    AI_NEG_P,
    AI_NEG_Q,
    AI_NEG_V_HI,
    AI_NEG_V_LO,
    AI_POS,
    K0_FAR,
    K0_MID,
)

_EULER_GAMMA = 0.5772156649015328606
_AI_ZERO = 0.35502805388781723926
_AI_SLOPE = 0.25881940379280679840
_SERIES_TERMS = 30
_ASYMP_TERMS = 25


@njit(cache=True)
def _cheb(u, c):
    b1 = 0.0
    b2 = 0.0
    for i in range(len(c) - 1, 0, -1):
        b1, b2 = 2.0 * u * b1 - b2 + c[i], b1
    return u * b1 - b2 + c[0]


@njit(cache=True)
def k0_scalar(x):
    if x <= 2.0:
        t = 0.25 * x * x
        i0 = 1.0
        term = 1.0
        h = 0.0
        acc = 0.0
        for k in range(1, _SERIES_TERMS + 1):
            term = term * t / (k * k)
            i0 += term
            h += 1.0 / k
            acc += term * h
        return -(math.log(0.5 * x) + _EULER_GAMMA) * i0 + acc
    if x <= 8.0:
        g = _cheb((16.0 / x - 5.0) / 3.0, K0_MID)
    else:
        g = _cheb(16.0 / x - 1.0, K0_FAR)
    if x > 700.0:
        return 0.0
    return g * math.exp(-x) / math.sqrt(x)


@njit(cache=True)
def ai_scalar(x):
    if -4.0 <= x < 2.0:
        x3 = x * x * x
        f_sum = 1.0
        f_term = 1.0
        g_sum = x
        g_term = x
        for k in range(_SERIES_TERMS):
            f_term = f_term * x3 / ((3 * k + 2) * (3 * k + 3))
            f_sum += f_term
            g_term = g_term * x3 / ((3 * k + 3) * (3 * k + 4))
            g_sum += g_term
        return _AI_ZERO * f_sum - _AI_SLOPE * g_sum
    if x >= 2.0:
        zeta = (2.0 / 3.0) * x**1.5
        if zeta > 700.0:
            return 0.0
        if x <= 12.0:
            g = _cheb((2.0 * x - 14.0) / 10.0, AI_POS)
        else:
            g = 0.0
            u = 1.0
            sign = 1.0
            zp = 1.0
            for k in range(_ASYMP_TERMS):
                g += sign * u / zp
                u *= (
                    (6 * k + 1)
                    * (6 * k + 3)
                    * (6 * k + 5)
                    / (216.0 * (k + 1) * (2 * k + 1))
                )
                sign = -sign
                zp *= zeta
        return g * math.exp(-zeta) / (2.0 * math.sqrt(math.pi) * x**0.25)
    # x < -4: oscillatory region
    t = -x
    zeta = (2.0 / 3.0) * t**1.5
    if x >= -13.0:
        u = (2.0 / zeta - (AI_NEG_V_HI + AI_NEG_V_LO)) / (AI_NEG_V_HI - AI_NEG_V_LO)
        p = _cheb(u, AI_NEG_P)
        q = _cheb(u, AI_NEG_Q)
    else:
        p = 0.0
        q = 0.0
        u = 1.0
        zp = 1.0
        for k in range(_ASYMP_TERMS):
            term = u / zp
            r = k % 4
            if r == 0:
                p += term
            elif r == 1:
                q += term
            elif r == 2:
                p -= term
            else:
                q -= term
            u *= (
                (6 * k + 1)
                * (6 * k + 3)
                * (6 * k + 5)
                / (216.0 * (k + 1) * (2 * k + 1))
            )
            zp *= zeta
    th = zeta - 0.25 * math.pi
    return (math.cos(th) * p + math.sin(th) * q) / (math.sqrt(math.pi) * t**0.25)


@njit(cache=True)
def k0_arr(x):
    out = np.empty_like(x)
    for i in range(x.shape[0]):
        out[i] = k0_scalar(x[i])
    return out


@njit(cache=True)
def ai_arr(x):
    out = np.empty_like(x)
    for i in range(x.shape[0]):
        out[i] = ai_scalar(x[i])
    return out

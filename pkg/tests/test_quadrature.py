import math

import numpy as np
import pytest

from modewake.quadrature import (
    PhaseNotMonotone,
    QuadratureConfig,
    integrate_finite,
    integrate_oscillatory_semiinfinite,
    integrate_sqrt_endpoint,
    phase_breakpoints,
    sqrt_endpoint_substitution,
)
from modewake.specfun import k0_values

CFG = QuadratureConfig()


def as_float(t):
    return np.asarray(t, dtype=float)


class TestFinite:
    def test_constant(self):
        r = integrate_finite(lambda t: np.ones_like(as_float(t)), 0.0, 1.0, CFG)
        assert r.converged
        assert r.value == pytest.approx(1.0, abs=1e-13)

    def test_cosine(self):
        r = integrate_finite(np.cos, 0.0, math.pi / 2, CFG)
        assert r.value == pytest.approx(1.0, abs=1e-12)

    def test_gaussian_moment(self):
        r = integrate_finite(lambda t: t * np.exp(-t * t), 0.0, 3.0, CFG)
        assert r.value == pytest.approx((1 - math.exp(-9.0)) / 2.0, rel=1e-10)

    def test_error_estimate_honest(self):
        r = integrate_finite(lambda t: np.sin(7 * t) ** 2, 0.0, 5.0, CFG)
        exact = 2.5 - math.sin(70.0) / 28.0
        assert abs(r.value - exact) <= max(10 * r.error_estimate, 1e-12)

    def test_non_convergence_reported_not_raised(self):
        cfg = QuadratureConfig(rel_tol=1e-14, abs_tol=0.0, max_subdivisions=4)
        r = integrate_finite(lambda t: np.abs(t) ** -0.9, 1e-12, 1.0, cfg)
        assert not r.converged
        assert r.error_estimate > 0

    def test_bad_interval(self):
        with pytest.raises(ValueError):
            integrate_finite(np.cos, 1.0, 0.0, CFG)


class TestOscillatory:
    def test_plain_decay_reduces_to_integral(self):
        r = integrate_oscillatory_semiinfinite(
            lambda t: np.exp(-as_float(t)),
            lambda t: np.zeros_like(as_float(t)),
            0.0,
            CFG,
        )
        assert r.converged
        assert r.value == pytest.approx(1.0, abs=1e-9)

    def test_sine_integral(self):
        # int_0^inf sin(t)/t dt = pi/2: smooth head plus oscillatory tail
        # with cos(t - pi/2) = sin(t)
        head = integrate_finite(lambda t: np.sin(t) / t, 1e-300, 1.0, CFG)
        tail = integrate_oscillatory_semiinfinite(
            lambda t: 1.0 / as_float(t),
            lambda t: as_float(t) - math.pi / 2,
            1.0,
            CFG,
        )
        assert tail.converged
        assert head.value + tail.value == pytest.approx(math.pi / 2, abs=1e-8)

    @pytest.mark.parametrize("x", [0.25, 1.0, 4.0])
    def test_sinh_phase_gives_k0(self, x):
        r = integrate_oscillatory_semiinfinite(
            lambda t: np.ones_like(as_float(t)),
            lambda t: x * np.sinh(as_float(t)),
            0.0,
            CFG,
        )
        assert r.converged
        assert abs(r.value - k0_values(x)) < 1e-10

    def test_phase_not_monotone_detected(self):
        with pytest.raises(PhaseNotMonotone):
            integrate_oscillatory_semiinfinite(
                lambda t: np.exp(-as_float(t)),
                lambda t: np.sin(as_float(t)),
                0.0,
                CFG,
            )

    def test_tolerance_contract(self):
        # rerunning with rel_tol/10 moves the value by at most 5x the
        # original tolerance
        def amp(t):
            return 1.0 / (1.0 + as_float(t) ** 2)

        def phase(t):
            return 3.0 * as_float(t)

        for rel in (1e-6, 1e-8):
            a = integrate_oscillatory_semiinfinite(
                amp, phase, 0.0, QuadratureConfig(rel_tol=rel)
            )
            b = integrate_oscillatory_semiinfinite(
                amp, phase, 0.0, QuadratureConfig(rel_tol=rel / 10)
            )
            assert a.converged and b.converged
            assert abs(a.value - b.value) <= 5 * max(a.error_estimate, rel * abs(a.value))

    def test_panel_decomposition_contiguous(self):
        pts = phase_breakpoints(lambda t: 2.0 * as_float(t), 0.5, 12)
        pts = np.array(pts)
        assert len(pts) == 13
        assert np.all(np.diff(pts) > 0)  # strictly increasing, no overlaps
        # boundaries sit at phase increments of pi (gap-free by construction)
        ph = 2.0 * pts
        assert np.max(np.abs(np.diff(ph) - math.pi)) < 1e-2


class TestSqrtEndpoint:
    def test_substitution_removes_singularity_exactly(self):
        # int_eps^{2 eps} (k^2 - eps^2)^{-1/2} dk = arccosh(2) = ln(2 + sqrt 3)
        eps = 0.7
        amp_s, _ = sqrt_endpoint_substitution(
            lambda k: np.ones_like(as_float(k)), lambda k: as_float(k), eps
        )
        s_max = math.sqrt(3.0) * eps  # image of k = 2 eps
        r = integrate_finite(amp_s, 0.0, s_max, CFG)
        assert r.value == pytest.approx(math.log(2.0 + math.sqrt(3.0)), rel=1e-10)

    def test_damped_integrand_matches_k0(self):
        # int_1^inf e^{-k} (k^2-1)^{-1/2} dk = K0(1)
        r = integrate_sqrt_endpoint(
            lambda k: np.exp(-as_float(k)),
            lambda k: np.zeros_like(as_float(k)),
            1.0,
            CFG,
        )
        assert r.converged
        assert r.value == pytest.approx(float(k0_values(1.0)), abs=1e-9)

    def test_eps_zero_is_identity(self):
        # with eps = 0 the substitution is k = s; amplitude_reg(k) = k e^{-k}
        # makes the transformed amplitude smooth at the origin
        a = integrate_sqrt_endpoint(
            lambda k: as_float(k) * np.exp(-as_float(k)),
            lambda k: as_float(k),
            0.0,
            CFG,
        )
        b = integrate_oscillatory_semiinfinite(
            lambda k: np.exp(-as_float(k)),
            lambda k: as_float(k),
            0.0,
            CFG,
        )
        assert a.value == pytest.approx(b.value, abs=1e-9)
        assert a.value == pytest.approx(0.5, abs=1e-9)  # int e^-k cos k dk

    def test_clipped_sliver_cross_check(self):
        # naive finite integration just above the singular endpoint, plus the
        # analytic sliver, agrees with the substitution route
        eps = 1.0

        def damped(k):
            k = as_float(k)
            return np.exp(-k) / np.sqrt(np.maximum(k * k - eps * eps, 1e-300))

        delta = eps * 1e-6
        naive = integrate_finite(damped, eps + delta, 30.0, CFG).value
        # sliver: integrand ~ e^{-eps}/sqrt(2 eps (k - eps)) near the endpoint
        sliver = math.exp(-eps) * 2.0 * math.sqrt(delta / (2.0 * eps))
        sub = integrate_sqrt_endpoint(
            lambda k: np.exp(-as_float(k)),
            lambda k: np.zeros_like(as_float(k)),
            eps,
            CFG,
        ).value
        assert naive + sliver == pytest.approx(sub, rel=1e-4)

    def test_negative_eps_rejected(self):
        with pytest.raises(ValueError):
            sqrt_endpoint_substitution(lambda k: k, lambda k: k, -1.0)


def test_config_validation():
    with pytest.raises(ValueError):
        QuadratureConfig(rel_tol=0.0)
    with pytest.raises(ValueError):
        QuadratureConfig(tail_min_periods=2)
    with pytest.raises(ValueError):
        QuadratureConfig(accel_terms=1)
    with pytest.raises(ValueError):
        QuadratureConfig(max_subdivisions=0)
    with pytest.raises(ValueError):
        QuadratureConfig(abs_tol=-1.0)

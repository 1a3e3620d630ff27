"""Boundary-quadrature norms against closed-form values and invariants."""

import math

import numpy as np
import pytest

from hardylab import (
    QuadratureConfig,
    SpaceParams,
    TaylorSeries,
    boundary_values,
    boundary_scale,
    derivative_sum_norm,
    hardy_sum,
    hp_norm,
    integral_mean,
    sn_norm,
    sn_norm_unrolled,
    sup_norm,
    sup_sum_norm,
    zero,
)

ONE_PLUS_Z = TaylorSeries([1.0, 1.0])


class TestClosedFormValues:
    def test_h1_of_one_plus_z(self):
        # (1/2pi) int |1+e^it| dt = 4/pi; the integrand has a corner at
        # t=pi so the trapezoid rule converges polynomially, not spectrally
        assert hp_norm(ONE_PLUS_Z, 1.0) == pytest.approx(4.0 / math.pi, abs=1e-6)

    def test_h2_of_one_plus_z(self):
        assert hp_norm(ONE_PLUS_Z, 2.0) == pytest.approx(math.sqrt(2.0), abs=1e-12)

    def test_h4_of_one_plus_z(self):
        # mean of |1+e^it|^4 is 6, via the coefficient sum of (1+z)^2
        assert hp_norm(ONE_PLUS_Z, 4.0) == pytest.approx(6.0**0.25, abs=1e-12)

    def test_space_norm_of_quadratic(self):
        f = TaylorSeries([1.0, 1.0, 1.0])
        expected = 1.0 + math.sqrt(5.0)  # |f(0)| + ||1 + 2z||_2
        assert sn_norm(f, SpaceParams(1, 2.0)) == pytest.approx(expected, abs=1e-12)

    def test_equivalent_norms_of_one_plus_z(self):
        params = SpaceParams(1, 2.0)
        assert derivative_sum_norm(ONE_PLUS_Z, params) == pytest.approx(
            math.sqrt(2.0) + 1.0, abs=1e-12
        )
        # sup |1+z| = 2 on the boundary plus the H^2 norm of the derivative
        assert sup_sum_norm(ONE_PLUS_Z, params) == pytest.approx(3.0, abs=1e-9)

    def test_hardy_sum_known(self):
        assert hardy_sum(ONE_PLUS_Z) == pytest.approx(1.5, abs=1e-15)

    def test_monomial_norms(self):
        f = TaylorSeries([0.0, 0.0, 1.0])  # z^2
        for p in (1.0, 1.5, 2.0, 3.0, 4.0):
            assert hp_norm(f, p) == pytest.approx(1.0, abs=1e-12)
        assert sup_norm(f) == pytest.approx(1.0, abs=1e-12)


class TestQuadratureMachinery:
    def test_boundary_values_match_direct_evaluation(self):
        rng = np.random.default_rng(3)
        c = rng.uniform(-1, 1, 9) + 1j * rng.uniform(-1, 1, 9)
        f = TaylorSeries(c)
        m = 64
        vals = boundary_values(f, m)
        theta = 2.0 * math.pi * np.arange(m) / m
        direct = np.polyval(c[::-1], np.exp(1j * theta))
        assert np.max(np.abs(vals - direct)) < 1e-12

    def test_boundary_values_undersampling_rejected(self):
        f = TaylorSeries([1.0] * 10)
        with pytest.raises(ValueError):
            boundary_values(f, 8)

    def test_oversampling_floor_protects_small_configs(self):
        # the configured 4 points are silently raised to 4*(order+1)
        f = TaylorSeries([1.0] * 11)
        cfg = QuadratureConfig(num_points=4)
        assert hp_norm(f, 2.0, cfg) == pytest.approx(math.sqrt(11.0), abs=1e-12)

    def test_interior_radius_mean(self):
        f = TaylorSeries([3.0, 4.0])
        expected = math.sqrt(9.0 + 16.0 * 0.25)
        assert integral_mean(f, 2.0, 0.5) == pytest.approx(expected, abs=1e-12)

    def test_mode_validation(self):
        with pytest.raises(ValueError):
            QuadratureConfig(mode="fft")
        with pytest.raises(ValueError):
            integral_mean(ONE_PLUS_Z, 3.0, cfg=QuadratureConfig(mode="parseval"))
        with pytest.raises(ValueError):
            integral_mean(ONE_PLUS_Z, 3.0, cfg=QuadratureConfig(mode="power-trick"))

    def test_exponent_and_radius_validation(self):
        with pytest.raises(ValueError):
            integral_mean(ONE_PLUS_Z, 0.5)
        with pytest.raises(ValueError):
            integral_mean(ONE_PLUS_Z, math.inf)
        with pytest.raises(ValueError):
            integral_mean(ONE_PLUS_Z, 2.0, 1.5)
        with pytest.raises(ValueError):
            SpaceParams(-1, 2.0)
        with pytest.raises(ValueError):
            SpaceParams(1, 0.99)

    def test_trapezoid_agrees_with_parseval(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            deg = int(rng.integers(0, 40))
            f = TaylorSeries(rng.uniform(-1, 1, deg + 1) + 1j * rng.uniform(-1, 1, deg + 1))
            a = hp_norm(f, 2.0, QuadratureConfig(mode="trapezoid"))
            b = hp_norm(f, 2.0, QuadratureConfig(mode="parseval"))
            assert abs(a - b) <= 1e-12 * max(a, b, 1e-300)

    def test_power_mean_monotone_in_exponent(self):
        # on a fixed sample grid the discrete power mean is monotone in p
        rng = np.random.default_rng(12)
        cfg = QuadratureConfig(mode="trapezoid")
        for _ in range(10):
            f = TaylorSeries(rng.uniform(-1, 1, 12) + 1j * rng.uniform(-1, 1, 12))
            means = [integral_mean(f, p, 1.0, cfg) for p in (1.0, 2.0, 3.0, 4.0)]
            for lo, hi in zip(means, means[1:]):
                assert lo <= hi + 1e-12


class TestSpaceNorms:
    def test_zero_series_norms(self):
        z = zero()
        assert hp_norm(z, 3.0) == 0.0
        assert sn_norm(z, SpaceParams(3, 2.0)) == 0.0
        assert sup_norm(z) == 0.0
        assert boundary_scale(z) == 0.0

    def test_recursive_matches_unrolled(self):
        rng = np.random.default_rng(5)
        for _ in range(10):
            deg = int(rng.integers(0, 30))
            f = TaylorSeries(rng.uniform(-1, 1, deg + 1) + 1j * rng.uniform(-1, 1, deg + 1))
            n = int(rng.integers(1, 5))
            p = float(rng.choice([1.0, 1.5, 2.0, 3.0, 4.0]))
            a = sn_norm(f, SpaceParams(n, p))
            b = sn_norm_unrolled(f, SpaceParams(n, p))
            assert abs(a - b) <= 1e-12 * max(a, b, 1e-300)

    def test_n_zero_is_plain_hp(self):
        f = TaylorSeries([1.0, 2.0, 3.0])
        assert sn_norm(f, SpaceParams(0, 2.0)) == hp_norm(f, 2.0)

    def test_triangle_inequality_p2(self):
        rng = np.random.default_rng(8)
        for _ in range(10):
            f = TaylorSeries(rng.uniform(-1, 1, 9) + 1j * rng.uniform(-1, 1, 9))
            g = TaylorSeries(rng.uniform(-1, 1, 13) + 1j * rng.uniform(-1, 1, 13))
            params = SpaceParams(2, 2.0)
            lhs = sn_norm(f + g, params)
            assert lhs <= sn_norm(f, params) + sn_norm(g, params) + 1e-9

    def test_sup_norm_dominates_hp(self):
        rng = np.random.default_rng(9)
        for _ in range(10):
            f = TaylorSeries(rng.uniform(-1, 1, 17) + 1j * rng.uniform(-1, 1, 17))
            assert hp_norm(f, 3.0) <= sup_norm(f) + 1e-9

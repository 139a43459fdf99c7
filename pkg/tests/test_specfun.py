"""Special-function kernel vs independent high-precision oracles."""

import math

import mpmath as mp
import numpy as np
import pytest

from bgedist import specfun as sf

mp.mp.dps = 40


class TestLogBeta:
    def test_uniform(self):
        assert sf.log_beta(1.0, 1.0) == 0.0

    def test_small_integers(self):
        # B(2,3) = 1!2!/4! = 1/12
        assert sf.log_beta(2.0, 3.0) == pytest.approx(math.log(1.0 / 12.0), abs=1e-14)

    def test_extreme_shapes_vs_mpmath(self):
        # the shape pair from the glass-fibre benchmark
        want = float(mp.log(mp.beta(mp.mpf("0.4125"), mp.mpf("93.4655"))))
        assert sf.log_beta(0.4125, 93.4655) == pytest.approx(want, rel=1e-13)

    def test_wide_range_vs_mpmath(self):
        for a in (1e-3, 0.37, 5.5, 420.0, 1e6):
            for b in (1e-3, 2.25, 9000.0):
                want = float(mp.log(mp.beta(a, b)))
                assert sf.log_beta(a, b) == pytest.approx(want, rel=1e-13)

    def test_symmetry(self):
        rng = np.random.default_rng(1)
        for _ in range(200):
            a, b = rng.uniform(0.01, 50.0, size=2)
            assert sf.log_beta(a, b) == sf.log_beta(b, a)

    def test_domain(self):
        with pytest.raises(ValueError):
            sf.log_beta(0.0, 1.0)
        with pytest.raises(ValueError):
            sf.log_beta(1.0, -2.0)


class TestIncBetaRatio:
    def test_uniform_is_identity(self):
        assert sf.inc_beta_ratio(0.5, 1.0, 1.0) == pytest.approx(0.5, abs=1e-15)

    def test_b_one_closed_form(self):
        for y in (0.1, 0.37, 0.99):
            for a in (0.5, 2.0, 7.3):
                assert sf.inc_beta_ratio(y, a, 1.0) == pytest.approx(y ** a, abs=1e-13)

    def test_against_quadrature(self):
        # independent oracle: adaptive (tanh-sinh) quadrature of the
        # beta integrand at 40 digits
        y, a, b = 0.3, 2.5, 4.5
        dens = lambda t: t ** (a - 1) * (1 - t) ** (b - 1)
        want = float(mp.quad(dens, [0, y]) / mp.quad(dens, [0, 1]))
        assert sf.inc_beta_ratio(y, a, b) == pytest.approx(want, abs=1e-12)

    def test_endpoints(self):
        assert sf.inc_beta_ratio(0.0, 2.0, 3.0) == 0.0
        assert sf.inc_beta_ratio(1.0, 2.0, 3.0) == 1.0

    def test_complement_identity(self):
        rng = np.random.default_rng(2)
        for _ in range(300):
            y = rng.uniform(0.0, 1.0)
            a, b = rng.uniform(0.05, 40.0, size=2)
            s = sf.inc_beta_ratio(y, a, b) + sf.inc_beta_ratio(1.0 - y, b, a)
            assert s == pytest.approx(1.0, abs=1e-12)

    def test_monotone_in_y(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            a, b = rng.uniform(0.1, 20.0, size=2)
            ys = np.sort(rng.uniform(0, 1, size=8))
            vals = [sf.inc_beta_ratio(y, a, b) for y in ys]
            assert all(v2 >= v1 for v1, v2 in zip(vals, vals[1:]))

    def test_mpmath_spotchecks(self):
        for y, a, b in [(0.9, 0.4125, 93.4655), (1e-6, 3.0, 2.0), (0.999999, 2.0, 93.0)]:
            want = float(mp.betainc(a, b, 0, y, regularized=True))
            assert sf.inc_beta_ratio(y, a, b) == pytest.approx(want, abs=1e-12)

    def test_extreme_shapes(self):
        # symmetric-shape oracle: I_{1/2}(a, a) = 1/2 exactly
        assert sf.inc_beta_ratio(0.5, 1e4, 1e4) == pytest.approx(0.5, abs=1e-11)
        assert sf.inc_beta_ratio(0.5, 1e6, 1e6) == pytest.approx(0.5, abs=1e-9)
        y = sf.inc_beta_inverse(0.3, 1e6, 3.0)
        assert sf.inc_beta_ratio(y, 1e6, 3.0) == pytest.approx(0.3, abs=1e-10)


class TestIncBetaInverse:
    def test_trivial(self):
        assert sf.inc_beta_inverse(0.0, 2.0, 3.0) == 0.0
        assert sf.inc_beta_inverse(1.0, 2.0, 3.0) == 1.0
        assert sf.inc_beta_inverse(0.5, 1.0, 1.0) == pytest.approx(0.5, abs=1e-13)

    def test_against_bisection_oracle(self):
        p, a, b = 0.9, 2.0, 5.0
        lo, hi = 0.0, 1.0
        for _ in range(200):  # plain bisection on the forward ratio
            mid = 0.5 * (lo + hi)
            if sf.inc_beta_ratio(mid, a, b) < p:
                lo = mid
            else:
                hi = mid
        assert sf.inc_beta_inverse(p, a, b) == pytest.approx(0.5 * (lo + hi), abs=1e-12)

    def test_roundtrip_gridded(self):
        rng = np.random.default_rng(4)
        for _ in range(250):
            a, b = rng.uniform(0.05, 95.0, size=2)
            p = rng.uniform(1e-6, 1.0 - 1e-6)
            y = sf.inc_beta_inverse(p, a, b)
            assert sf.inc_beta_ratio(y, a, b) == pytest.approx(p, abs=1e-10)

    def test_inverse_of_forward_in_y(self):
        # identity in y-space requires the forward value to be resolvable:
        # where the density is ~0 or I_y rounds to 1.0, the y information
        # is destroyed by the forward map itself
        rng = np.random.default_rng(5)
        checked = 0
        for _ in range(400):
            a, b = rng.uniform(0.2, 30.0, size=2)
            y = rng.uniform(0.02, 0.98)
            p = sf.inc_beta_ratio(y, a, b)
            dens = math.exp((a - 1) * math.log(y) + (b - 1) * math.log1p(-y)
                            - sf.log_beta(a, b))
            if dens < 1e-6 or not (1e-300 < p < 1.0 - 1e-13):
                continue
            checked += 1
            back = sf.inc_beta_inverse(p, a, b)
            assert back == pytest.approx(y, abs=1e-9)
        assert checked > 200


class TestPolygamma:
    def test_known_constants(self):
        euler = 0.5772156649015329
        assert sf.digamma(1.0) == pytest.approx(-euler, abs=1e-12)
        assert sf.trigamma(1.0) == pytest.approx(math.pi ** 2 / 6.0, abs=1e-12)
        assert sf.tetragamma(1.0) == pytest.approx(-2.404113806319188, abs=1e-11)
        assert sf.polygamma(1.0, 3) == pytest.approx(math.pi ** 4 / 15.0, rel=1e-12)

    @pytest.mark.parametrize("order", [0, 1, 2, 3])
    def test_vs_mpmath_wide_range(self, order):
        for x in (1e-3, 0.2, 1.0, 5.7, 10.0, 123.4, 1e6):
            want = float(mp.polygamma(order, mp.mpf(x))) if order else float(mp.digamma(mp.mpf(x)))
            assert sf.polygamma(x, order) == pytest.approx(want, rel=1e-11)

    def test_recurrence(self):
        rng = np.random.default_rng(6)
        for _ in range(1000):
            x = rng.uniform(1e-3, 100.0)
            lhs = sf.digamma(x + 1.0)
            rhs = sf.digamma(x) + 1.0 / x
            assert lhs == pytest.approx(rhs, abs=1e-12 * max(1.0, abs(rhs)))

    def test_domain(self):
        with pytest.raises(ValueError):
            sf.polygamma(0.0, 0)
        with pytest.raises(ValueError):
            sf.polygamma(1.0, 4)


class TestRegGammaUpper:
    def test_endpoints(self):
        assert sf.reg_gamma_upper(2.5, 0.0) == 1.0

    def test_vs_mpmath(self):
        for s in (0.5, 1.0, 3.7, 31.5):
            for x in (0.1, 1.0, 5.0, 40.0):
                want = float(mp.gammainc(s, x, mp.inf, regularized=True))
                assert sf.reg_gamma_upper(s, x) == pytest.approx(want, rel=1e-12, abs=1e-300)

    def test_chi2_sf_known(self):
        # X ~ chi2_2 has sf(x) = exp(-x/2)
        assert sf.chi2_sf(3.0, 2) == pytest.approx(math.exp(-1.5), rel=1e-13)
        with pytest.raises(ValueError):
            sf.chi2_sf(1.0, 0)

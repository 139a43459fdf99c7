"""Acceptance gate: every stated criterion at its stated tolerance.

Each criterion records one PASS/FAIL line (printed in the terminal
summary via conftest).  Two checks encode published benchmark values
that are not stationary points of the likelihood and therefore cannot
be reproduced by a convergent optimizer; they are asserted faithfully
and fail, with the analysis in errata.json ("glass-fibre-published-
fits") and the decisions ledger.
"""

import math
import time

import numpy as np
import pytest
from scipy.integrate import quad

from bgedist import BGE
from bgedist import specfun as sf
from bgedist.cli import main as cli_main
from bgedist.datasets import glass_fibre_sample
from bgedist.inference import (fit_mle, information_matrix, lr_from_fits,
                               log_likelihood, mc_expected_information,
                               score_contributions)
from bgedist.order_stats import (MixtureTermBudget, OrderStatIndex,
                                 order_stat_pdf_direct, order_stat_pdf_mixture)
from bgedist.series import cdf_series, mgf, pdf_mixture, raw_moment, skewness_kurtosis

from conftest import ACCEPTANCE_RESULTS


def _record(name, ok, detail):
    ACCEPTANCE_RESULTS.append((name, bool(ok), detail))
    assert ok, f"{name}: {detail}"


@pytest.fixture(scope="module")
def glass_fits():
    data = glass_fibre_sample()
    out = {}
    for model in ("ge", "be", "bge"):
        t0 = time.perf_counter()
        out[model] = fit_mle(data, model)
        out[model + "_time"] = time.perf_counter() - t0
    return out


class TestGlassFibreReproduction:
    def test_ge_fit(self, glass_fits):
        fit, dt = glass_fits["ge"], glass_fits["ge_time"]
        ok = (abs(fit.params.lam - 2.6105) <= 0.01 * 2.6105
              and abs(fit.params.alpha - 31.3032) <= 0.01 * 31.3032
              and abs(fit.loglik - -31.3834) <= 0.02
              and dt < 1.0)
        _record("glass-fibre GE fit",
                ok, f"lam={fit.params.lam:.4f} alpha={fit.params.alpha:.4f} "
                    f"ll={fit.loglik:.4f} t={dt:.2f}s")

    def test_be_fit(self, glass_fits):
        # published values are an early-stopped iterate, not an optimum;
        # expected FAIL (errata.json "glass-fibre-published-fits")
        fit, dt = glass_fits["be"], glass_fits["be_time"]
        ok = (abs(fit.params.a - 17.7786) <= 0.02 * 17.7786
              and abs(fit.params.b - 22.7222) <= 0.02 * 22.7222
              and abs(fit.params.lam - 0.3898) <= 0.02 * 0.3898
              and abs(fit.loglik - -24.1270) <= 0.05
              and dt < 5.0)
        _record("glass-fibre BE fit (published point; see errata)",
                ok, f"a={fit.params.a:.4f} b={fit.params.b:.4f} "
                    f"lam={fit.params.lam:.4f} ll={fit.loglik:.4f} t={dt:.2f}s "
                    f"vs (17.7786, 22.7222, 0.3898, -24.1270)")

    def test_bge_fit(self, glass_fits):
        fit, dt = glass_fits["bge"], glass_fits["bge_time"]
        p = fit.params
        ll_ok = fit.loglik >= -15.6495 and abs(fit.loglik - -15.5995) <= 0.05
        ref = {"a": 0.4125, "b": 93.4655, "lam": 0.92271, "alpha": 22.6124}
        par_ok = all(abs(getattr(p, k) - v) <= 0.10 * v for k, v in ref.items())
        ok = ll_ok and dt < 30.0 and par_ok
        _record("glass-fibre BGE fit",
                ok, f"ll={fit.loglik:.4f} params=({p.a:.4f}, {p.b:.3f}, "
                    f"{p.lam:.4f}, {p.alpha:.3f}) within 10% of published, t={dt:.2f}s"
                    + ("" if par_ok else " [parameter drift]"))

    def test_lr_ge_vs_bge(self, glass_fits):
        lr = lr_from_fits(glass_fits["ge"], glass_fits["bge"])
        ok = (abs(lr.statistic - 31.5678) <= 0.1
              and 1.39e-7 / 2 <= lr.p_value <= 1.39e-7 * 2)
        _record("glass-fibre LR GE vs BGE",
                ok, f"w={lr.statistic:.4f} p={lr.p_value:.3g}")

    def test_lr_be_vs_bge(self, glass_fits):
        # inherits the BE early stop; the statistic window is expected
        # to FAIL while the factor-2 p-value criterion passes
        lr = lr_from_fits(glass_fits["be"], glass_fits["bge"])
        p_ok = 3.63e-5 / 2 <= lr.p_value <= 3.63e-5 * 2
        ok = abs(lr.statistic - 17.0550) <= 0.1 and p_ok
        _record("glass-fibre LR BE vs BGE (published statistic; see errata)",
                ok, f"w={lr.statistic:.4f} vs 17.0550+-0.1, p={lr.p_value:.3g} "
                    f"(p factor-2 check: {'pass' if p_ok else 'fail'})")

    def test_published_loglik_at_published_point(self):
        # direct evaluation (no optimization): the likelihood itself is
        # the published one
        d = BGE(0.4125, 93.4655, 0.92271, 22.6124)
        ll = log_likelihood(d, glass_fibre_sample())
        _record("glass-fibre published-point log-likelihood",
                abs(ll - -15.5995) <= 0.01, f"ll={ll:.6f} vs -15.5995")


class TestSeriesValidation:
    def test_series_agreement_and_mgf_identity(self, parameter_grid):
        t0 = time.perf_counter()
        xs = np.geomspace(0.05, 6.0, 10)
        worst_cdf = worst_pdf = 0.0
        for d in parameter_grid:
            for x in xs:
                x = float(x)
                worst_cdf = max(worst_cdf, abs(cdf_series(d, x) - d.cdf(x)))
                worst_pdf = max(worst_pdf, abs(pdf_mixture(d, x) - d.pdf(x)))
        rng = np.random.default_rng(314)
        worst_mgf = 0.0
        for _ in range(20):
            a = float(rng.uniform(0.5, 5.0))
            b = float(rng.uniform(1.2, 9.0))
            if abs(b - round(b)) < 0.05:
                b += 0.1
            t = float(rng.uniform(0.05, min(0.95, b - 0.2)))
            lhs = mgf(BGE.be(a, b, 1.0), t)
            rhs = math.exp(sf.log_beta(b - t, a) - sf.log_beta(a, b))
            worst_mgf = max(worst_mgf, abs(lhs - rhs))
        dt = time.perf_counter() - t0
        ok = worst_cdf <= 1e-8 and worst_pdf <= 1e-8 and worst_mgf <= 1e-9 and dt < 30.0
        _record("series validation suite",
                ok, f"cdf err {worst_cdf:.2g}, pdf err {worst_pdf:.2g}, "
                    f"mgf identity err {worst_mgf:.2g}, t={dt:.1f}s")


class TestMomentOracle:
    INTEGER_B = [(2.0, 3.0, 1.0, 1.0), (1.0, 2.0, 0.5, 2.0), (0.7, 1.0, 1.0, 1.3),
                 (2.5, 4.0, 2.0, 0.8), (1.5, 2.0, 1.0, 1.0), (3.0, 1.0, 0.7, 1.5),
                 (0.5, 5.0, 1.0, 1.0), (2.0, 2.0, 1.5, 2.5), (1.2, 3.0, 1.0, 0.6),
                 (4.0, 2.0, 0.9, 1.0)]
    REAL_B = [(2.0, 1.5, 1.0, 2.0), (1.3, 2.6, 0.8, 1.1), (0.9, 1.4, 1.2, 0.7),
              (2.5, 6.5, 0.5, 3.0), (1.0, 3.3, 1.0, 1.0), (3.0, 2.2, 1.5, 0.9),
              (0.6, 4.7, 1.0, 1.8), (2.2, 1.8, 2.0, 1.2), (1.7, 5.5, 0.7, 1.0),
              (1.1, 2.9, 1.3, 2.1)]

    @staticmethod
    def quad_moment(dist, r):
        k = 1.0 / (dist.alpha * dist.a)
        q = dist.quantile(0.3)
        left = quad(lambda s: (q * s ** k) ** r * dist.pdf(q * s ** k)
                    * q * k * s ** (k - 1.0), 0.0, 1.0, limit=400)[0]
        right = quad(lambda x: x ** r * dist.pdf(x), q, np.inf, limit=400)[0]
        return left + right

    def test_moments_match_quadrature(self):
        worst = 0.0
        for params in self.INTEGER_B + self.REAL_B:
            d = BGE(*params)
            for r in (1, 2, 3, 4):
                want = self.quad_moment(d, r)
                rel = abs(raw_moment(d, r) - want) / want
                worst = max(worst, rel)
        _record("moment oracle suite (10 points per b-branch, r=1..4)",
                worst <= 1e-6, f"worst rel err {worst:.2g}")

    def test_exponential_exact(self):
        d = BGE.exponential(1.7)
        skew, kurt = skewness_kurtosis(d)
        ok = (abs(raw_moment(d, 1) - 1.0 / 1.7) <= 1e-9
              and abs(skew - 2.0) <= 1e-9 and abs(kurt - 9.0) <= 1e-9)
        _record("exponential sub-model (mean, skew, kurt) = (1/lam, 2, 9)",
                ok, f"mean={raw_moment(d, 1):.12f} skew={skew:.12f} kurt={kurt:.12f}")


class TestInferenceSuite:
    def test_score_vs_finite_differences(self):
        rng = np.random.default_rng(271)
        worst = 0.0
        for _ in range(100):
            d = BGE(*rng.uniform(0.4, 3.0, size=4))
            data = d.sample(20, rng)
            contrib = score_contributions(d, data).sum(axis=0)
            theta = np.array(d.params_tuple())
            fd = np.empty(4)
            for i in range(4):
                h = 1e-6 * theta[i]
                tp, tm = theta.copy(), theta.copy()
                tp[i] += h
                tm[i] -= h
                fd[i] = (log_likelihood(BGE(*tp), data)
                         - log_likelihood(BGE(*tm), data)) / (2 * h)
            scale = max(1.0, float(np.max(np.abs(contrib))))
            worst = max(worst, float(np.max(np.abs(contrib - fd))) / scale)
        _record("analytic score vs finite differences (100 cases)",
                worst <= 1e-5, f"worst scaled err {worst:.2g}")

    def test_information_vs_mc_hessian(self):
        points = [BGE(2.0, 3.0, 1.0, 1.5), BGE(0.8, 2.5, 2.0, 1.0),
                  BGE(1.5, 4.0, 0.7, 2.5), BGE(3.0, 3.0, 1.2, 0.8),
                  BGE(1.0, 2.2, 1.0, 1.0)]
        worst_z = 0.0
        for i, d in enumerate(points):
            K = information_matrix(d).matrix
            est, se = mc_expected_information(d, 300_000, np.random.default_rng(500 + i))
            z = np.abs(K - est) / (se + 1e-8 / 3.0)
            worst_z = max(worst_z, float(z.max()))
        _record("information matrix vs MC expected negative Hessian (5 points)",
                worst_z <= 3.0, f"worst |z| {worst_z:.2f}")

    def test_expected_score_identities(self):
        points = [BGE(2.0, 3.0, 1.0, 1.5), BGE(0.8, 2.0, 2.0, 1.0), BGE(1.5, 4.5, 0.7, 2.5)]
        worst_sigma = 0.0
        for i, d in enumerate(points):
            y = d.sample(1_000_000, np.random.default_rng(600 + i)).values
            logu = np.log(-np.expm1(-d.lam * y))
            log1mua = np.log(-np.expm1(d.alpha * logu))
            ratio = np.exp(d.alpha * logu - log1mua)
            psi = sf.digamma
            for vals, want in [
                (logu, (psi(d.a) - psi(d.a + d.b)) / d.alpha),
                (log1mua, psi(d.b) - psi(d.a + d.b)),
                (ratio * logu,
                 (d.a * (psi(d.a) - psi(d.a + d.b)) + 1.0) / (d.alpha * (d.b - 1.0))),
            ]:
                se = vals.std(ddof=1) / math.sqrt(vals.size)
                worst_sigma = max(worst_sigma, abs(vals.mean() - want) / se)
        _record("expected-score identities (3 points, b > 1.5, 4-sigma)",
                worst_sigma <= 4.0, f"worst |z| {worst_sigma:.2f}")


class TestOrderStatisticsSuite:
    def test_direct_normalization_and_completeness(self):
        d = BGE(1.5, 2.0, 1.0, 1.2)
        worst_norm = 0.0
        for n in range(1, 6):
            for i in range(1, n + 1):
                idx = OrderStatIndex(i, n)
                k = 1.0 / (d.alpha * d.a * i)
                q = d.quantile(0.5)
                left = quad(lambda s: order_stat_pdf_direct(d, idx, q * s ** k)
                            * q * k * s ** (k - 1.0), 0.0, 1.0, limit=300)[0]
                right = quad(lambda x: order_stat_pdf_direct(d, idx, x),
                             q, np.inf, limit=300)[0]
                worst_norm = max(worst_norm, abs(left + right - 1.0))
        rng = np.random.default_rng(700)
        worst_comp = 0.0
        for n in range(1, 6):
            for x in rng.uniform(0.05, 4.0, size=5):
                x = float(x)
                s = sum(order_stat_pdf_direct(d, OrderStatIndex(i, n), x)
                        for i in range(1, n + 1)) / n
                worst_comp = max(worst_comp, abs(s - d.pdf(x)))
        ok = worst_norm <= 1e-7 and worst_comp <= 1e-10
        _record("order statistics: normalization and completeness (n <= 5)",
                ok, f"norm err {worst_norm:.2g}, completeness err {worst_comp:.2g}")

    def test_mixture_reconciliation(self):
        # the adjudicated ("shifted") reading agrees with the direct
        # density; the report is emitted by tests/test_order_stats.py
        budget = MixtureTermBudget(per_index_cap=60, total_term_cap=500_000)
        cases = [(BGE(1.0, 2.0, 1.0, 1.0), 1, 2, 0.5),
                 (BGE(1.7, 3.0, 1.2, 1.4), 2, 3, 0.9),
                 (BGE(1.5, 2.5, 1.0, 1.2), 2, 3, 1.0),
                 (BGE(0.9, 1.8, 1.4, 0.8), 1, 3, 0.6)]
        worst = 0.0
        for d, i, n, x in cases:
            idx = OrderStatIndex(i, n)
            direct = order_stat_pdf_direct(d, idx, x)
            got = order_stat_pdf_mixture(d, idx, x, budget=budget, reading="shifted")
            worst = max(worst, abs(got - direct) / direct)
        _record("order statistics: mixture reconciliation (validated reading)",
                worst <= 1e-4, f"worst rel err {worst:.2g} (reading='shifted')")


class TestSamplerSuite:
    POINTS = [BGE(2.0, 1.5, 1.0, 2.0), BGE(0.5, 1.0, 1.0, 0.5),
              BGE(1.0, 3.0, 2.0, 1.0), BGE(3.0, 2.0, 0.5, 1.5),
              BGE(0.8, 0.8, 1.0, 1.2)]

    def test_ks_at_five_points(self):
        n = 100_000
        crit = 1.63 / math.sqrt(n)  # 1% level
        worst = 0.0
        for i, d in enumerate(self.POINTS):
            draws = np.sort(d.sample(n, np.random.default_rng(4242 + i)).values)
            probs = np.array([d.cdf(float(x)) for x in draws])
            grid = np.arange(n)
            stat = float(np.max(np.maximum(probs - grid / n, (grid + 1) / n - probs)))
            worst = max(worst, stat)
        _record("sampler KS at 1% level (5 points, 1e5 draws)",
                worst < crit, f"worst KS {worst:.5f} vs critical {crit:.5f}")

    def test_seeded_determinism(self):
        import io

        argv = ["sample", "--params", "2,3,1.5,0.8", "--n", "1000", "--seed", "31415"]
        out1, out2 = io.StringIO(), io.StringIO()
        assert cli_main(list(argv), out=out1) == 0
        assert cli_main(list(argv), out=out2) == 0
        _record("sampler seeded determinism (byte-exact)",
                out1.getvalue() == out2.getvalue(),
                f"{len(out1.getvalue())} bytes identical")

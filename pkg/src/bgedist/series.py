"""Series expansions: cdf and density mixtures, mgf, moments, entropy.

Every series here comes in two flavours, dispatched on whether the
shape parameter ``b`` is (numerically) a positive integer: the integer
branch is a finite binomial sum, the real branch an infinite series
whose coefficients involve the gamma function at descending, eventually
negative, arguments.  The reciprocal gamma values are computed through
``lgamma`` of the absolute argument with explicit sign tracking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

from . import specfun
from .distribution import BGE, log1mexp

__all__ = [
    "SeriesControl",
    "SeriesEval",
    "SeriesConvergenceError",
    "MomentSet",
    "DEFAULT_CONTROL",
    "cdf_series",
    "closed_form_cdf_integer",
    "pdf_mixture",
    "mgf",
    "raw_moment",
    "moment_set",
    "skewness_kurtosis",
    "shannon_entropy",
    "ge_raw_moment",
]


class SeriesConvergenceError(RuntimeError):
    """Raised when a series hits its term cap before meeting tolerance."""

    def __init__(self, message: str, partial: float, terms: int):
        super().__init__(message)
        self.partial = partial
        self.terms = terms


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for the infinite expansions.

    ``term_tol`` is an absolute tolerance on individual terms; a series
    stops once three consecutive terms fall below it (the coefficients
    are non-monotone while the summation index is below b, so a single
    small term is not evidence of convergence).  ``integer_b_eps``
    decides when b is treated as an exact integer and the finite
    binomial branch is taken.
    """

    max_terms: int = 100_000
    term_tol: float = 1e-12
    integer_b_eps: float = 1e-9

    def __post_init__(self):
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")
        if not (self.term_tol > 0.0):
            raise ValueError("term_tol must be positive")
        if not (self.integer_b_eps > 0.0):
            raise ValueError("integer_b_eps must be positive")

    def integer_b(self, b: float) -> int | None:
        """Round b to an integer if within tolerance, else None."""
        r = round(b)
        if r >= 1 and abs(b - r) <= self.integer_b_eps:
            return int(r)
        return None


DEFAULT_CONTROL = SeriesControl()


class SeriesEval(NamedTuple):
    value: float
    error_bound: float
    terms: int


def _recip_gamma_sign(z: float) -> float:
    """Sign of 1/Gamma(z) (equals sign of Gamma(z); zero never occurs
    for the non-integer arguments this module produces)."""
    if z > 0.0:
        return 1.0
    return 1.0 if math.floor(z) % 2 == 0 else -1.0


def _cancellation_guard(total: float, peak: float, what: str) -> None:
    """The alternating phase of these sums peaks at ~2^b, so in doubles
    the result carries ~peak*eps of noise; refuse to return a value
    with fewer than ~6 significant digits."""
    if peak > 0.0 and peak * 2e-16 >= 1e-6 * abs(total):
        raise SeriesConvergenceError(
            f"{what}: catastrophic cancellation (peak term {peak:.3g} vs sum "
            f"{total:.3g}); the expansion is not evaluable in double precision "
            f"at these parameters", partial=total, terms=0)


def _sum_real_b(b: float,
                log_payload: Callable[[float], float],
                ctl: SeriesControl,
                log_prefactor: float,
                what: str) -> SeriesEval:
    """Sum_{j>=0} (-1)^j payload(j) / (Gamma(b-j) j!) times a prefactor.

    ``log_payload(j)`` returns the log of the (positive) j-th payload
    (-inf for a vanishing term) and must accept real arguments.  Terms
    alternate against the sign of 1/Gamma(b-j); once j exceeds b the
    sign is constant.  Two exits:

    * three consecutive sub-tolerance terms (fast geometric decay);
    * once the tail is one-signed and locally flat, the remainder is a
      smooth power-decay sequence whose sum is taken by the midpoint
      (Euler-Maclaurin) integral of the continuous term extension
      |term(x)| = prefactor * payload(x) * Gamma(x+1-b) |sin(pi b)| /
      (pi Gamma(x+1)); this handles the slowly converging small-b case.
    """
    log_sin = math.log(abs(math.sin(math.pi * b))) - math.log(math.pi)

    def cont_mag(x: float) -> float:
        lp = log_payload(x)
        if lp == -math.inf:
            return 0.0
        # lgamma(x+1-b) - lgamma(x+1) via the stable difference: the
        # direct subtraction is pure roundoff once x is huge
        lmag = log_prefactor + lp + log_sin - specfun.lgamma_diff(x + 1.0 - b, b)
        return math.exp(lmag) if lmag < 700.0 else math.inf

    total = 0.0
    small_run = 0
    peak = 0.0
    j_min = min(int(math.ceil(b)) + 3, ctl.max_terms)
    mags: list = []
    last_signs = [0.0, 0.0, 0.0]
    for j in range(ctl.max_terms):
        lp = log_payload(j)
        if lp == -math.inf:
            term = 0.0
        else:
            # math.lgamma(z) is log|Gamma(z)| for negative non-integer z
            lmag = log_prefactor + lp - math.lgamma(b - j) - math.lgamma(j + 1)
            sign = (1.0 if j % 2 == 0 else -1.0) * _recip_gamma_sign(b - j)
            term = sign * math.exp(lmag)
        total += term
        peak = max(peak, abs(term))
        mags.append(abs(term))
        last_signs = [last_signs[1], last_signs[2],
                      math.copysign(1.0, term) if term != 0.0 else 0.0]
        if abs(term) < ctl.term_tol:
            small_run += 1
        else:
            small_run = 0
        if j + 1 < j_min:
            continue
        if small_run >= 3:
            _cancellation_guard(total, peak, what)
            alternating = (last_signs[0] * last_signs[1] < 0
                           and last_signs[1] * last_signs[2] < 0
                           and mags[-3] >= mags[-2] >= mags[-1])
            bound = mags[-1] if alternating else sum(mags[-3:])
            # cancellation against the peak term caps the achievable
            # accuracy in doubles regardless of truncation
            return SeriesEval(total, bound + peak * 1e-15 + ctl.term_tol, j + 1)
        if (j >= 128 and j % 32 == 0 and j > b + 10
                and last_signs[0] == last_signs[1] == last_signs[2] != 0.0
                and mags[j - 8] > mags[j] > 0.0):
            # midpoint-rule remainder for the one-signed tail is
            # |g'(X0)|/24 ~ d * t_j / 24 with d the local log-slope
            d = math.log(mags[j - 8] / mags[j]) / 8.0
            est_err = d * mags[j] / 8.0
            ok_tol = max(50.0 * ctl.term_tol, 1e-10 * abs(total))
            if d < 0.05 and est_err < ok_tol:
                import warnings

                from scipy.integrate import IntegrationWarning, quad

                x0 = j + 0.5

                def tail_integrand(w: float) -> float:
                    # log substitution x = x0 e^w compresses both the
                    # polynomial and slow-geometric tail scales
                    if w > 600.0:
                        return 0.0
                    x = x0 * math.exp(w)
                    return cont_mag(x) * x

                with warnings.catch_warnings():
                    warnings.simplefilter("ignore", IntegrationWarning)
                    tail, _ = quad(tail_integrand, 0.0, math.inf,
                                   epsabs=ctl.term_tol, epsrel=1e-9, limit=200)
                total += last_signs[2] * tail
                _cancellation_guard(total, peak, what)
                return SeriesEval(total, est_err + 1e-9 * tail + peak * 1e-15
                                  + ctl.term_tol, j + 1)
    raise SeriesConvergenceError(
        f"{what}: series did not meet term_tol={ctl.term_tol} within {ctl.max_terms} terms",
        partial=total, terms=ctl.max_terms)


def _sum_integer_b(b_int: int,
                   log_payload: Callable[[int], float],
                   log_prefactor: float) -> SeriesEval:
    """Finite binomial counterpart: sum_{j=0}^{b-1} C(b-1,j)(-1)^j payload(j)."""
    total = 0.0
    peak = 0.0
    for j in range(b_int):
        lp = log_payload(j)
        if lp == -math.inf:
            continue
        lmag = log_prefactor + lp + math.log(math.comb(b_int - 1, j))
        term = (1.0 if j % 2 == 0 else -1.0) * math.exp(lmag)
        total += term
        peak = max(peak, abs(term))
    _cancellation_guard(total, peak, "integer-b sum")
    return SeriesEval(total, peak * 1e-15, b_int)


def cdf_series(dist: BGE, x: float, ctl: SeriesControl = DEFAULT_CONTROL,
               full_output: bool = False):
    """Distribution function by its expansion into weighted GE cdfs.

    Dispatches on integer vs real non-integer b per ``ctl``.  Returns
    the truncated sum; with ``full_output=True`` returns a
    ``SeriesEval`` carrying the truncation-error bound and term count.
    """
    if x < 0.0:
        raise ValueError(f"cdf_series requires x >= 0, got {x}")
    a, b, alpha = dist.a, dist.b, dist.alpha
    if x == 0.0:
        out = SeriesEval(0.0, 0.0, 0)
        return out if full_output else 0.0
    logu = log1mexp(dist.lam * x)

    def payload(j: int) -> float:
        return alpha * (a + j) * logu - math.log(a + j)

    b_int = ctl.integer_b(b)
    if b_int is not None:
        res = _sum_integer_b(b_int, payload, -specfun.log_beta(a, b_int))
    else:
        pref = math.lgamma(a + b) - math.lgamma(a)
        res = _sum_real_b(b, payload, ctl, pref, "cdf_series")
    value = min(max(res.value, 0.0), 1.0)
    res = SeriesEval(value, res.error_bound, res.terms)
    return res if full_output else res.value


def closed_form_cdf_integer(dist: BGE, x: float, which: str) -> float:
    """Finite closed forms of the cdf for integer a or integer b.

    ``which`` selects the branch: "integer_a" requires a to be a
    positive integer, "integer_b" requires b to be one.
    """
    if which not in ("integer_a", "integer_b"):
        raise ValueError(f"which must be 'integer_a' or 'integer_b', got {which!r}")
    if x <= 0.0:
        return 0.0
    a, b, alpha = dist.a, dist.b, dist.alpha
    logu = log1mexp(dist.lam * x)
    log1mua = log1mexp(-alpha * logu)

    if which == "integer_a":
        n = round(a)
        if n < 1 or abs(a - n) > 1e-9:
            raise ValueError(f"integer_a form requires integral a, got {a}")
        # 1 - (1-u^alpha)^b / Gamma(b) * sum Gamma(b+j)/j! u^(alpha j)
        logs = [math.lgamma(b + j) - math.lgamma(j + 1) + alpha * j * logu
                for j in range(n)]
        lmax = max(logs)
        s = sum(math.exp(l - lmax) for l in logs)
        return 1.0 - math.exp(b * log1mua - math.lgamma(b) + lmax + math.log(s))

    n = round(b)
    if n < 1 or abs(b - n) > 1e-9:
        raise ValueError(f"integer_b form requires integral b, got {b}")
    # u^(a alpha) / Gamma(a) * sum Gamma(a+j)/j! (1-u^alpha)^j
    logs = [math.lgamma(a + j) - math.lgamma(j + 1) + j * log1mua for j in range(n)]
    lmax = max(logs)
    s = sum(math.exp(l - lmax) for l in logs)
    return math.exp(a * alpha * logu - math.lgamma(a) + lmax + math.log(s))


def pdf_mixture(dist: BGE, x: float, ctl: SeriesControl = DEFAULT_CONTROL,
                full_output: bool = False):
    """Density through the expansion of (1-u^alpha)^(b-1) in powers of u^alpha."""
    if x <= 0.0:
        raise ValueError(f"pdf_mixture requires x > 0, got {x}")
    a, b, lam, alpha = dist.a, dist.b, dist.lam, dist.alpha
    logu = log1mexp(lam * x)
    base = (math.log(alpha) + math.log(lam) - specfun.log_beta(a, b)
            - lam * x + (a * alpha - 1.0) * logu)

    def payload(j: int) -> float:
        return alpha * j * logu

    b_int = ctl.integer_b(b)
    if b_int is not None:
        res = _sum_integer_b(b_int, payload, base)
    else:
        res = _sum_real_b(b, payload, ctl, base + math.lgamma(b), "pdf_mixture")
    value = max(res.value, 0.0)
    res = SeriesEval(value, res.error_bound, res.terms)
    return res if full_output else res.value


def mgf(dist: BGE, t: float, ctl: SeriesControl = DEFAULT_CONTROL,
        full_output: bool = False):
    """Moment generating function M(t) for t < lam.

    Expands into beta-function terms B(1 - t/lam, alpha*(a+j)).  The
    real-b series converges only while t/lam < b; outside that region
    (and whenever the cap is reached) a ``SeriesConvergenceError`` is
    raised.
    """
    a, b, lam, alpha = dist.a, dist.b, dist.lam, dist.alpha
    if not (t < lam):
        raise ValueError(f"mgf requires t < lam = {lam}, got t = {t}")
    p = 1.0 - t / lam

    def payload(j: int) -> float:
        return specfun.log_beta(p, alpha * (a + j))

    b_int = ctl.integer_b(b)
    if b_int is not None:
        res = _sum_integer_b(b_int, payload,
                             math.log(alpha) - specfun.log_beta(a, b_int))
    else:
        pref = math.log(alpha) + math.lgamma(b) - specfun.log_beta(a, b)
        res = _sum_real_b(b, payload, ctl, pref, "mgf")
    return res if full_output else res.value


# -- moments -------------------------------------------------------------------


def ge_raw_moment(theta: float, r: int) -> float:
    """r-th raw moment (r in 1..4) of a unit-rate GE(theta) component.

    Built from polygamma differences at theta+1 and 1; these are the
    per-term quantities entering the four-moment series.
    """
    if r not in (1, 2, 3, 4):
        raise ValueError(f"ge_raw_moment supports r in 1..4, got {r}")
    c = specfun.digamma(theta + 1.0) - specfun.digamma(1.0)
    if r == 1:
        return c
    p = specfun.trigamma(1.0) - specfun.trigamma(theta + 1.0)
    if r == 2:
        return c * c + p
    q = specfun.tetragamma(theta + 1.0) - specfun.tetragamma(1.0)
    if r == 3:
        return c ** 3 + 3.0 * p * c + q
    rr = specfun.polygamma(1.0, 3) - specfun.polygamma(theta + 1.0, 3)
    return c ** 4 + 6.0 * p * c * c + 3.0 * p * p + 4.0 * q * c + rr


def raw_moment(dist: BGE, r: int, ctl: SeriesControl = DEFAULT_CONTROL) -> float:
    """r-th raw moment, r in 1..4, via the weighted-GE-moment series."""
    if r not in (1, 2, 3, 4):
        raise ValueError(f"raw_moment supports r in 1..4, got {r}")
    a, b, lam, alpha = dist.a, dist.b, dist.lam, dist.alpha

    def payload(j: int) -> float:
        m = ge_raw_moment(alpha * (a + j), r)
        return math.log(m) - math.log(a + j)

    b_int = ctl.integer_b(b)
    if b_int is not None:
        res = _sum_integer_b(b_int, payload, -specfun.log_beta(a, b_int))
    else:
        pref = math.lgamma(a + b) - math.lgamma(a)
        res = _sum_real_b(b, payload, ctl, pref, f"raw_moment(r={r})")
    return res.value / lam ** r


@dataclass(frozen=True)
class MomentSet:
    """First four raw moments with derived central quantities."""

    mu1: float
    mu2: float
    mu3: float
    mu4: float
    variance: float
    skewness: float
    kurtosis: float


def moment_set(dist: BGE, ctl: SeriesControl = DEFAULT_CONTROL) -> MomentSet:
    mu1 = raw_moment(dist, 1, ctl)
    mu2 = raw_moment(dist, 2, ctl)
    mu3 = raw_moment(dist, 3, ctl)
    mu4 = raw_moment(dist, 4, ctl)
    var = mu2 - mu1 * mu1
    if var <= 0.0:
        raise SeriesConvergenceError(
            f"moment series produced non-positive variance {var}", var, 0)
    m3 = mu3 - 3.0 * mu1 * mu2 + 2.0 * mu1 ** 3
    m4 = mu4 - 4.0 * mu1 * mu3 + 6.0 * mu1 ** 2 * mu2 - 3.0 * mu1 ** 4
    return MomentSet(mu1, mu2, mu3, mu4, var,
                     m3 / var ** 1.5, m4 / (var * var))


def skewness_kurtosis(dist: BGE, ctl: SeriesControl = DEFAULT_CONTROL) -> tuple:
    """Standardized third moment and (raw, non-excess) fourth moment."""
    ms = moment_set(dist, ctl)
    return (ms.skewness, ms.kurtosis)


def shannon_entropy(dist: BGE, ctl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Differential entropy E[-log f(X)]."""
    a, b, lam, alpha = dist.a, dist.b, dist.lam, dist.alpha
    mu1 = raw_moment(dist, 1, ctl)
    psi = specfun.digamma
    return (-math.log(alpha * lam) + specfun.log_beta(a, b) + lam * mu1
            + (1.0 / alpha - a) * (psi(a) - psi(a + b))
            - (b - 1.0) * (psi(b) - psi(a + b)))

"""The four-parameter beta generalized exponential distribution.

The family composes the exponentiated-exponential cdf
``G(x) = (1 - exp(-lam*x))**alpha`` with a Beta(a, b) cdf, giving

    F(x) = I_{G(x)}(a, b),

where ``I`` is the regularized incomplete beta ratio.  Instances are
immutable value objects and safe to share between threads; sampling
mutates only the caller-supplied generator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import specfun

__all__ = ["BGE", "Sample", "log1mexp"]


def log1mexp(z):
    """log(1 - exp(-z)) for z > 0, stable at both ends.

    Accepts scalars or arrays.  Uses log(-expm1(-z)) below log 2 and
    log1p(-exp(-z)) above, the classical accuracy switch.
    """
    z = np.asarray(z, dtype=float)
    small = z < 0.6931471805599453
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(small, np.log(-np.expm1(-z)), np.log1p(-np.exp(-z)))
    if out.ndim == 0:
        return float(out)
    return out


@dataclass(frozen=True)
class Sample:
    """A validated vector of strictly positive observations."""

    values: np.ndarray
    label: str = ""

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        if vals.ndim != 1 or vals.size < 1:
            raise ValueError("Sample requires a nonempty 1-d vector of observations")
        if not np.all(np.isfinite(vals)) or np.any(vals <= 0.0):
            bad = int(np.argmax(~(np.isfinite(vals) & (vals > 0.0))))
            raise ValueError(f"Sample values must be positive and finite (index {bad}: {vals[bad]})")
        vals = vals.copy()
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return self.values.size


@dataclass(frozen=True)
class BGE:
    """BGE(a, b, lam, alpha) distribution on (0, inf).

    Parameters
    ----------
    a, b : float
        Beta shape parameters (> 0).
    lam : float
        Rate parameter (> 0), reciprocal of the data scale.
    alpha : float
        Exponentiation shape (> 0).

    Notes
    -----
    Sub-models: ``a = b = 1`` is the exponentiated (generalized)
    exponential, ``alpha = 1`` the beta exponential, ``a = 1`` the
    double generalized exponential and ``a = b = alpha = 1`` the plain
    exponential.
    """

    a: float
    b: float
    lam: float
    alpha: float

    def __post_init__(self):
        for name, v in (("a", self.a), ("b", self.b), ("lam", self.lam), ("alpha", self.alpha)):
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0.0):
                raise ValueError(f"BGE parameter {name} must be positive and finite, got {v}")
            object.__setattr__(self, name, float(v))

    # -- sub-model constructors and predicates --------------------------------

    @classmethod
    def ge(cls, lam: float, alpha: float) -> "BGE":
        """Generalized (exponentiated) exponential: a = b = 1."""
        return cls(1.0, 1.0, lam, alpha)

    @classmethod
    def be(cls, a: float, b: float, lam: float) -> "BGE":
        """Beta exponential: alpha = 1."""
        return cls(a, b, lam, 1.0)

    @classmethod
    def dge(cls, b: float, lam: float, alpha: float) -> "BGE":
        """Double generalized exponential: a = 1."""
        return cls(1.0, b, lam, alpha)

    @classmethod
    def exponential(cls, lam: float) -> "BGE":
        return cls(1.0, 1.0, lam, 1.0)

    @property
    def is_ge(self) -> bool:
        return self.a == 1.0 and self.b == 1.0

    @property
    def is_be(self) -> bool:
        return self.alpha == 1.0

    @property
    def is_dge(self) -> bool:
        return self.a == 1.0

    @property
    def is_exponential(self) -> bool:
        return self.is_ge and self.is_be

    @property
    def log_beta_ab(self) -> float:
        return specfun.log_beta(self.a, self.b)

    # -- internal stable pieces ------------------------------------------------

    def _log_u(self, x):
        """log u with u = 1 - exp(-lam*x), kept strictly negative even
        when u rounds to 1 so downstream powers of 1 - u^alpha stay
        finite."""
        out = log1mexp(self.lam * np.asarray(x, dtype=float))
        return np.minimum(out, -1e-300)

    def logpdf(self, x) -> float:
        """Log density at x > 0 (vectorized)."""
        x = np.asarray(x, dtype=float)
        if np.any(x <= 0.0):
            raise ValueError("logpdf requires x > 0")
        logu = self._log_u(x)
        log1mua = log1mexp(-self.alpha * logu)
        out = (math.log(self.alpha) + math.log(self.lam) - self.log_beta_ab
               - self.lam * x
               + (self.alpha * self.a - 1.0) * logu
               + (self.b - 1.0) * log1mua)
        if out.ndim == 0:
            return float(out)
        return out

    # -- public surface --------------------------------------------------------

    def pdf(self, x: float) -> float:
        """Density at x.

        At the origin the density is defined by its limit: 0 when
        alpha*a > 1, alpha*lam/B(a, b) when alpha*a == 1, and +inf
        (an explicit unbounded marker) when alpha*a < 1.
        """
        if x < 0.0:
            raise ValueError(f"pdf requires x >= 0, got {x}")
        if x == 0.0:
            aa = self.alpha * self.a
            if aa > 1.0:
                return 0.0
            if aa == 1.0:
                return self.alpha * self.lam * math.exp(-self.log_beta_ab)
            return math.inf
        return math.exp(self.logpdf(x))

    def cdf(self, x: float) -> float:
        """Distribution function; 0 for x <= 0."""
        if x <= 0.0:
            return 0.0
        if x == math.inf:
            return 1.0
        galpha = math.exp(self.alpha * self._log_u(x))
        return specfun.inc_beta_ratio(galpha, self.a, self.b)

    def survival(self, x: float) -> float:
        """Survival function, computed through the complementary beta
        ratio rather than as 1 - cdf, for tail accuracy."""
        if x <= 0.0:
            return 1.0
        if x == math.inf:
            return 0.0
        # 1 - u^alpha, evaluated without cancellation; the unclamped
        # log u is wanted here so that survival saturates to exactly 0
        # once e^(-lam x) underflows
        one_minus_galpha = -math.expm1(self.alpha * float(log1mexp(self.lam * x)))
        one_minus_galpha = min(max(one_minus_galpha, 0.0), 1.0)
        return specfun.inc_beta_ratio(one_minus_galpha, self.b, self.a)

    def hazard(self, x: float) -> float:
        """Hazard rate pdf(x)/survival(x) for x > 0."""
        if x <= 0.0:
            raise ValueError(f"hazard requires x > 0, got {x}")
        s = self.survival(x)
        if s == 0.0:
            raise OverflowError(f"survival underflowed to 0 at x={x}; hazard is not representable")
        return self.pdf(x) / s

    def quantile(self, p: float) -> float:
        """Quantile function on 0 < p < 1.

        Inverts the sampling transform: with Q the Beta(a, b) quantile
        of p, x = -log(1 - Q**(1/alpha)) / lam.
        """
        if not (0.0 < p < 1.0):
            raise ValueError(f"quantile requires 0 < p < 1, got {p}")
        q = specfun.inc_beta_inverse(p, self.a, self.b)
        # -log(1 - q^(1/alpha)) via the same stable switch as log1mexp
        logq = math.log(q)
        return -log1mexp(-logq / self.alpha) / self.lam

    def sample(self, n: int, rng: np.random.Generator, label: str = "") -> Sample:
        """Draw n i.i.d. values using a caller-supplied generator.

        Uses the beta-variate transform X = -log(1 - V**(1/alpha))/lam
        with V ~ Beta(a, b); deterministic given the generator state.
        """
        if n < 1:
            raise ValueError(f"sample requires n >= 1, got {n}")
        v = rng.beta(self.a, self.b, size=n)
        # keep V inside the open interval so the transform stays finite
        v = np.clip(v, np.finfo(float).tiny, np.nextafter(1.0, 0.0))
        x = -log1mexp(-np.log(v) / self.alpha) / self.lam
        return Sample(x, label=label)

    def params_tuple(self) -> tuple:
        return (self.a, self.b, self.lam, self.alpha)

    def __str__(self) -> str:
        return (f"BGE(a={self.a:.6g}, b={self.b:.6g}, "
                f"lam={self.lam:.6g}, alpha={self.alpha:.6g})")

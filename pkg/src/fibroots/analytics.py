"""Constants, prime sums and products over Fibonacci primes, and the
asymptotic counting predictions they feed.

All sums go through math.fsum, which is exactly rounded: the result does
not depend on summation order, so parallel or reversed accumulation is
bit-identical.
"""

import math
from bisect import bisect_right
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .fibroot import PrimeClass, characteristic_f_composite, enumerate_nf, enumerate_pf
from .modarith import prime_segments

EULER_GAMMA = 0.57721566490153286061  # 20 digits
ARTIN_RATIO = 27 / 38
ALPHA_LIMIT = 10**8
PAPER_X = 1301
NU_MAX_POWER = 10
CORRECTION_SEARCH = 10**4


class Estimate(NamedTuple):
    value: float
    error_bound: float


@dataclass(frozen=True)
class ConstantsReport:
    alpha_f: float
    beta_f: float
    gamma_f: float
    nu_f: float
    kappa_f: float
    prime_limit: int
    alpha_limit: int
    error_bounds: dict = field(default_factory=dict)
    a_primes: tuple = ()
    correction_product: float = 1.0
    search_limit: int = CORRECTION_SEARCH

    def rows(self):
        """(name, value, truncation limit, error bound) in a fixed order."""
        limits = {"alpha_f": self.alpha_limit, "correction_product_a": self.search_limit}
        values = {
            "alpha_f": self.alpha_f,
            "beta_f": self.beta_f,
            "gamma_f": self.gamma_f,
            "nu_f": self.nu_f,
            "kappa_f": self.kappa_f,
            "gamma_f_minus_gamma_alpha_f": self.gamma_f - EULER_GAMMA * self.alpha_f,
            "correction_product_a": self.correction_product,
        }
        return [(name, v, limits.get(name, self.prime_limit), self.error_bounds.get(name))
                for name, v in values.items()]


@dataclass(frozen=True)
class AsymptoticComparison:
    which: str
    x: int
    exact_count: float  # an int for counts, a float for harmonic sums
    predicted: float
    ratio: float | None

    @classmethod
    def build(cls, which, x, exact, predicted):
        ratio = exact / predicted if predicted > 0 else None
        return cls(which, x, exact, predicted, ratio)


class MertensProducts(NamedTuple):
    exact: tuple  # (i), (ii), (iii)
    predicted: tuple


@lru_cache(maxsize=8)
def _pf_primes(x, workers=1):
    return tuple(rec.p for rec in enumerate_pf(x, workers=workers))


def pf_primes(x, workers=1):
    """Primes <= x carrying a Fibonacci primitive root, as a tuple."""
    return _pf_primes(x, workers)


def _alpha_tail(limit):
    # sum over primes p > limit of 1/(p(p-1)) ~ 1/(limit log limit)
    return 1.0 / (limit * math.log(limit))


def compute_alpha_f(prime_limit=ALPHA_LIMIT):
    """Truncated Artin-type product (27/38) prod_{p <= limit} (1 - 1/(p(p-1))).

    The error bound is alpha times the tail estimate 1/(L log L); each
    omitted factor is below 1, so the truncated value sits above the
    limit by about that much.
    """
    if prime_limit < 2:
        raise ValueError("prime_limit must be at least 2")
    logs = []
    for seg in prime_segments(2, prime_limit):
        p = seg.astype(np.float64)
        logs.append(math.fsum(np.log1p(-1.0 / (p * (p - 1.0)))))
    alpha = ARTIN_RATIO * math.exp(math.fsum(logs))
    return Estimate(alpha, alpha * _alpha_tail(prime_limit))


def harmonic_sum_pf(x):
    return math.fsum(1.0 / p for p in pf_primes(x))


def log_weighted_sum_pf(x):
    return math.fsum(math.log(p) / (p - 1) for p in pf_primes(x))


def _nu_terms(primes, max_power):
    for p in primes:
        t = math.log(p) / (p - 1)
        if max_power is None:
            yield -math.log1p(-t) - t
        else:
            yield from (t**k / k for k in range(2, max_power + 1))


def compute_nu_f(x, max_power=NU_MAX_POWER):
    """Sum over Fibonacci primes p <= x of sum_{k>=2} t**k / k, t = log p/(p-1).

    The inner series is cut at k = max_power (the published value of the
    constant uses k <= 10).  max_power=None sums it in closed form as
    -log(1 - t) - t.
    """
    return math.fsum(_nu_terms(pf_primes(x), max_power))


def _nu_error(x, alpha, max_power):
    # prime tail: alpha * int_x^inf (log t)/(2 t^2) dt
    bound = alpha * (math.log(x) + 1) / (2 * x)
    if max_power is not None:
        for p in pf_primes(x):
            t = math.log(p) / (p - 1)
            bound += t ** (max_power + 1) / ((max_power + 1) * (1 - t))
    return bound


def correction_product_a(search_limit=CORRECTION_SEARCH):
    """prod (1 - 1/p**2) over the class-A primes found up to search_limit.

    Returns (value, contributing primes).
    """
    if search_limit < 5:
        return 1.0, ()
    found = tuple(rec.p for rec in enumerate_pf(search_limit)
                  if rec.prime_class is PrimeClass.A)
    value = math.exp(math.fsum(math.log1p(-1.0 / (p * p)) for p in found))
    return value, found


@lru_cache(maxsize=16)
def compute_constants(prime_limit=PAPER_X, alpha_limit=ALPHA_LIMIT,
                      search_limit=CORRECTION_SEARCH, nu_max_power=NU_MAX_POWER):
    """Every constant at once.

    beta_f and gamma_f follow the published recipe: sum over Fibonacci
    primes up to prime_limit, minus alpha*loglog(x) (resp. alpha*log(x))
    with x = prime_limit.  gamma_f keeps the sign of that recipe,
    gamma_f = sum log p/(p-1) - alpha log x.
    """
    if prime_limit < 5:
        raise ValueError("prime_limit must be at least 5")
    alpha, alpha_err = compute_alpha_f(alpha_limit)
    lx = math.log(prime_limit)
    beta = harmonic_sum_pf(prime_limit) - alpha * math.log(lx)
    gamma_f = log_weighted_sum_pf(prime_limit) - alpha * lx
    nu = compute_nu_f(prime_limit, nu_max_power)
    corr, a_primes = correction_product_a(search_limit)
    kappa = (math.exp(gamma_f - EULER_GAMMA * alpha) / (alpha * math.gamma(alpha))) * corr
    asym = math.log(lx) / lx**2
    errors = {
        "alpha_f": alpha_err,
        "beta_f": asym + alpha_err * math.log(lx),
        "gamma_f": asym + alpha_err * lx,
        "nu_f": _nu_error(prime_limit, alpha, nu_max_power),
        "kappa_f": kappa * (asym + alpha_err * lx),
        "gamma_f_minus_gamma_alpha_f": asym + alpha_err * (lx + EULER_GAMMA),
        "correction_product_a": 1.0 / search_limit,
    }
    return ConstantsReport(alpha, beta, gamma_f, nu, kappa, prime_limit, alpha_limit,
                           errors, a_primes, corr, search_limit)


def mertens_products(x, report=None):
    """The three finite products over Fibonacci primes p <= x with predictions.

    (i)   prod (1 - 1/p)**-1            ~ e**gamma_f (log x)**alpha
    (ii)  prod (1 + 1/p)                ~ e**gamma_f prod(1 - p**-2) (log x)**alpha
    (iii) prod (1 - log p/(p-1))**-1    ~ e**(nu_f - gamma_f) x**alpha
    The prod(1 - p**-2) in (ii) is taken over the same primes <= x.
    """
    report = report or compute_constants()
    ps = pf_primes(x)
    log_i = -math.fsum(math.log1p(-1.0 / p) for p in ps)
    log_sq = math.fsum(math.log1p(-1.0 / (p * p)) for p in ps)
    log_ii = math.fsum(math.log1p(1.0 / p) for p in ps)
    log_iii = -math.fsum(math.log1p(-math.log(p) / (p - 1)) for p in ps)
    a, g = report.alpha_f, report.gamma_f
    lead = math.exp(g) * math.log(x) ** a
    predicted = (lead, lead * math.exp(log_sq), math.exp(report.nu_f - g) * x**a)
    return MertensProducts((math.exp(log_i), math.exp(log_ii), math.exp(log_iii)), predicted)


def predict_pf(x, alpha=None):
    alpha = compute_constants().alpha_f if alpha is None else alpha
    return alpha * x / math.log(x)


def nf_leading_constant(report=None):
    report = report or compute_constants()
    a = report.alpha_f
    return math.exp(report.gamma_f - EULER_GAMMA * a) / math.gamma(a) * report.correction_product


def predict_nf(x, report=None):
    report = report or compute_constants()
    return nf_leading_constant(report) * x / math.log(x) ** (1 - report.alpha_f)


def predict_harmonic_pf(x, report=None):
    report = report or compute_constants()
    return report.alpha_f * math.log(math.log(x)) + report.beta_f


def predict_harmonic_nf(x, report=None):
    report = report or compute_constants()
    return report.kappa_f * math.log(x) ** report.alpha_f + report.gamma_f


def harmonic_sum_nf(x, report=None, workers=1):
    """(exact sum of 1/n over n <= x with a Fibonacci primitive root, prediction)."""
    exact = math.fsum(1.0 / rec.n for rec in enumerate_nf(x, workers=workers))
    if x < 5:
        return exact, None
    return exact, predict_harmonic_nf(x, report)


def count_f_indicator(x):
    """#{2 <= n <= x : f(n) = 1}.

    n = 1 is left out so the count lines up with enumerate_nf, which
    starts at 2; f(1) = 1 by the empty-product convention.
    """
    return sum(characteristic_f_composite(n) for n in range(2, x + 1))


def gamma_defect(limits):
    """gamma_f - euler_gamma * alpha_f for each truncation in limits."""
    return [(x, compute_constants(prime_limit=x).gamma_f
             - EULER_GAMMA * compute_constants(prime_limit=x).alpha_f) for x in limits]


WHICH = ("P_F", "N_F", "harmonic_P", "harmonic_N", "sum_f")


def compare_asymptotics(xs, report=None, workers=1):
    """AsymptoticComparison rows for every x in xs and every series in WHICH.

    One enumeration up to max(xs) serves all rows.
    """
    report = report or compute_constants()
    xs = sorted(set(xs))
    top = xs[-1]
    pf = [rec.p for rec in enumerate_pf(top, workers=workers)]
    nf = enumerate_nf(top, workers=workers)
    nf_n = [rec.n for rec in nf]
    nf_f = np.cumsum([rec.f_value for rec in nf]).tolist()
    rows = []
    for x in xs:
        i, j = bisect_right(pf, x), bisect_right(nf_n, x)
        rows += [
            AsymptoticComparison.build("P_F", x, i, predict_pf(x, report.alpha_f)),
            AsymptoticComparison.build("N_F", x, j, predict_nf(x, report)),
            AsymptoticComparison.build("harmonic_P", x, math.fsum(1.0 / p for p in pf[:i]),
                                       predict_harmonic_pf(x, report)),
            AsymptoticComparison.build("harmonic_N", x, math.fsum(1.0 / n for n in nf_n[:j]),
                                       predict_harmonic_nf(x, report)),
            # f(n) = 1 forces a root, so the f-count is read off the records
            AsymptoticComparison.build("sum_f", x, nf_f[j - 1] if j else 0, predict_nf(x, report)),
        ]
    return rows

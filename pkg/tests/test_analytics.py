import math

import pytest
from hypothesis import given, settings, strategies as st

from fibroots import analytics
from fibroots.analytics import (
    AsymptoticComparison,
    compare_asymptotics,
    compute_alpha_f,
    compute_constants,
    compute_nu_f,
    correction_product_a,
    count_f_indicator,
    harmonic_sum_nf,
    harmonic_sum_pf,
    log_weighted_sum_pf,
    mertens_products,
    predict_nf,
    predict_pf,
)
from fibroots.verify import PAPER_PF_1301

PAPER_BETA = 0.05020530308647012230491
PAPER_GAMMA = 0.0221594862523476326826286
PAPER_NU = 0.188622600886988493134287


def artin_alpha_oracle():
    """(27/38) * Artin's constant via log A = -sum_{n>=2} (L_n - 1) P(n) / n.

    L_n are Lucas numbers and P the prime zeta function.
    """
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.dps = 25
    lucas = [2, 1]
    while len(lucas) < 300:
        lucas.append(lucas[-1] + lucas[-2])
    s = mpmath.fsum((lucas[n] - 1) * mpmath.primezeta(n) / n for n in range(2, 260))
    return float(mpmath.exp(-s) * 27 / 38)


@pytest.fixture(scope="module")
def report():
    return compute_constants(prime_limit=1301, alpha_limit=10**7)


def test_alpha_single_factor():
    assert compute_alpha_f(2).value == pytest.approx(27 / 76, rel=1e-15)


def test_alpha_against_artin_series():
    truth = artin_alpha_oracle()
    for limit in (10**4, 10**6, 10**7):
        est = compute_alpha_f(limit)
        # every omitted factor is < 1, so truncation overshoots
        assert 0 < est.value - truth <= est.error_bound


def test_alpha_tail_self_consistency():
    small, big = compute_alpha_f(10**4), compute_alpha_f(10**7)
    assert abs(small.value - big.value) <= small.error_bound


def test_alpha_monotone_in_limit():
    vals = [compute_alpha_f(L).value for L in (10, 100, 1000, 10**4, 10**5)]
    assert all(a > b for a, b in zip(vals, vals[1:]))
    assert all(0 < v < 1 for v in vals)


def test_harmonic_sum_pf_examples(report):
    assert harmonic_sum_pf(5) == 0.2
    assert harmonic_sum_pf(11) == pytest.approx(1 / 5 + 1 / 11, rel=1e-15)
    v = math.fsum(1 / p for p in PAPER_PF_1301)
    assert harmonic_sum_pf(1301) == v
    assert v - report.alpha_f * math.log(math.log(1301)) == pytest.approx(PAPER_BETA, abs=1e-6)


def test_log_weighted_sum_examples(report):
    assert log_weighted_sum_pf(5) == pytest.approx(math.log(5) / 4, rel=1e-15)
    assert log_weighted_sum_pf(4) == 0
    w = math.fsum(math.log(p) / (p - 1) for p in PAPER_PF_1301)
    assert log_weighted_sum_pf(1301) == w
    # the published value is W - alpha log x (positive)
    assert w - report.alpha_f * math.log(1301) == pytest.approx(PAPER_GAMMA, abs=1e-6)


def test_nu_examples():
    t5 = math.log(5) / 4
    assert compute_nu_f(5, max_power=None) == pytest.approx(-math.log(1 - t5) - t5, rel=1e-14)
    assert compute_nu_f(5) == pytest.approx(sum(t5**k / k for k in range(2, 11)), rel=1e-14)
    assert compute_nu_f(4) == 0
    assert compute_nu_f(1301) == pytest.approx(PAPER_NU, abs=1e-9)


def test_nu_full_series_exceeds_published():
    closed = math.fsum(-math.log1p(-t) - t for t in (math.log(p) / (p - 1) for p in PAPER_PF_1301))
    full = compute_nu_f(1301, max_power=None)
    assert full == pytest.approx(closed, rel=1e-14)
    assert 6e-6 < full - PAPER_NU < 7e-6


def test_nu_monotone():
    vals = [compute_nu_f(x) for x in (5, 11, 100, 1000, 5000)]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_mertens_examples(report):
    m = mertens_products(5, report)
    assert m.exact[0] == pytest.approx(1.25, rel=1e-15)
    assert m.exact[1] == pytest.approx(1.2, rel=1e-15)
    assert m.exact[2] == pytest.approx(1 / (1 - math.log(5) / 4), rel=1e-15)


def test_mertens_identity(report):
    for x in (5, 100, 1301, 10**4):
        m = mertens_products(x, report)
        sq = math.prod(1 - 1 / p**2 for p in analytics.pf_primes(x))
        assert m.exact[1] == pytest.approx(m.exact[0] * sq, rel=1e-13)


def test_mertens_ratio_at_1301(report):
    # oracle: direct products over the printed prime list and the printed gamma_f
    prod_i = math.prod(1 / (1 - 1 / p) for p in PAPER_PF_1301)
    ratio = prod_i / (math.exp(PAPER_GAMMA) * math.log(1301) ** report.alpha_f)
    m = mertens_products(1301, report)
    assert m.exact[0] / m.predicted[0] == pytest.approx(ratio, rel=1e-6)
    assert ratio == pytest.approx(1.0603, abs=5e-4)


def test_correction_product():
    value, primes = correction_product_a(10**4)
    assert primes == (5,) and value == pytest.approx(0.96, rel=1e-15)
    assert correction_product_a(4) == (1.0, ())
    value5, primes5 = correction_product_a(5)
    assert primes5 == (5,) and value5 == pytest.approx(1 - 1 / 25, rel=1e-15)


def test_predict_pf_example(report):
    pred = predict_pf(1301, report.alpha_f)
    assert pred == pytest.approx(report.alpha_f * 1301 / math.log(1301))
    assert pred == pytest.approx(48.2, abs=0.05)
    assert 56 / pred == pytest.approx(1.16, abs=0.01)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=5, max_value=10**12))
def test_predict_pf_scaling(x):
    alpha = 0.2657054465
    assert predict_pf(x, alpha) * math.log(x) / x == pytest.approx(alpha, rel=1e-14)


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=5, max_value=10**15))
def test_predict_nf_positive(x):
    rep = compute_constants(prime_limit=1301, alpha_limit=10**7)
    v = predict_nf(x, rep)
    assert math.isfinite(v) and v > 0


def test_harmonic_sum_nf_examples(report):
    assert harmonic_sum_nf(5, report)[0] == 0.2
    want = math.fsum(1 / n for n in (5, 11, 19, 31, 41, 55, 59))
    exact, pred = harmonic_sum_nf(60, report)
    assert exact == want
    assert pred == pytest.approx(report.kappa_f * math.log(60) ** report.alpha_f + report.gamma_f)
    assert harmonic_sum_nf(4, report)[0] == 0


def test_count_f_indicator():
    assert count_f_indicator(60) == 7
    assert count_f_indicator(1) == 0
    assert count_f_indicator(4) == 0


def test_report_invariants(report):
    assert 0 < report.alpha_f < 1
    for v in (report.beta_f, report.gamma_f, report.nu_f, report.kappa_f):
        assert v > 0
    assert report.a_primes == (5,)
    kappa = (math.exp(report.gamma_f - analytics.EULER_GAMMA * report.alpha_f)
             / (report.alpha_f * math.gamma(report.alpha_f)) * 0.96)
    assert report.kappa_f == pytest.approx(kappa, rel=1e-14)
    names = [row[0] for row in report.rows()]
    assert names[:5] == ["alpha_f", "beta_f", "gamma_f", "nu_f", "kappa_f"]


def test_gamma_function_accuracy():
    mpmath = pytest.importorskip("mpmath")
    a = 0.2657054465189069
    assert math.gamma(a) == pytest.approx(float(mpmath.gamma(a)), rel=1e-14)


def test_beta_slowly_varying(report):
    vals = [harmonic_sum_pf(x) - report.alpha_f * math.log(math.log(x))
            for x in (100, 1000, 10**4, 10**5, 10**6)]
    assert max(vals) - min(vals) < 0.01
    assert all(0.03 < v < 0.07 for v in vals)


def test_compensated_sum_order_independent():
    terms = [math.log(p) / (p - 1) for p in analytics.pf_primes(10**5)]
    fwd, rev = math.fsum(terms), math.fsum(reversed(terms))
    assert abs(fwd - rev) <= 1e-12 * abs(fwd)


def test_compare_asymptotics_rows(report):
    rows = compare_asymptotics([100, 1000], report)
    assert [r.which for r in rows[:5]] == list(analytics.WHICH)
    for r in rows:
        assert isinstance(r, AsymptoticComparison)
        assert r.ratio == pytest.approx(r.exact_count / r.predicted)
    counts = {(r.which, r.x): r.exact_count for r in rows}
    assert counts[("P_F", 1000)] == len([p for p in PAPER_PF_1301 if p <= 1000])
    assert counts[("sum_f", 1000)] == count_f_indicator(1000)


def test_gamma_defect(report):
    rows = analytics.gamma_defect([1301])
    assert rows[0][0] == 1301
    # gamma_defect uses alpha at 10**8, the fixture at 10**7; the gap is ~1.5e-9 * (log x + gamma)
    assert rows[0][1] == pytest.approx(report.gamma_f - analytics.EULER_GAMMA * report.alpha_f, abs=5e-8)

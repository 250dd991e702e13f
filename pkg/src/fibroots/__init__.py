"""Fibonacci primitive roots over primes, prime powers and composite moduli."""

from .analytics import (
    AsymptoticComparison,
    ConstantsReport,
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
from .fibroot import (
    FibIntegerRecord,
    PrimeClass,
    PrimeRecord,
    characteristic_f,
    characteristic_f_composite,
    classify_prime,
    enumerate_nf,
    enumerate_pf,
    is_fibonacci_primitive_root,
    solve_fibonacci_roots,
    solve_general_quadratic,
)
from .modarith import (
    Factorization,
    SieveRange,
    carmichael_lambda,
    euler_phi,
    factorize,
    hensel_lift_quadratic,
    multiplicative_order,
    sieve_primes,
    sqrt_mod,
)

__version__ = "0.1.0"

from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from fibroots.fibroot import (
    PrimeClass,
    characteristic_f,
    characteristic_f_composite,
    classify_prime,
    enumerate_nf,
    enumerate_pf,
    is_fibonacci_primitive_root,
    nf_record,
    solve_fibonacci_roots,
    solve_general_quadratic,
)
from fibroots.modarith import hensel_lift_quadratic, multiplicative_order
from fibroots.verify import PAPER_PF_1301


def brute_order(r, n):
    x, m = r % n, 1
    while x != 1:
        x, m = x * r % n, m + 1
    return m


def brute_lambda(n):
    # exponent of a finite abelian group = largest element order
    return max(brute_order(r, n) for r in range(1, n) if gcd(r, n) == 1) if n > 2 else 1


def brute_fpr(n):
    lam = brute_lambda(n)
    return [r for r in range(n) if gcd(r, n) == 1 and (r * r - r - 1) % n == 0
            and brute_order(r, n) == lam]


# frozen from brute_fpr over 2..160
NF_160 = [5, 11, 19, 31, 41, 55, 59, 61, 71, 79, 95, 109, 121, 131, 145, 149, 155]


def test_nf_160_frozen_by_brute_force():
    assert [n for n in range(2, 161) if brute_fpr(n)] == NF_160


@pytest.mark.parametrize("n, roots", [(55, [8, 48]), (2, []), (25, []), (5, [3])])
def test_solve_fibonacci_roots_examples(n, roots):
    assert solve_fibonacci_roots(n) == roots
    assert roots == [r for r in range(n) if (r * r - r - 1) % n == 0]


def test_solve_fibonacci_roots_scan_range():
    for n in range(2, 1500):
        assert solve_fibonacci_roots(n) == [r for r in range(n) if (r * r - r - 1) % n == 0], n


def test_solve_fibonacci_roots_large():
    from fibroots.modarith import is_prime
    big = [q for q in range(10**9 + 1, 10**9 + 400, 10) if is_prime(q)][:2]  # q = 1 mod 10
    n = big[0] * big[1] * 11
    roots = solve_fibonacci_roots(n)
    assert len(roots) == 8
    assert all((r * r - r - 1) % n == 0 for r in roots)


@pytest.mark.parametrize("r, n, expected", [(8, 55, True), (3, 25, False), (4, 11, False), (48, 55, True)])
def test_is_fibonacci_primitive_root_examples(r, n, expected):
    assert is_fibonacci_primitive_root(r, n) is expected


def test_four_mod_eleven():
    assert (4 * 4 - 4 - 1) % 11 == 0 and brute_order(4, 11) == 5


def test_non_unit_is_false():
    assert is_fibonacci_primitive_root(0, 55) is False
    assert is_fibonacci_primitive_root(5, 55) is False


def test_characteristic_f_examples():
    assert all(characteristic_f(2, k) == 0 for k in range(1, 6))
    assert all(characteristic_f(3, k) == 0 for k in range(1, 6))
    assert characteristic_f(5, 1) == 1 and characteristic_f(5, 2) == 0
    assert characteristic_f(11, 2) == 1


@pytest.mark.parametrize("n, f", [(55, 1), (50, 0), (25, 0), (1, 1), (121, 1), (29, 0)])
def test_characteristic_f_composite_examples(n, f):
    assert characteristic_f_composite(n) == f


def test_characteristic_f_matches_prime_power_membership():
    for q, (p, k) in {25: (5, 2), 121: (11, 2), 1331: (11, 3), 361: (19, 2), 125: (5, 3)}.items():
        assert characteristic_f(p, k) == int(bool(brute_fpr(q)))


def test_classify_examples():
    five = classify_prime(5)
    assert five.prime_class is PrimeClass.A and five.congruence_roots == (3,)
    eleven = classify_prime(11)
    assert eleven.prime_class is PrimeClass.B
    assert eleven.lift_witness == 85 and brute_order(85, 121) == 110
    assert classify_prime(7).prime_class is PrimeClass.NOT_MEMBER
    assert classify_prime(29).prime_class is PrimeClass.NOT_MEMBER  # roots, none primitive


def test_prime_record_invariants():
    for rec in enumerate_pf(3000):
        assert len(rec.congruence_roots) in (1, 2)
        assert len(rec.congruence_roots) == 1 or rec.p != 5
        assert set(rec.fib_primitive_roots) <= set(rec.congruence_roots)
        assert rec.fib_primitive_roots
        if rec.prime_class is PrimeClass.B:
            w, p = rec.lift_witness, rec.p
            assert (w * w - w - 1) % (p * p) == 0
            assert multiplicative_order(w, p * p) == p * (p - 1)


def test_enumerate_pf_examples():
    assert [r.p for r in enumerate_pf(100)] == [5, 11, 19, 31, 41, 59, 61, 71, 79]
    pf = [r.p for r in enumerate_pf(1301)]
    assert len(pf) == 56 and pf == list(PAPER_PF_1301)
    assert enumerate_pf(4) == []


def test_enumerate_pf_brute_force():
    primes = [q for q in range(2, 2000) if all(q % d for d in range(2, int(q**0.5) + 1))]
    want = [q for q in primes if any((r * r - r - 1) % q == 0 and brute_order(r, q) == q - 1
                                     for r in range(1, q))]
    assert [r.p for r in enumerate_pf(1999)] == want


def test_enumerate_nf_examples():
    assert [r.n for r in enumerate_nf(60)] == [5, 11, 19, 31, 41, 55, 59]
    assert [r.n for r in enumerate_nf(160)] == NF_160
    rec = nf_record(55)
    assert rec.roots == (8, 48) and rec.lambda_n == 20


def test_enumerate_nf_against_brute_force():
    got = {r.n: list(r.roots) for r in enumerate_nf(700)}
    for n in range(2, 701):
        assert got.get(n, []) == brute_fpr(n), n


def test_record_roots_recheck():
    for rec in enumerate_nf(1200):
        assert rec.lambda_n == brute_lambda(rec.n)
        for r in rec.roots:
            assert gcd(r, rec.n) == 1 and (r * r - r - 1) % rec.n == 0
            assert multiplicative_order(r, rec.n) == rec.lambda_n
        if rec.f_value:
            assert rec.roots


def test_root_48_has_small_component_order():
    # 48 is a witness for 55 although its order mod 11 is 5, not 10
    assert brute_order(48 % 11, 11) == 5 and brute_order(48 % 5, 5) == 4


def test_enumeration_independent_of_workers():
    assert enumerate_nf(150000, workers=1) == enumerate_nf(150000, workers=3)
    assert enumerate_pf(150000, workers=1) == enumerate_pf(150000, workers=3)


def test_multiplicativity_and_witness():
    ps = [q for q in range(5, 200) if all(q % d for d in range(2, int(q**0.5) + 1))]
    for i, p in enumerate(ps):
        for q in ps[i + 1:]:
            assert characteristic_f_composite(p * q) == characteristic_f(p, 1) * characteristic_f(q, 1)
    assert characteristic_f(5, 2) != characteristic_f(5, 1) ** 2


@pytest.mark.parametrize("a, b, c, n, expected", [
    (1, -1, -1, 55, [8, 48]),
    (1, 0, -1, 8, [1, 3, 5, 7]),
    (1, 0, 1, 3, []),
])
def test_general_quadratic_examples(a, b, c, n, expected):
    assert solve_general_quadratic(a, b, c, n) == expected


@settings(max_examples=300, deadline=None)
@given(st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20), st.integers(2, 400))
def test_general_quadratic_matches_scan(a, b, c, n):
    want = [x for x in range(n) if (a * x * x + b * x + c) % n == 0]
    assert solve_general_quadratic(a, b, c, n) == want


def test_general_quadratic_fibonacci_specialization():
    for n in range(2, 2000):
        assert solve_general_quadratic(1, -1, -1, n) == solve_fibonacci_roots(n)


def test_general_quadratic_large_prime_power():
    p = 1000003
    n = p**2
    # (x - 5)(3x + 2) = 3x^2 - 13x - 10
    roots = solve_general_quadratic(3, -13, -10, n)
    assert len(roots) == 2 and 5 in roots
    assert all((3 * x * x - 13 * x - 10) % n == 0 for x in roots)


def test_hensel_lift_failure_at_five():
    # (3 + 5k)^2 - (3 + 5k) - 1 = 5 (mod 25) for every k
    assert all(((3 + 5 * k) ** 2 - (3 + 5 * k) - 1) % 25 == 5 for k in range(5))
    assert hensel_lift_quadratic(3, 5, 2) is None

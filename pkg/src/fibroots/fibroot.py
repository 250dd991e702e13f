"""Fibonacci primitive roots modulo primes, prime powers and composites.

A residue r is a Fibonacci primitive root mod n when gcd(r, n) = 1,
r*r == r + 1 (mod n) and ord_n(r) == lambda(n).
"""

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm

import numpy as np

from .modarith import (
    carmichael_lambda,
    crt_combine,
    factor_table,
    factorize,
    factorize_with_table,
    hensel_lift,
    hensel_lift_quadratic,
    lambda_from_factors,
    lambda_prime_power,
    multiplicative_order,
    order_dividing,
    sieve_primes,
    small_primes,
    sqrt_mod,
)

EXHAUSTIVE_LIMIT = 10**6
CHUNK = 1 << 16


class PrimeClass(str, enum.Enum):
    A = "A"
    B = "B"
    NOT_MEMBER = "NotMember"


@dataclass(frozen=True)
class PrimeRecord:
    p: int
    congruence_roots: tuple
    fib_primitive_roots: tuple
    prime_class: PrimeClass
    lift_witness: int | None = None


@dataclass(frozen=True)
class FibIntegerRecord:
    n: int
    lambda_n: int
    roots: tuple
    f_value: int


def default_workers():
    return max(1, int(os.environ.get("FIBROOTS_WORKERS", "1")))


def _fib_roots_mod_p(p):
    if p == 2 or p == 3:
        return ()
    if p == 5:
        return (3,)
    s = sqrt_mod(5, p)
    if s is None:
        return ()
    half = (p + 1) // 2
    return tuple(sorted((1 + x) * half % p for x in s))


@lru_cache(maxsize=1 << 16)
def _fib_roots_prime_power(p, k):
    if k == 1:
        return _fib_roots_mod_p(p)
    out = []
    for r in _fib_roots_mod_p(p):
        lifted = hensel_lift_quadratic(r, p, k)
        if lifted is not None:
            out.append(lifted)
    return tuple(sorted(out))


def solve_fibonacci_roots(n):
    """All r mod n with r*r == r + 1 (mod n), ascending.

    Roots are found per prime power (square root of 5, then Hensel
    lifting) and glued together with the CRT.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    fac = factorize(n).factors
    sets = [_fib_roots_prime_power(p, e) for p, e in fac]
    if any(not s for s in sets):
        return []
    return crt_combine(sets, [p**e for p, e in fac])


def is_fibonacci_primitive_root(r, n):
    if n < 2 or not 0 <= r < n:
        raise ValueError("need n >= 2 and 0 <= r < n")
    if gcd(r, n) != 1 or (r * r - r - 1) % n:
        return False
    return multiplicative_order(r, n) == carmichael_lambda(n)


def characteristic_f(p, k):
    """1 if some Fibonacci root mod p**k has order p**(k-1)*(p-1), else 0."""
    if p <= 3:
        return 0
    mod = p**k
    full = (p - 1) * p ** (k - 1)
    primes = factorize(p - 1).primes + [p]
    for r in _fib_roots_prime_power(p, k):
        if order_dividing(r, mod, full, primes) == full:
            return 1
    return 0


def characteristic_f_composite(n):
    if n == 1:
        return 1
    for p, e in factorize(n):
        if not characteristic_f(p, e):
            return 0
    return 1


def classify_prime(p, p_minus_1_primes=None):
    """Fibonacci data for a prime p, including its A/B class.

    Class B needs a Fibonacci primitive root whose Hensel lift to p**2
    has order p*(p-1); full order mod p**2 carries over to every higher
    power, so p**2 settles the question.  Primes with Fibonacci
    primitive roots but no such lift are class A.
    """
    roots = _fib_roots_mod_p(p)
    if not roots:
        return PrimeRecord(p, (), (), PrimeClass.NOT_MEMBER)
    if p_minus_1_primes is None:
        p_minus_1_primes = factorize(p - 1).primes if p > 2 else []
    prim = tuple(r for r in roots if order_dividing(r, p, p - 1, p_minus_1_primes) == p - 1)
    if not prim:
        return PrimeRecord(p, roots, (), PrimeClass.NOT_MEMBER)
    p2, full = p * p, p * (p - 1)
    for r in prim:
        w = hensel_lift_quadratic(r, p, 2)
        if w is not None and order_dividing(w, p2, full, list(p_minus_1_primes) + [p]) == full:
            return PrimeRecord(p, roots, prim, PrimeClass.B, w)
    return PrimeRecord(p, roots, prim, PrimeClass.A)


def _chunks(lo, hi, size=CHUNK):
    return [(a, min(a + size - 1, hi), hi) for a in range(lo, hi + 1, size)]


def _map_chunks(func, chunks, workers):
    if workers <= 1 or len(chunks) <= 1:
        return [func(c) for c in chunks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, chunks))


@lru_cache(maxsize=2)
def _table(limit):
    return factor_table(limit)


def _classify_chunk(bounds):
    lo, hi, top = bounds
    spf = _table(top)
    out = []
    for p in sieve_primes(lo, hi).primes:
        rec = classify_prime(p, [q for q, _ in factorize_with_table(p - 1, spf)])
        if rec.fib_primitive_roots:
            out.append(rec)
    return out


def enumerate_pf(x, workers=None):
    """PrimeRecords for every p <= x with a Fibonacci primitive root.

    The range is cut into fixed chunks; chunk boundaries do not depend
    on the worker count, so output is identical for any pool size.
    """
    if x < 5:
        return []
    workers = default_workers() if workers is None else workers
    parts = _map_chunks(_classify_chunk, _chunks(2, x), workers)
    return [rec for part in parts for rec in part]


@lru_cache(maxsize=1 << 16)
def _component(p, e):
    # (roots mod p**e, their orders, lambda(p**e))
    roots = _fib_roots_prime_power(p, e)
    mod, lam = p**e, lambda_prime_power(p, e)
    primes = [q for q, _ in factorize(p - 1)] + ([p] if e > 1 else [])
    return roots, tuple(order_dividing(r, mod, lam, primes) for r in roots), lam


def _admissible_mask(lo, hi):
    # n in [lo, hi] all of whose prime-power parts carry a Fibonacci root
    mask = np.ones(hi - lo + 1, dtype=bool)
    for p in small_primes(hi).tolist():
        if p == 5:
            first = -(-lo // 25) * 25
            mask[first - lo::25] = False
        elif p < 5 or p % 10 not in (1, 9):
            first = -(-lo // p) * p
            mask[first - lo::p] = False
    return mask


def _integer_record(n, fac):
    comps = [_component(p, e) for p, e in fac]
    lam = lambda_from_factors(fac)
    # the order of a CRT root is the lcm of its component orders
    combos = [((), 1)]
    for roots, orders, _ in comps:
        combos = [(rs + (r,), lcm(o, od)) for rs, o in combos for r, od in zip(roots, orders)]
    good = [rs for rs, o in combos if o == lam]
    if not good:
        return None
    moduli = [p**e for p, e in fac]
    roots = sorted(crt_combine([(r,) for r in rs], moduli)[0] for rs in good)
    f_value = int(all(lam_c in orders for _, orders, lam_c in comps))
    return FibIntegerRecord(n, lam, tuple(roots), f_value)


def _nf_chunk(bounds):
    lo, hi, top = bounds
    spf = _table(top)
    out = []
    mask = _admissible_mask(lo, hi)
    for i in np.flatnonzero(mask).tolist():
        n = lo + i
        fac = factorize_with_table(n, spf)
        rec = _integer_record(n, fac)
        if rec is not None:
            out.append(rec)
    return out


def enumerate_nf(x, workers=None):
    """FibIntegerRecords for every 2 <= n <= x with a Fibonacci primitive root.

    Only n whose prime-power parts all carry roots of x**2 - x - 1 are
    examined (no factor 2 or 3, no 25, other primes = +-1 mod 10).  For
    those, every CRT combination of component roots is a candidate and
    its order mod n is the lcm of the component orders.
    """
    if x < 2:
        return []
    workers = default_workers() if workers is None else workers
    parts = _map_chunks(_nf_chunk, _chunks(2, x), workers)
    return [rec for part in parts for rec in part]


def nf_record(n):
    """Record for a single n, or None when n has no Fibonacci primitive root."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return _integer_record(n, list(factorize(n).factors))


def _scan_prime_power(a, b, c, q):
    if q > EXHAUSTIVE_LIMIT:
        raise ValueError(f"prime power {q} too large for exhaustive scan")
    xs = np.arange(q, dtype=np.int64)
    vals = ((a % q) * xs % q * xs + (b % q) * xs + c) % q
    return [int(v) for v in np.flatnonzero(vals == 0)]


def _quadratic_prime_power(a, b, c, p, e):
    q = p**e
    if (2 * a) % p == 0:
        return _scan_prime_power(a, b, c, q)
    disc = (b * b - 4 * a * c) % p
    s = sqrt_mod(disc, p)
    if s is None:
        return []
    inv = pow(2 * a, -1, p)
    base = sorted({(-b + t) * inv % p for t in s})
    if e == 1:
        return base
    if disc == 0:
        # repeated root mod p: lifts are not unique
        return _scan_prime_power(a, b, c, q)
    out = [hensel_lift((a, b, c), r, p, e) for r in base]
    return sorted(r for r in out if r is not None)


def solve_general_quadratic(a, b, c, n):
    """All x mod n with a*x**2 + b*x + c == 0 (mod n), ascending.

    Per prime power: complete the square when 2a is a unit mod p and
    Hensel-lift the simple roots; otherwise (p | 2a, or a double root)
    scan the prime power exhaustively, which is capped at 10**6.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    fac = factorize(n).factors
    sets = []
    for p, e in fac:
        roots = _quadratic_prime_power(a, b, c, p, e)
        if not roots:
            return []
        sets.append(roots)
    return crt_combine(sets, [p**e for p, e in fac])

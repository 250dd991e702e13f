"""Exact integer arithmetic: sieving, factorization, phi, lambda, orders,
modular square roots and Hensel lifting.

Everything here works on plain Python ints, so products of two residues
below 2**64 never overflow.  numpy is only used for the boolean sieve
buffers.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt, lcm, prod

import numpy as np

UPPER = 1 << 64
TRIAL_LIMIT = 10**6
SEGMENT_SIZE = 1 << 20
MAX_SEGMENTS = 1024
# sieving primes beyond this are replaced by a primality test on the survivors
BASE_PRIME_CAP = 10**7

# deterministic for every n < 3.3e24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class ResourceLimitError(RuntimeError):
    """Requested work exceeds the configured sieve budget."""


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple  # ((prime, exponent), ...) with strictly increasing primes

    @property
    def primes(self):
        return [p for p, _ in self.factors]

    def prime_powers(self):
        return [p**e for p, e in self.factors]

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)


@dataclass(frozen=True)
class SieveRange:
    lo: int
    hi: int
    primes: list


def _simple_sieve(limit):
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    flags[4::2] = False
    for p in range(3, isqrt(limit) + 1, 2):
        if flags[p]:
            flags[p * p::2 * p] = False
    return np.flatnonzero(flags).astype(np.int64)


@lru_cache(maxsize=8)
def small_primes(limit):
    """All primes <= limit as an int64 array (cached)."""
    return _simple_sieve(limit)


@lru_cache(maxsize=1)
def _trial_primes():
    return small_primes(TRIAL_LIMIT).tolist()


def is_prime(n):
    """Deterministic Miller-Rabin, exact for all n < 2**64 (and well beyond)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n):
    # Pollard rho, Brent cycle detection with batched gcds; n odd composite
    if n % 2 == 0:
        return 2
    for c in range(1, 200):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"pollard-brent failed on {n}")


def _split(n, out):
    if n == 1:
        return
    if is_prime(n):
        out.append(n)
        return
    r = isqrt(n)
    if r * r == n:
        _split(r, out)
        _split(r, out)
        return
    d = _brent(n)
    _split(d, out)
    _split(n // d, out)


def _check_range(n):
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"expected an int, got {type(n).__name__}")
    if not 1 <= n < UPPER:
        raise ValueError(f"{n} is outside the supported range [1, 2**64)")


def factorize(n):
    """Complete prime factorization of 1 <= n < 2**64.

    Trial division by primes below 10**6, then Miller-Rabin and
    Pollard-Brent on whatever cofactor is left.

    >>> factorize(55).factors
    ((5, 1), (11, 1))
    """
    _check_range(n)
    value, counts = n, {}
    for p in _trial_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            counts[p] = e
    if n > 1:
        big = []
        _split(n, big)
        for q in big:
            counts[q] = counts.get(q, 0) + 1
    return Factorization(value, tuple(sorted(counts.items())))


def factor_table(limit):
    """Smallest-prime-factor table for 0..limit (entries 0 and 1 are 0)."""
    spf = np.zeros(limit + 1, dtype=np.int32 if limit < 1 << 31 else np.int64)
    for p in small_primes(isqrt(limit)).tolist():
        block = spf[p * p::p]
        block[block == 0] = p
    rest = spf[2:]
    idx = np.flatnonzero(rest == 0)
    rest[idx] = idx + 2
    return spf


def factorize_with_table(n, spf):
    """Factor n using a table from factor_table(); n must be within the table."""
    factors = []
    while n > 1:
        p = int(spf[n])
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        factors.append((p, e))
    return factors


def euler_phi(n):
    if n == 1:
        return 1
    out = n
    for p, _ in factorize(n):
        out = out // p * (p - 1)
    return out


def lambda_prime_power(p, e):
    if p == 2 and e >= 3:
        return 1 << (e - 2)
    return (p - 1) * p ** (e - 1)


def lambda_from_factors(factors):
    return lcm(*(lambda_prime_power(p, e) for p, e in factors)) if factors else 1


def carmichael_lambda(n):
    """Exponent of the unit group mod n; carmichael_lambda(1) == 1."""
    return lambda_from_factors(factorize(n).factors)


def order_dividing(r, n, exponent, exponent_primes):
    """Order of r mod n given an exponent known to annihilate r.

    exponent_primes must contain every prime dividing exponent.
    """
    m = exponent
    for q in exponent_primes:
        while m % q == 0 and pow(r, m // q, n) == 1:
            m //= q
    return m


@lru_cache(maxsize=4096)
def _lambda_and_primes(n):
    lam = carmichael_lambda(n)
    return lam, tuple(factorize(lam).primes)


def multiplicative_order(r, n):
    """Least m >= 1 with r**m == 1 (mod n).

    Starts from lambda(n) and strips prime factors, so the cost is a
    couple of factorizations plus O(log^2 n) modular powers.
    """
    if n < 2:
        raise ValueError("modulus must be at least 2")
    r %= n
    if gcd(r, n) != 1:
        raise ValueError(f"not a unit: gcd({r}, {n}) != 1")
    lam, primes = _lambda_and_primes(n)
    return order_dividing(r, n, lam, primes)


def legendre(a, p):
    t = pow(a, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


def sqrt_mod(a, p):
    """Square roots of a modulo an odd prime p (Tonelli-Shanks).

    Returns the sorted tuple of roots: two for a nonzero residue, (0,)
    for a == 0, None for a non-residue.  p is assumed prime; a composite
    p gives meaningless output.
    """
    assert p > 2 and p % 2 == 1, "sqrt_mod needs an odd prime"
    a %= p
    if a == 0:
        return (0,)
    if legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        s = pow(a, (p + 1) // 4, p)
    else:
        q, k = p - 1, 0
        while q % 2 == 0:
            q //= 2
            k += 1
        z = 2
        while legendre(z, p) != -1:
            z += 1
        m, c, t, s = k, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, s = t * c % p, s * b % p
    return tuple(sorted((s, p - s)))


def _poly_eval(coeffs, x, m):
    # coeffs highest degree first
    acc = 0
    for c in coeffs:
        acc = (acc * x + c) % m
    return acc


def _poly_deriv(coeffs):
    deg = len(coeffs) - 1
    return [c * (deg - i) for i, c in enumerate(coeffs[:-1])]


def hensel_lift(coeffs, r, p, k):
    """Lift a root r of the polynomial mod p to a root mod p**k.

    Lifts one power of p at a time.  A simple root lifts uniquely.  A
    root with vanishing derivative either fails to lift (None) or, when
    every candidate works at some level, keeps the current residue.
    """
    if _poly_eval(coeffs, r, p) != 0:
        raise ValueError(f"{r} is not a root mod {p}")
    deriv = _poly_deriv(coeffs)
    r %= p
    pj = p
    for _ in range(1, k):
        pj1 = pj * p
        val = _poly_eval(coeffs, r, pj1)
        d = _poly_eval(deriv, r, p)
        if d == 0:
            if val != 0:
                return None
        else:
            t = (-(val // pj) * pow(d, -1, p)) % p
            r += t * pj
        pj = pj1
    return r


def hensel_lift_quadratic(r, p, k):
    """Lift a root of x**2 - x - 1 from mod p to mod p**k, or None."""
    return hensel_lift((1, -1, -1), r, p, k)


def crt_pair(r1, m1, r2, m2):
    """Combine x = r1 (mod m1), x = r2 (mod m2) for coprime moduli."""
    t = (r2 - r1) * pow(m1, -1, m2) % m2
    return r1 + m1 * t


def crt_combine(residue_sets, moduli):
    """All x mod prod(moduli) whose image mod each modulus lies in its set."""
    out, m = [0], 1
    for roots, mod in zip(residue_sets, moduli):
        out = [crt_pair(x, m, r, mod) for x in out for r in roots]
        m *= mod
    return sorted(out)


def sieve_primes(lo, hi, segment_size=SEGMENT_SIZE, max_segments=MAX_SEGMENTS):
    """Primes in [lo, hi] by a segmented sieve of Eratosthenes.

    Segments hold at most segment_size integers; more than max_segments
    of them raises ResourceLimitError.  When sqrt(hi) exceeds
    BASE_PRIME_CAP the sieve only removes multiples of the capped base
    primes and the survivors are confirmed with Miller-Rabin, so the
    result stays exact.
    """
    if not 2 <= lo <= hi < UPPER:
        raise ValueError(f"need 2 <= lo <= hi < 2**64, got [{lo}, {hi}]")
    span = hi - lo + 1
    if span > segment_size * max_segments:
        raise ResourceLimitError(
            f"range of {span} integers exceeds {max_segments} segments of {segment_size}")
    root = isqrt(hi)
    capped = root > BASE_PRIME_CAP
    base = small_primes(min(root, BASE_PRIME_CAP)).tolist()
    primes = []
    for start in range(lo, hi + 1, segment_size):
        stop = min(start + segment_size - 1, hi)
        primes.extend(_sieve_segment(start, stop, base, capped))
    return SieveRange(lo, hi, primes)


def _segment_flags(start, stop, base):
    flags = np.ones(stop - start + 1, dtype=bool)
    for p in base:
        if p * p > stop:
            break
        first = max(p * p, -(-start // p) * p)
        if first <= stop:
            flags[first - start::p] = False
    return flags


def _sieve_segment(start, stop, base, capped):
    out = [start + int(i) for i in np.flatnonzero(_segment_flags(start, stop, base))]
    if capped:
        out = [q for q in out if is_prime(q)]
    return out


def prime_segments(lo, hi, segment_size=SEGMENT_SIZE):
    """Yield the primes of [lo, hi] as int64 arrays, one per segment.

    For bulk float work on large ranges; hi must stay below 2**63 and
    sqrt(hi) below BASE_PRIME_CAP.
    """
    lo = max(lo, 2)
    if hi < lo:
        return
    root = isqrt(hi)
    if hi >= 1 << 63 or root > BASE_PRIME_CAP:
        raise ValueError("prime_segments supports hi < min(2**63, BASE_PRIME_CAP**2)")
    base = small_primes(root).tolist()
    for start in range(lo, hi + 1, segment_size):
        stop = min(start + segment_size - 1, hi)
        yield np.flatnonzero(_segment_flags(start, stop, base)).astype(np.int64) + start


def primes_up_to(x):
    """Convenience wrapper: list of primes <= x."""
    if x < 2:
        return []
    return sieve_primes(2, x, max_segments=max(MAX_SEGMENTS, x // SEGMENT_SIZE + 1)).primes


def product_of(factors):
    return prod(p**e for p, e in factors)

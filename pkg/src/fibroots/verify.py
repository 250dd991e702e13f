"""Oracle-equivalence checks, shared by the test-suite and ``fibroots verify``.

Each check pits a fast routine against a brute-force route that does not
go through it (exhaustive residue scans, naive order by repeated
multiplication, trial division) and returns a CheckResult.
"""

import time
from dataclasses import dataclass
from math import gcd, lcm

import numpy as np

from . import fibroot, modarith

ORDER_CAP = 2000
SCAN_CAP = 10**4
SIEVE_CAP = 10**5
SQRT_CAP = 1000
HENSEL_CAP = 100
PAIR_CAP = 500

PAPER_PF_1301 = (
    5, 11, 19, 31, 41, 59, 61, 71, 79, 109, 131, 149, 179, 191, 239, 241, 251, 269, 271,
    311, 359, 379, 389, 409, 419, 431, 439, 449, 479, 491, 499, 569, 571, 599, 601, 631,
    641, 659, 701, 719, 739, 751, 821, 839, 929, 971, 1019, 1039, 1051, 1091, 1129, 1171,
    1181, 1201, 1259, 1301,
)
# as printed, "5*19" appears twice; the second copy sits where 131 and 145 belong
PAPER_NF_HEAD = (5, 11, 19, 31, 41, 55, 59, 61, 71, 79, 95, 109, 121, 95, 149, 155)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0


def naive_orders(n):
    """(units, orders) of every unit mod n by repeated multiplication."""
    r = np.arange(1, n, dtype=np.int64)
    units = r[np.gcd(r, n) == 1]
    orders = np.zeros(len(units), dtype=np.int64)
    cur, idx, m = units.copy(), np.arange(len(units)), 1
    while len(idx):
        hit = cur == 1
        orders[idx[hit]] = m
        idx, cur = idx[~hit], cur[~hit] * units[idx[~hit]] % n
        m += 1
    return units, orders


def naive_order(r, n):
    x, m = r % n, 1
    while x != 1:
        x = x * r % n
        m += 1
    return m


def scan_roots(n):
    """Residues r mod n with r*r == r + 1, by testing every residue."""
    r = np.arange(n, dtype=np.int64)
    return np.flatnonzero((r * r - r - 1) % n == 0).tolist()


def trial_division_primes(lo, hi):
    out = []
    for q in range(max(lo, 2), hi + 1):
        d = 2
        while d * d <= q and q % d:
            d += 1
        if d * d > q:
            out.append(q)
    return out


def _vector_pow(base, exp, n):
    out = np.ones_like(base)
    b = base % n
    while exp:
        if exp & 1:
            out = out * b % n
        b = b * b % n
        exp >>= 1
    return out


def check_order_equivalence(limit=ORDER_CAP):
    bad = []
    for n in range(2, limit + 1):
        units, orders = naive_orders(n)
        lam_oracle = lcm(*orders.tolist())
        if modarith.carmichael_lambda(n) != lam_oracle:
            bad.append(("lambda", n))
        for r, o in zip(units.tolist(), orders.tolist()):
            if modarith.multiplicative_order(r, n) != o:
                bad.append((r, n))
    return not bad, f"n<={limit}, mismatches={bad[:5]}"


def check_lambda_annihilates(limit=SCAN_CAP):
    bad = []
    for n in range(2, limit + 1):
        r = np.arange(1, n, dtype=np.int64)
        units = r[np.gcd(r, n) == 1]
        if not np.all(_vector_pow(units, modarith.carmichael_lambda(n), n) == 1 % n):
            bad.append(n)
    return not bad, f"n<={limit}, failures={bad[:5]}"


def check_lambda_divides_phi(limit=SCAN_CAP):
    bad = []
    for n in range(1, limit + 1):
        lam, phi = modarith.carmichael_lambda(n), modarith.euler_phi(n)
        fac = modarith.factorize(n).factors
        odd = [(p, e) for p, e in fac if p != 2]
        two = dict(fac).get(2, 0)
        cyclic = n in (1, 2, 4) or (len(odd) == 1 and two <= 1)
        if phi % lam or (cyclic and lam != phi):
            bad.append(n)
    return not bad, f"n<={limit}, failures={bad[:5]}"


def check_nf_membership(limit=SCAN_CAP, workers=1):
    fast = {rec.n: rec.roots for rec in fibroot.enumerate_nf(limit, workers=workers)}
    bad = []
    for n in range(2, limit + 1):
        sols = scan_roots(n)
        if fibroot.solve_fibonacci_roots(n) != sols:
            bad.append(("roots", n))
        lam = modarith.carmichael_lambda(n)
        prim = tuple(r for r in sols if gcd(r, n) == 1 and naive_order(r, n) == lam)
        if prim != fast.get(n, ()):
            bad.append(("member", n))
    return not bad, f"n<={limit}, members={len(fast)}, mismatches={bad[:5]}"


def check_sqrt_partition(limit=SQRT_CAP):
    bad = []
    for p in modarith.primes_up_to(limit)[1:]:
        squares = {x * x % p for x in range(p)}
        for a in range(p):
            got = modarith.sqrt_mod(a, p)
            if (got is not None) != (a in squares):
                bad.append((a, p))
            elif got and any(s * s % p != a for s in got):
                bad.append((a, p))
    return not bad, f"p<={limit}, failures={bad[:5]}"


def check_hensel_unique(limit=HENSEL_CAP, max_k=3):
    bad = []
    for p in modarith.primes_up_to(limit):
        for r in scan_roots(p):
            for k in range(2, max_k + 1):
                q = p**k
                lifts = [x for x in range(r, q, p) if (x * x - x - 1) % q == 0]
                got = modarith.hensel_lift_quadratic(r, p, k)
                if (got is None and lifts) or (got is not None and lifts != [got]):
                    bad.append((r, p, k))
    return not bad, f"p<={limit}, k<={max_k}, failures={bad[:5]}"


def check_sieve(limit=SIEVE_CAP):
    lo = max(2, limit - 20000)
    ok = modarith.sieve_primes(lo, limit).primes == trial_division_primes(lo, limit)
    ok &= modarith.sieve_primes(2, 5000, segment_size=97).primes == trial_division_primes(2, 5000)
    return ok, f"[{lo}, {limit}] and [2, 5000] in 97-wide segments"


def check_multiplicativity(limit=PAIR_CAP):
    ps = modarith.primes_up_to(limit)
    fp = {p: fibroot.characteristic_f(p, 1) for p in ps}
    bad = [(p, q) for i, p in enumerate(ps) for q in ps[i + 1:]
           if fibroot.characteristic_f_composite(p * q) != fp[p] * fp[q]]
    witness = fibroot.characteristic_f(5, 2) == 0 and fibroot.characteristic_f(5, 1) ** 2 == 1
    return not bad and witness, f"pairs<={limit}, failures={bad[:5]}, f(25)=0!=f(5)^2: {witness}"


def check_pf_residues(limit=SCAN_CAP):
    bad = [rec.p for rec in fibroot.enumerate_pf(limit)
           if rec.congruence_roots and rec.p != 5 and rec.p % 10 not in (1, 9)]
    return not bad, f"p<={limit}, failures={bad[:5]}"


def check_f_implies_nf(limit=SCAN_CAP, workers=1):
    nf = {rec.n for rec in fibroot.enumerate_nf(limit, workers=workers)}
    bad = [n for n in range(2, limit + 1) if fibroot.characteristic_f_composite(n) and n not in nf]
    gap = sum(1 for n in nf if not fibroot.characteristic_f_composite(n))
    return not bad, f"n<={limit}, violations={bad[:5]}, members with f=0: {gap}"


def check_paper_lists():
    pf = tuple(rec.p for rec in fibroot.enumerate_pf(1301))
    nf = tuple(rec.n for rec in fibroot.enumerate_nf(155))
    dup = sorted(set(nf) - set(PAPER_NF_HEAD))
    return pf == PAPER_PF_1301, f"P_F(1301) {len(pf)} primes; N_F<=155 adds {dup} vs printed list"


def run_all(limit, workers=1):
    """Run every check, each capped at its default scale and at limit."""
    checks = [
        ("order_equivalence", lambda: check_order_equivalence(min(limit, ORDER_CAP))),
        ("lambda_annihilates", lambda: check_lambda_annihilates(min(limit, SCAN_CAP))),
        ("lambda_divides_phi", lambda: check_lambda_divides_phi(min(limit, SCAN_CAP))),
        ("sqrt_partition", lambda: check_sqrt_partition(min(limit, SQRT_CAP))),
        ("hensel_unique", lambda: check_hensel_unique(min(limit, HENSEL_CAP))),
        ("sieve", lambda: check_sieve(max(min(limit, SIEVE_CAP), 100))),
        ("nf_membership", lambda: check_nf_membership(min(limit, SCAN_CAP), workers)),
        ("multiplicativity", lambda: check_multiplicativity(min(limit, PAIR_CAP))),
        ("pf_residues", lambda: check_pf_residues(min(limit, SCAN_CAP))),
        ("f_implies_nf", lambda: check_f_implies_nf(min(limit, SCAN_CAP), workers)),
        ("paper_lists", check_paper_lists),
    ]
    results = []
    for name, fn in checks:
        t = time.perf_counter()
        ok, detail = fn()
        results.append(CheckResult(name, bool(ok), detail, time.perf_counter() - t))
    return results

# Primes with a Fibonacci primitive root
#
# A prime p has a Fibonacci primitive root when x^2 = x + 1 (mod p) has a
# solution that generates the whole unit group.  The roots are
# (1 +- sqrt 5)/2 mod p, so only p = 5 and p = +-1 (mod 10) can qualify.

from collections import Counter

from fibroots import classify_prime, enumerate_pf

# p = 11: the congruence roots are 4 and 8; only 8 has order 10.
print(classify_prime(11))

# p = 29 has congruence roots too, but neither is primitive.
print(classify_prime(29))

# Everything up to 1301.
primes = [rec.p for rec in enumerate_pf(1301)]
print(len(primes), "primes:", primes)

# The residue classes mod 10 that show up.
print(Counter(p % 10 for p in primes))

# Class A primes cannot carry their root to p^2 with full order.  p = 5 is
# the only one below 10^5: 3 is a double root mod 5 and does not lift.
records = enumerate_pf(10**5)
print("class A:", [r.p for r in records if r.prime_class.value == "A"])
print("class B witnesses:", [(r.p, r.lift_witness) for r in records[1:6]])

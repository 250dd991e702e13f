# Fibonacci primitive roots modulo composite integers
#
# For composite n the target order is Carmichael's lambda(n), the exponent
# of the unit group.  Roots of x^2 = x + 1 mod n are glued together from
# the prime-power parts with the CRT.

from fibroots import carmichael_lambda, enumerate_nf, multiplicative_order, solve_fibonacci_roots
from fibroots.fibroot import nf_record

# n = 55: both roots have order 20 = lambda(55).
for r in solve_fibonacci_roots(55):
    print(r, multiplicative_order(r, 55), carmichael_lambda(55))

# 48 reaches order 20 even though 48 = 4 (mod 11) has order only 5 mod 11;
# lcm(4, 5) = 20 is enough.
print(multiplicative_order(48 % 11, 11), multiplicative_order(48 % 5, 5))

# The first members.  The commonly printed head of this list repeats 5*19
# where the scan finds 131 and 145 = 5 * 29.
print([rec.n for rec in enumerate_nf(160)])
print(nf_record(145))

# The multiplicative indicator f(n) asks every prime-power part to carry a
# full-order root on its own.  It undercounts the existential set.
recs = enumerate_nf(10**4)
print(len(recs), "integers up to 10^4;", sum(r.f_value for r in recs), "with f(n) = 1")
print("first with f = 0:", [r.n for r in recs if not r.f_value][:10])

# 5^2 has no root at all: (3 + 5k)^2 - (3 + 5k) - 1 = 5 (mod 25).
print(solve_fibonacci_roots(25), solve_fibonacci_roots(121))

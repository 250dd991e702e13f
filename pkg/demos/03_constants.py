# Density constants
#
# alpha_F = (27/38) prod_p (1 - 1/(p(p-1))) is the density of primes with
# a Fibonacci primitive root.  beta_F and gamma_F come from sums over
# those primes up to 1301, nu_F from a double series over the same set.

from fibroots import compute_alpha_f, compute_constants
from fibroots.analytics import compute_nu_f, gamma_defect

# The truncated product overshoots; the tail estimate tracks the gap.
for limit in (10**2, 10**4, 10**6, 10**8):
    est = compute_alpha_f(limit)
    print(f"{limit:>10}  {est.value:.15f}  +- {est.error_bound:.1e}")

report = compute_constants(prime_limit=1301)
for name, value, limit, err in report.rows():
    print(f"{name:<28} {value: .15f}  (limit {limit}, err ~{err:.1e})")

# nu_F: the commonly quoted 0.18862260088698849 is the k <= 10 truncation
# of the inner series; the closed form -log(1 - t) - t gives a bit more.
print(compute_nu_f(1301), compute_nu_f(1301, max_power=None))

# gamma_F - euler_gamma * alpha_F at a few truncations: clearly nonzero.
for x, d in gamma_defect([1301, 10**4, 10**5, 10**6]):
    print(x, d)

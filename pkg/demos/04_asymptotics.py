# Counting functions against their predicted leading terms
#
# P_F(x) ~ alpha_F x / log x, and N_F(x) against
# e^(gamma_F - gamma alpha_F) / Gamma(alpha_F) * x / (log x)^(1 - alpha_F)
# * prod_A (1 - 1/p^2).  Both are asymptotic statements, so at 10^6 the
# interesting part is the trend.

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from fibroots import compare_asymptotics, compute_constants
from fibroots.analytics import mertens_products

report = compute_constants()
xs = [10**k for k in range(2, 7)] + [3 * 10**k for k in range(2, 6)]
rows = compare_asymptotics(xs, report)

for row in rows:
    print(f"{row.which:<11} {row.x:>8} {row.exact_count:>12.6g} {row.predicted:>12.6g} {row.ratio:8.4f}")

# The three finite products at x = 1301 next to their predictions.
m = mertens_products(1301, report)
print([round(a / b, 4) for a, b in zip(m.exact, m.predicted)])

fig, ax = plt.subplots()
for which in ("P_F", "N_F", "sum_f"):
    pts = sorted((r.x, r.ratio) for r in rows if r.which == which)
    ax.semilogx(*zip(*pts), marker="o", label=which)
ax.axhline(1, color="grey", lw=0.5)
ax.set_xlabel("x")
ax.set_ylabel("exact / predicted")
ax.legend()
fig.savefig("asymptotic_ratios.png", dpi=120)
print("wrote asymptotic_ratios.png")

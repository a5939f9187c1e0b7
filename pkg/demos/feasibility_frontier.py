"""How much missing data is too much?

Before looking at any values, the observed-count product n'm'/(nm) already
decides whether significance is reachable at all. This prints the frontier
for a few designs and shows the blanket 30-percent rule.
"""

from rankguard import feasibility

print("threshold on n'm'/(nm) at alpha = 0.05:")
for n in (20, 50, 100, 200, 500, 1000):
    rep = feasibility(n, n, n, n, alpha=0.05)
    print(f"  n = m = {n:5d}: must keep n'm'/(nm) >= {rep.threshold:.4f}")

print("\nequal missing fraction s on both sides, n = m = 100:")
for s in (0.0, 0.10, 0.15, 0.20, 0.25, 0.30):
    kept = round(100 * (1 - s))
    rep = feasibility(100, 100, kept, kept, alpha=0.05)
    verdict = "possible" if rep.feasible else "hopeless"
    print(f"  s = {s:4.0%}: n'm'/(nm) = {rep.observed_fraction:.3f} vs {rep.threshold:.3f} -> {verdict}")

print("\nthe threshold never drops below 1/2, so 30 percent missing on both")
print("sides is hopeless for every alpha and every sample size:")
for alpha in (0.20, 0.05, 0.01):
    rep = feasibility(10000, 10000, 7000, 7000, alpha=alpha)
    print(f"  alpha = {alpha}: lhs = {rep.observed_fraction:.3f}, threshold = {rep.threshold:.4f},"
          f" feasible = {rep.feasible}")

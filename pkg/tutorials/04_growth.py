"""
Growth constants
================

Exact big-integer counts make u(n) ** (1/n) easy to watch converge.
"""

from circperm import formulas

for p in ("1324", "1342", "1234"):
    target = formulas.growth_constant(p)
    print(f"{p}: limit {target.value:.6f} ({target.description})")
    for n in (10, 100, 1000, 10000):
        u = formulas.closed_form(p, n)
        print(f"  n={n:5d}  u(n) has {len(str(u)):5d} digits, root {formulas.nth_root(u, n):.6f}")

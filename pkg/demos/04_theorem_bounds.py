#!/usr/bin/env python3
"""The theorem-level bounds: branch structure over lambda and p.

Sharp bounds for |a_2|, |a_3|, |a_4| and for the successive differences
|a_3 - a_2|, |a_4 - a_3| (under a pinned second coefficient), for both the
starlike and convex classes tied to exp(lam*z), lam in (0, pi/2].
"""

import math

from coefbound import (
    general_coeff_bound,
    k_coeff_bound,
    k_diff_bound,
    r0_root,
    s_diff_bound,
    s_star_coeff_bound,
    sup_over_p,
)

print("=" * 72)
print("1. Coefficient bounds and their breakpoints")
print("=" * 72)
r0 = r0_root()
print(f"  r0 = {r0:.12f} (root of 425 t^3 + 340 t^2 - 328 t - 240; "
      f"residual {abs(425 * r0**3 + 340 * r0**2 - 328 * r0 - 240):.1e})")
print(f"  |a4| branch breakpoints: 1/5, r0, sqrt(32/43) = {math.sqrt(32 / 43):.6f}")
print()
header = f"  {'lam':>6} | {'|a2|':>8} {'|a3|':>8} {'|a4|':>8} | a4 branch"
print(header)
print("  " + "-" * (len(header) - 2))
for lam in (0.1, 0.21, 0.5, 0.8, 0.861, 1.0, 1.4, math.pi / 2):
    b2 = s_star_coeff_bound(2, lam)
    b3 = s_star_coeff_bound(3, lam)
    b4 = s_star_coeff_bound(4, lam)
    print(f"  {lam:6.3f} | {b2.value:8.5f} {b3.value:8.5f} {b4.value:8.5f} | {b4.branch}")
print()
print("  convex bounds are exactly the starlike ones divided by n:")
for n in (2, 3, 4):
    s = s_star_coeff_bound(n, 1.0).value
    k = k_coeff_bound(n, 1.0).value
    print(f"    n={n}: starlike {s:.8f}  convex {k:.8f}  (k * n == s: {k * n == s})")

print()
print("=" * 72)
print("2. Successive-difference bounds at lambda = 1")
print("=" * 72)
print(f"  {'p':>5} | {'starlike d32':>12} {'starlike d43':>12} | {'p':>5} | "
      f"{'convex d32':>10} {'convex d43':>10}")
for i in range(5):
    ps, pc = i * 0.5, i * 0.25
    print(
        f"  {ps:5.2f} | {s_diff_bound('d32', 1.0, ps).value:12.8f} "
        f"{s_diff_bound('d43', 1.0, ps).value:12.8f} | {pc:5.2f} | "
        f"{k_diff_bound('d32', 1.0, pc).value:10.8f} "
        f"{k_diff_bound('d43', 1.0, pc).value:10.8f}"
    )
print()
print("  suprema over p at lambda = 1 (quoted values 7/10, 25/48, 19/60, 1/6):")
for cls, which in (("starlike", "d32"), ("starlike", "d43"), ("convex", "d32"), ("convex", "d43")):
    p_star, value = sup_over_p(cls, which, 1.0)
    print(f"    {cls:8s} {which}: sup = {value:.12f} at p* = {p_star:.10f}")

print()
print("=" * 72)
print("3. General |a_n| product bounds (any n, not always sharp)")
print("=" * 72)
for lam in (0.5, 1.0, math.pi / 2):
    row = ", ".join(f"a{n}<={general_coeff_bound('starlike', n, lam):.4f}" for n in range(2, 8))
    print(f"  lam={lam:.4f}: {row}")
print()
print("At lambda = 1 the starlike product bound is identically 1 for every n.")

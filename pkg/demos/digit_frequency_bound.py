"""
Digit frequencies bound dimension
=================================

Prescribing the limiting frequency p_i of each digit i carves out a set of
numbers whose dimension is at most an entropy-over-expansion ratio

    U_m(p) = (-sum p_i log p_i) / (sum p_i log(log(m-1) + i log m)).

The bound is maximized at an explicit interior vector p*, and even that
maximum stays strictly below 1 — so typical digit statistics already force
a (slightly) fractal set.
"""

import math

from contlog import (
    bound_curve,
    digit_slope_logs,
    freq_dim_upper,
    harmonic_check,
    max_freq_dim,
)

# ---------------------------------------------------------------------------
# The per-digit expansion rates entering the denominator, base 3:
print("base-3 expansion logs:", [f"{v:.6f}" for v in digit_slope_logs(3)])

# A few frequency vectors and their bounds (base 3 has two digits, so a
# vector is (p_1, p_2) with p_1 + p_2 = 1):
print("\nU_3 at sample vectors:")
for p1 in (0.30, 0.50, 0.60, 0.75):
    u = freq_dim_upper(3, (p1, 1 - p1))
    print(f"  p = ({p1:.2f}, {1 - p1:.2f})  ->  U_3 = {u:.9f}")

# ---------------------------------------------------------------------------
# The maximizer.  max_freq_dim solves the companion Moran equation; the
# optimal vector is p*_i = r_i^d with r_i the reciprocal expansion logs.
res = max_freq_dim(3)
print(f"\nmax over p of U_3(p): d = {res.d:.12f}")
print(f"  attained at p* = ({res.p_star.p[0]:.6f}, {res.p_star.p[1]:.6f})")
print(f"  check: U_3(p*) - d = {freq_dim_upper(res.p_star) - res.d:.2e}")

# The harmonic sum sum_i 1/(log(m-1) + i log m) (i.e. the Moran sum at
# exponent 1) stays below 1 for every base, which is exactly why d < 1:
print("\nharmonic check (< 1 forces d < 1):")
for m in (3, 4, 5, 8, 16):
    print(f"  m={m:2d}:  harmonic={harmonic_check(m):.6f}   d={max_freq_dim(m).d:.6f}")

# ---------------------------------------------------------------------------
# The whole base-3 curve p -> U_3(p, 1-p), coarsely sampled.  It is concave
# with an interior peak at p*_1 ~ 0.602; bound_curve_csv() emits the same
# table as CSV for plotting elsewhere.
print("\nU_3 curve (17-point sample):")
for p, u in bound_curve(17):
    bar = "#" * round(60 * u)
    print(f"  p={p:.4f}  U={u:.6f}  {bar}")
peak = max(bound_curve(999), key=lambda t: t[1])
print(f"\ncurve peak ~ {peak[1]:.9f} at p = {peak[0]:.3f}"
      f"  (true max {res.d:.9f} at {res.p_star.p[0]:.3f})")
assert peak[1] <= res.d + 1e-9 and math.isclose(peak[1], res.d, abs_tol=1e-4)

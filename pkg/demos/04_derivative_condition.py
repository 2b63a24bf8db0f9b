"""
When does the regrouped prefactor grow?
=======================================

In the regrouped product only the prefactor
f_N(sigma) = |1/2 e^{(B + S_N) s} (1 - s/rho_1)|^2 can shrink along a
half-line.  Its derivative is positive once

    (sigma - beta_1) / ((sigma - beta_1)^2 + (t0 - gamma_1)^2) > -(B + S_N),

and since -(B + S_N) falls to zero as zeros are added, enough zeros always
win for sigma > beta_1.  This script tabulates the deficit and the smallest
sufficient N at a few points.
"""

from xiprobe import bundled_zero_table, derivative_condition, fd_slope_check, minimal_N
from xiprobe.monotone import TableExhaustedError
from xiprobe.zeros import b_closed_form, b_deficit

table = bundled_zero_table()
print(f"B = {b_closed_form():.12f}")
for N in [0, 1, 10, 100, 1000, 10000]:
    print(f"  -(B + S_{N}) = {b_deficit(table, N):.6e}")

rep = derivative_condition(1.1, 0.0, table, 1)
print(f"\nsigma = 1.1, t0 = 0, N = 1: lhs {rep.lhs:.6f} vs rhs {rep.rhs:.6f} -> holds {rep.holds}")

print("\n sigma     t0   minimal N   f_N' at that N")
for sigma, t0 in [(1.1, 0.0), (0.6, 0.0), (0.51, 0.0), (2.0, 14.0), (5.0, -40.0), (0.4, 0.0)]:
    try:
        n = minimal_N(sigma, t0, table)
        print(f"{sigma:>6} {t0:>6} {n:>11}   {fd_slope_check(sigma, t0, table, n):+.3e}")
    except TableExhaustedError:
        print(f"{sigma:>6} {t0:>6}   exhausted   (sigma <= beta_1 or the table is too short)")

"""
Evaluating Riemann's xi function
================================

xi is entire, but its textbook definition multiplies poles by zeros.  This
script shows the values the package returns at those delicate points, the
functional equation xi(1 - s) = xi(s), and the log-scale evaluation that
keeps working when |xi| no longer fits in a double.
"""

import numpy as np

from xiprobe import functional_equation_residual, log_abs_xi, xi

# The pole of zeta at s = 1 and the zero of s - 1 cancel; so do the poles of
# Gamma(s/2) and the trivial zeros of zeta.
for s in [1, 0, 0.5, -2, -4, -6]:
    v = xi(s)
    print(f"xi({s:>4}) = {v.value.real:.15f}")

# The functional equation holds to rounding error across the plane.
rng = np.random.default_rng(0)
pts = rng.uniform(-5, 6, 200) + 1j * rng.uniform(-50, 50, 200)
res = [functional_equation_residual(s) for s in pts]
print(f"\nlargest |xi(s) - xi(1-s)| / |xi(s)| over 200 points: {max(res):.2e}")

# On the critical line xi is real, and it changes sign at each zeta zero.
for t in [14.0, 14.134725141734694, 14.3]:
    v = xi(0.5 + 1j * t)
    print(f"xi(1/2 + {t}i) = {v.value.real:+.6e}  (imag part {v.value.imag:.1e})")

# Far from the strip |xi| overflows; the log-modulus does not.
for sigma in [10, 100, 1000, 10000]:
    v = xi(sigma)
    shown = "overflow" if v.value is None else f"{v.value.real:.6e}"
    print(f"sigma = {sigma:>5}: log|xi| = {log_abs_xi(sigma):.10g}, value = {shown}")

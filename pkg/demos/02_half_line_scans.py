"""
Scanning |xi| along horizontal half-lines
=========================================

Outside the critical strip |xi(sigma + i t)| increases with sigma for
sigma > 1 and decreases for sigma < 0, whatever t is.  If every zero lies on
Re(s) = 1/2 the same holds on both sides of the critical line itself.  A
half-line that passes through a zero cannot be monotone.

Pass ``--plot`` to draw the scans (needs matplotlib).
"""

import sys

from xiprobe import HalfLineSpec, rh_probe, scan_half_line

for t0 in [0.0, 1.0, 5.0, 14.1347, 50.0]:
    right = scan_half_line(HalfLineSpec(t0, 1.01, 30.0, 0.01, "rightward"))
    left = scan_half_line(HalfLineSpec(t0, -30.0, -0.01, 0.01, "leftward"), cross_check=True)
    print(f"t0 = {t0:>8}: increasing on (1, 30]: {right.monotone}, "
          f"decreasing on [-30, 0): {left.monotone} "
          f"(mirror check {left.mirror_discrepancy:.1e})")

print()
for t0 in [0.0, 10.0, 21.022, 50.0]:
    r = rh_probe(t0, 10.0, 0.005)
    print(f"right of the critical line at t0 = {t0:>6}: monotone = {r.monotone} "
          f"({len(r.samples)} samples)")

# Through the first zero: |xi| drops toward sigma = 1/2 and rises after it.
through = scan_half_line(HalfLineSpec(14.134725, 0.4, 0.6, 0.001))
lo = min(through.samples, key=lambda p: p[1])
print(f"\nline t0 = 14.134725 through the first zero: monotone = {through.monotone}, "
      f"{len(through.violations)} violating steps, minimum log|xi| = {lo[1]:.2f} at sigma = {lo[0]:.3f}")

if "--plot" in sys.argv:
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7, 4))
    for t0 in [0.0, 14.1347, 50.0]:
        r = scan_half_line(HalfLineSpec(t0, -6.0, 7.0, 0.01))
        ax.plot(*zip(*r.samples), label=f"t0 = {t0}")
    ax.axvspan(0, 1, color="0.9")
    ax.set_xlabel("sigma")
    ax.set_ylabel("log |xi(sigma + i t0)|")
    ax.legend()
    fig.savefig("half_line_scans.png", dpi=120)
    print("wrote half_line_scans.png")

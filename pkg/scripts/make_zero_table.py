"""Regenerate the bundled zeta-zero table with mpmath.

Writes the ordinates of the first ``--count`` nontrivial zeros, one per line,
in the format read by :func:`xiprobe.zeros.load_zero_table`.  The run is
resumable: ordinates already present in the output file are kept.

    python scripts/make_zero_table.py --count 10000 \
        --out src/xiprobe/data/zeros_10000.txt

mpmath is only needed here and in the test oracles, not by the library.
"""
from __future__ import annotations

import argparse
from decimal import Decimal
from pathlib import Path

import mpmath as mp

HEADER = (
    "# Imaginary parts of the first {count} nontrivial zeros of zeta(s).\n"
    "# source: mpmath {version} zetazero(n), n = 1..{count}, mp.dps = {dps}\n"
    "# format: one ordinate per line, ascending, 12 decimal places\n"
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=10000)
    ap.add_argument("--dps", type=int, default=20)
    ap.add_argument("--out", type=Path, required=True)
    args = ap.parse_args()

    mp.mp.dps = args.dps
    partial = args.out.with_suffix(".partial")
    done = []
    if partial.exists():
        done = [ln for ln in partial.read_text().splitlines() if ln.strip()]

    with partial.open("a") as fh:
        for n in range(len(done) + 1, args.count + 1):
            gamma = mp.zetazero(n).imag
            fh.write(mp.nstr(gamma, 30, min_fixed=-1, max_fixed=50).strip() + "\n")
            fh.flush()

    rows = [ln for ln in partial.read_text().splitlines() if ln.strip()]
    quantum = Decimal("1e-12")
    body = "".join(f"{Decimal(r).quantize(quantum)}\n" for r in rows[: args.count])
    args.out.write_text(
        HEADER.format(count=args.count, version=mp.__version__, dps=args.dps) + body,
        encoding="utf-8",
    )
    partial.unlink()


if __name__ == "__main__":
    main()

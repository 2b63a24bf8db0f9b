"""
Truncated Hadamard products
===========================

xi(s) = 1/2 e^{Bs} prod (1 - s/rho) e^{s/rho} over all nontrivial zeros.
Cutting the product after N zero pairs, and optionally folding the
exponentials into the prefactor e^{(B + S_N) s}, gives the same number
either way; the truncation error at s = 2 falls roughly like log(N)/N.
"""

from xiprobe import TruncationSpec, bundled_zero_table, truncated_xi, xi
from xiprobe.hadamard import relative_error

table = bundled_zero_table()
print(f"zero table: {len(table)} zeros, source {table.source}\n")

exact = xi(2)
print("   N   paired error   regrouped error")
for N in [1, 10, 100, 1000, 10000]:
    p = truncated_xi(2, table, TruncationSpec(N, "paired"))
    r = truncated_xi(2, table, TruncationSpec(N, "regrouped"))
    print(f"{N:>5}   {relative_error(p, exact):.3e}      {relative_error(r, exact):.3e}")

# Away from the real axis the product still converges, more slowly.
s = 0.8 + 30j
print(f"\nat s = {s}:")
for N in [10, 100, 1000, 10000]:
    r = truncated_xi(s, table, TruncationSpec(N))
    print(f"  N = {N:>5}: relative error {relative_error(r, xi(s)):.3e}")

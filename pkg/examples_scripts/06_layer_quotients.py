"""2-periodic quotients of a 3-periodic net.

Dividing a net by a rank-1 subgroup of its translations produces a
layer.  Different choices of the rolled-up vector give layers that are
locally similar but differ in topological density (cumulative
coordination sequence) and in the rings that wrap the lost period.
"""

from fractions import Fraction

from crystpres import (
    catalog_load,
    quotient_by_sublattice,
    schlafli_symbol,
    topological_density,
)

ths = catalog_load("ths")
print("parent:", ths.name, "TD10 =", topological_density(ths, 0, 10),
      "rings", schlafli_symbol(ths, max_size=12))

vectors = [
    (Fraction(5, 2), Fraction(5, 2), Fraction(1, 2)),
    (2, 2, 1),
    (Fraction(1, 2), Fraction(1, 2), Fraction(-3, 2)),
]
for v in vectors:
    q = quotient_by_sublattice(ths, [v])
    td = topological_density(q, 0, 10)
    symbol = schlafli_symbol(q, max_size=12)
    print(f"quotient by {tuple(map(str, v))}: rank {q.rank},"
          f" TD10 = {td}, rings {symbol}")

"""Geodesic counting on the square lattice and a rolled-up quotient.

The number of shortest walks from the origin to (p, q) on the square
lattice is the binomial coefficient C(p+q, p); the breadth-first
counter reproduces it, and an independent dynamic-programming oracle
cross-checks.  Rolling the lattice along (4, 12) produces a tube whose
collar rings have exactly as many members as there are geodesics.
"""

from math import comb

from crystpres import (
    catalog_load,
    lattice_geodesic_count,
    net_geodesics,
    quotient_by_sublattice,
    ring_size_counts,
)

sql = catalog_load("sql")

for target in [(4, 12), (5, 12)]:
    length, count = net_geodesics(sql, target)
    oracle = lattice_geodesic_count(target)
    binom = comb(sum(target), min(target))
    print(f"target {target}: length {length}, count {count}"
          f" (oracle {oracle}, binomial {binom})")

tube = quotient_by_sublattice(sql, [(4, 12)])
print("\ntube vertices per repeat unit:", tube.n)
print("strong rings up to size 16:", ring_size_counts(tube, max_size=16))

"""Strong-ring symbols for the bundled periodic nets.

A ring is strong when it is not a sum (mod 2, over edge sets) of
strictly smaller cycles.  The per-vertex multiset of strong-ring sizes
is a compact topological fingerprint, printed here for every net in
the catalog together with its coordination sequence.
"""

from crystpres import (
    catalog_load,
    catalog_names,
    net_coordination_sequence,
    schlafli_symbol,
)

# search caps chosen just past the largest strong ring of each net
CAPS = {"pcu": 6, "sql": 6, "hcb": 8, "dia": 8, "nbo": 8, "qtz": 8,
        "gis": 8, "ths": 12, "srs": 12}

for name in catalog_names():
    g = catalog_load(name)
    cs = net_coordination_sequence(g, 0, 5)
    symbol = schlafli_symbol(g, max_size=CAPS[name])
    print(f"{name:4s} rank {g.rank} vertices {g.n:2d}"
          f"  rings {str(symbol):12s} cs {cs}")

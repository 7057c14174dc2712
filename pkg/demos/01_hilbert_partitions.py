"""
Hilbert partitions of R + (X1, X2)R
===================================

The module is the free module R next to the maximal ideal of R = K[X1, X2].
We look at its Hilbert function on a finite box, split that table into
intervals, and read off the Hilbert depth.
"""

from pathlib import Path

import numpy as np

from hilbertdepth import (
    count_partitions,
    enumerate_partitions,
    hdepth,
    hilbert_table,
    induced_decomposition,
    parse_spec,
)

spec = parse_spec((Path(__file__).parent / "specs" / "r_max.json").read_text())

# Beyond g every multiplication by a variable is an isomorphism, so the box [0, g] says it all
table = hilbert_table(spec)
print("g =", table.g)
print(table.values)
print("as a polynomial:", table.to_polynomial(spec.var_names))

# Count the interval partitions whose intervals each reach the top of the box in >= d directions
for d in range(spec.n + 1):
    print(f"partitions with depth >= {d}: {count_partitions(table, d)}")

depth, witness = hdepth(table)
print("Hilbert depth:", depth)

# Each interval turns into one or more free pieces K[Z](-c) of the positive extension
for p in enumerate_partitions(table, depth)[:3]:
    print([(iv.lower, iv.upper) for iv in p.intervals])
    print("   ->", induced_decomposition(p).format(spec.var_names))

# Sanity check: every partition reproduces the table
assert all(np.array_equal(p.table().values, table.values) for p in enumerate_partitions(table, 0))

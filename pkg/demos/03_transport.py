"""
Adding and removing variables
=============================

Adjoining m free variables raises both depths by exactly m.  Setting
variables to 1 goes the other way and can only lose a bounded amount.
"""

from pathlib import Path

from hilbertdepth import (
    enumerate_partitions,
    extend_scalars,
    hdepth,
    hilbert_table,
    parse_spec,
    specialize_ideal_spec,
    specialize_partition,
    specialize_table,
    stdepth,
)

specs = Path(__file__).parent / "specs"
ideal = parse_spec((specs / "xy_xz.json").read_text())


def depths(spec):
    return hdepth(hilbert_table(spec))[0], stdepth(spec)[0]


print("(XY, XZ): Hilbert depth, Stanley depth =", depths(ideal))
for m in (1, 2):
    print(f"  with {m} new variable(s):", depths(extend_scalars(ideal, m)))

# Setting Y = Z = 1 turns (XY, XZ) into the principal ideal (X)
small = specialize_ideal_spec(ideal, 1)
print("specialized generators:", small.summands[0].numerator.generators)
print("(X): depths =", depths(small))

# Intervals project down; each copy is repeated by the size of the dropped sides
table = hilbert_table(ideal)
p = enumerate_partitions(table, 0, limit=1)[0]
q = specialize_partition(p, 1)
print([(iv.lower, iv.upper) for iv in p.intervals])
print("  ->", [(iv.lower, iv.upper) for iv in q.intervals])
print("tables agree:", q.table() == specialize_table(table, 1))

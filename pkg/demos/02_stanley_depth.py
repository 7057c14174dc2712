"""
When Stanley depth falls below Hilbert depth
============================================

K + X2 K[X2] + X2 K[X1, X2] has a depth-one Hilbert partition, yet no
depth-one Stanley decomposition: the copy of K in degree (0, 0) is killed by
both variables.
"""

from pathlib import Path

from hilbertdepth import (
    StanleyCandidate,
    annihilator_free,
    check_stanley_candidate,
    component_basis,
    enumerate_partitions,
    generic_stanley_check,
    hdepth,
    hilbert_table,
    induced_decomposition,
    parse_spec,
    stdepth,
)

specs = Path(__file__).parent / "specs"
bad = parse_spec((specs / "mixed.json").read_text())
good = parse_spec((specs / "r_max.json").read_text())

table = hilbert_table(bad)
print("table:", table.to_polynomial(bad.var_names))
print("Hilbert depth:", hdepth(table)[0])

# Every depth-one decomposition wants a free K[X_i] generated in degree (0, 0)
(origin,) = component_basis(bad, (0, 0))
for p in enumerate_partitions(table, 1):
    dec = induced_decomposition(p)
    print(dec.format(bad.var_names))
    for c in dec.components:
        if c.shift == (0, 0):
            print("   free over", sorted(c.vars), "at the origin?", annihilator_free(bad, origin, c.vars))

depth, witness = stdepth(bad)
print("Stanley depth:", depth)
print(witness.format(bad.var_names))

# For the well-behaved module the generic search finds actual generators
dec = induced_decomposition(enumerate_partitions(hilbert_table(good), 1)[0])
cand = generic_stanley_check(good, dec)
print("generators found:", [tuple(str(x) for x in ch) for ch in cand.choices])
print("certified:", check_stanley_candidate(good, cand))

# A hand-made certificate can be checked the same way
print("hand-made:", check_stanley_candidate(good, StanleyCandidate(dec, cand.choices)))

"""Values transcribed from the worked examples (two-variable modules, g = (1, 1))."""

ONE = ((0, 0), (1, 1))  # 1 + X1 + X2 + X1X2
A1 = ((0, 0), (1, 0))  # 1 + X1
A2 = ((0, 0), (0, 1))  # 1 + X2
B1 = ((1, 0), (1, 1))  # X1 + X1X2
B2 = ((0, 1), (1, 1))  # X2 + X1X2
S1 = ((1, 0), (1, 0))  # X1
S2 = ((0, 1), (0, 1))  # X2
S12 = ((1, 1), (1, 1))  # X1X2

# R + (X1, X2)R: the thirteen partitions with every right end of degree >= 1
RMAX_PARTITIONS = {
    "P1": [ONE, B1, S2],
    "P2": [ONE, B2, S1],
    "P3": [ONE, S1, S2, S12],
    "P4": [A1, B1, S2, S2, S12],
    "P5": [A1, B1, S2, B2],
    "P6": [A1, B2, B2, S1],
    "P7": [A1, B2, S1, S2, S12],
    "P8": [A1, S1, S2, S2, S12, S12],
    "P9": [A2, B2, S1, S1, S12],
    "P10": [A2, B1, B1, S2],
    "P11": [A2, B1, B2, S1],
    "P12": [A2, B1, S1, S2, S12],
    "P13": [A2, S1, S1, S2, S12, S12],
}

X1, X2, X12 = frozenset({0}), frozenset({1}), frozenset({0, 1})

# induced decompositions as (variables, shift)
RMAX_D_P1 = [(X12, (0, 0)), (X12, (1, 0)), (X2, (0, 1))]
RMAX_D_P3 = [(X12, (0, 0)), (X12, (1, 1)), (X1, (1, 0)), (X2, (0, 1))]

# R/(X1,X2) + X2 R/(X1) + X2 R
MIXED_PARTITIONS = {
    "P1": [A2, B2],
    "P2": [A2, S2, S12],
}
MIXED_D = {
    "P1": [(X2, (0, 0)), (X12, (0, 1))],
    "P2": [(X2, (0, 0)), (X2, (0, 1)), (X12, (1, 1))],
}

# explicit Stanley generators for R + (X1,X2)R; coordinates are over the
# summands nonzero in the shift degree, in summand order (R first)
RMAX_STANLEY_P1 = [((1,),), ((0, 1),), ((0, 1),)]

"""Degree vectors, the componentwise order on Z^n, and boxes [0, g].

Degree vectors are plain tuples of ints.  Variable sets are frozensets of
0-based variable indices; names only appear when printing.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from math import prod
from typing import Callable, Iterator, Sequence

Degree = tuple[int, ...]
VarSet = frozenset[int]


class DimensionError(ValueError):
    """Degree vectors of different lengths were combined."""


class DomainError(ValueError):
    """A degree vector lies outside the region an operation is defined on."""


class Order(enum.Enum):
    LESS_EQUAL = "<="
    GREATER_EQUAL = ">="
    EQUAL = "=="
    INCOMPARABLE = "||"


def _check_same_length(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} vs {len(b)}")


def as_degree(values: Sequence[int]) -> Degree:
    """Coerce a sequence to a degree vector, rejecting non-integers."""
    out = []
    for v in values:
        if isinstance(v, bool) or int(v) != v:
            raise TypeError(f"degree coordinates must be integers, got {v!r}")
        out.append(int(v))
    return tuple(out)


def zero(n: int) -> Degree:
    return (0,) * n


def unit(n: int, i: int) -> Degree:
    """The i-th unit vector (0-based)."""
    return tuple(1 if j == i else 0 for j in range(n))


def leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Componentwise a <= b."""
    _check_same_length(a, b)
    return all(x <= y for x, y in zip(a, b))


def partial_cmp(a: Sequence[int], b: Sequence[int]) -> Order:
    _check_same_length(a, b)
    le = all(x <= y for x, y in zip(a, b))
    ge = all(x >= y for x, y in zip(a, b))
    if le and ge:
        return Order.EQUAL
    if le:
        return Order.LESS_EQUAL
    if ge:
        return Order.GREATER_EQUAL
    return Order.INCOMPARABLE


def meet_join(a: Sequence[int], b: Sequence[int]) -> tuple[Degree, Degree]:
    """Componentwise (min, max)."""
    _check_same_length(a, b)
    return (
        tuple(min(x, y) for x, y in zip(a, b)),
        tuple(max(x, y) for x, y in zip(a, b)),
    )


def join_all(vectors: Sequence[Sequence[int]], n: int) -> Degree:
    """Join of a family of vectors; the zero vector for an empty family."""
    out = zero(n)
    for v in vectors:
        out = meet_join(out, v)[1]
    return out


def add(a: Sequence[int], b: Sequence[int]) -> Degree:
    _check_same_length(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> Degree:
    _check_same_length(a, b)
    return tuple(x - y for x, y in zip(a, b))


@dataclass(frozen=True, order=True)
class Interval:
    """The lattice interval [lower, upper] = {c : lower <= c <= upper}."""

    lower: Degree
    upper: Degree

    def __post_init__(self):
        object.__setattr__(self, "lower", as_degree(self.lower))
        object.__setattr__(self, "upper", as_degree(self.upper))
        if not leq(self.lower, self.upper):
            raise DomainError(f"empty interval: {self.lower} is not <= {self.upper}")

    @property
    def n(self) -> int:
        return len(self.lower)

    @property
    def size(self) -> int:
        return prod(b - a + 1 for a, b in zip(self.lower, self.upper))

    def points(self) -> Iterator[Degree]:
        """Lattice points in lexicographic order."""
        return itertools.product(*(range(a, b + 1) for a, b in zip(self.lower, self.upper)))

    def __contains__(self, c) -> bool:
        return leq(self.lower, c) and leq(c, self.upper)

    def slices(self) -> tuple[slice, ...]:
        """Index expression selecting this interval from an array over [0, g]."""
        return tuple(slice(a, b + 1) for a, b in zip(self.lower, self.upper))

    def check_in_box(self, g: Sequence[int]) -> None:
        _check_same_length(self.upper, g)
        if min(self.lower, default=0) < 0 or not leq(self.upper, g):
            raise DomainError(f"interval {self} does not lie in the box [0, {tuple(g)}]")


def q_interval(iv: Interval) -> dict[Degree, int]:
    """Coefficients of the polynomial induced by an interval: 1 on every point."""
    return {c: 1 for c in iv.points()}


def z_set(b: Sequence[int], g: Sequence[int]) -> VarSet:
    """Indices j with b_j == g_j."""
    if not leq(b, g):
        raise DomainError(f"{tuple(b)} is not <= g={tuple(g)}")
    return frozenset(j for j, (x, y) in enumerate(zip(b, g)) if x == y)


def rho(b: Sequence[int], g: Sequence[int]) -> int:
    return len(z_set(b, g))


def g_set(iv: Interval, g: Sequence[int]) -> list[Degree]:
    """Points of the interval frozen at the lower corner wherever upper meets g.

    Each returned point c gives one free component K[Z_upper](-c) of the
    positive extension of the interval.
    """
    iv.check_in_box(g)
    ranges = []
    for a, b, gj in zip(iv.lower, iv.upper, g):
        ranges.append(range(a, a + 1) if b == gj else range(a, b + 1))
    return list(itertools.product(*ranges))


def box_iter(
    g: Sequence[int], key: Callable[[Degree], object] | None = None
) -> Iterator[Degree]:
    """All points of [0, g], lexicographic by default.

    ``key`` selects another total order; it must refine the componentwise
    order (checked when given).
    """
    if min(g, default=0) < 0:
        raise DomainError(f"box bound {tuple(g)} has a negative coordinate")
    points = itertools.product(*(range(x + 1) for x in g))
    if key is None:
        return points
    ordered = sorted(points, key=key)
    rank = {p: i for i, p in enumerate(ordered)}
    for p in ordered:
        for j in range(len(p)):
            if p[j] < g[j]:
                q = p[:j] + (p[j] + 1,) + p[j + 1 :]
                if rank[q] < rank[p]:
                    raise ValueError("ordering key is not a linear extension of the componentwise order")
    return iter(ordered)


def box_size(g: Sequence[int]) -> int:
    return prod(x + 1 for x in g)


def format_monomial(c: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for e, name in zip(c, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_varset(vars_: VarSet, names: Sequence[str]) -> str:
    return "K[" + ",".join(names[j] for j in sorted(vars_)) + "]"

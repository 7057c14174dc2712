"""Hilbert partitions of a truncated Hilbert polynomial and their decompositions.

The search is an exact cover with multiplicities.  Scanning the box in
lexicographic order, the first point ``c`` still carrying multiplicity must
be the lower corner of some interval in every completion: an interval
covering ``c`` has its lower corner below ``c``, and every point before
``c`` is already exhausted.  So each node branches only over upper corners
``b >= c``.  Upper corners chosen at the same lower corner are forced to be
non-decreasing, which yields every multiset of intervals exactly once and
in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import islice
from typing import Callable, Iterator, Sequence

import numpy as np

from .lattice import (
    Degree,
    DomainError,
    Interval,
    VarSet,
    as_degree,
    box_iter,
    format_varset,
    g_set,
    leq,
    rho,
    sub,
    z_set,
)
from .module_spec import HilbertTable

IntervalFilter = Callable[[Interval], bool]


class InconsistentPartitionError(ValueError):
    """Intervals do not add up to the expected table."""


@dataclass(frozen=True)
class HilbertPartition:
    """A multiset of intervals inside [0, g], kept sorted."""

    g: Degree
    intervals: tuple[Interval, ...]

    def __post_init__(self):
        object.__setattr__(self, "g", as_degree(self.g))
        ivs = tuple(sorted(self.intervals))
        for iv in ivs:
            iv.check_in_box(self.g)
        object.__setattr__(self, "intervals", ivs)

    @property
    def n(self) -> int:
        return len(self.g)

    @property
    def depth(self) -> int:
        return depth_of_partition(self)

    def table(self) -> HilbertTable:
        values = np.zeros(tuple(x + 1 for x in self.g), dtype=np.int64)
        for iv in self.intervals:
            values[iv.slices()] += 1
        return HilbertTable(self.g, values)

    def is_partition_of(self, table: HilbertTable) -> bool:
        return self.g == table.g and self.table() == table

    def to_dict(self) -> dict:
        return {
            "g": list(self.g),
            "intervals": [[list(iv.lower), list(iv.upper)] for iv in self.intervals],
        }

    @classmethod
    def from_dict(cls, data) -> HilbertPartition:
        try:
            g = as_degree(data["g"])
            ivs = tuple(Interval(as_degree(a), as_degree(b)) for a, b in data["intervals"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed partition: {exc}") from exc
        return cls(g, ivs)


@dataclass(frozen=True)
class HilbertComponent:
    """The free summand K[vars](-shift)."""

    vars: VarSet
    shift: Degree

    def hilbert_function(self, a: Sequence[int]) -> int:
        if not leq(self.shift, a):
            return 0
        return int(all(t == 0 or j in self.vars for j, t in enumerate(sub(a, self.shift))))

    def format(self, names: Sequence[str]) -> str:
        return f"{format_varset(self.vars, names)}(-{self.shift})"


@dataclass(frozen=True)
class HilbertDecomposition:
    n: int
    components: tuple[HilbertComponent, ...]

    @property
    def depth(self) -> int:
        return min((len(c.vars) for c in self.components), default=self.n)

    def hilbert_function(self, a: Sequence[int]) -> int:
        return sum(c.hilbert_function(a) for c in self.components)

    def format(self, names: Sequence[str]) -> str:
        if not self.components:
            return "0"
        return " + ".join(c.format(names) for c in self.components)


def depth_of_partition(p: HilbertPartition) -> int:
    """Minimum of rho over upper corners; n for the empty partition."""
    return min((rho(iv.upper, p.g) for iv in p.intervals), default=p.n)


def induced_decomposition(p: HilbertPartition) -> HilbertDecomposition:
    comps = []
    for iv in p.intervals:
        z = z_set(iv.upper, p.g)
        comps.extend(HilbertComponent(z, c) for c in g_set(iv, p.g))
    return HilbertDecomposition(p.n, tuple(comps))


def partition_from_decomposition(
    dec: HilbertDecomposition, g: Sequence[int], table: HilbertTable | None = None
) -> HilbertPartition:
    """Truncate each component to the box; components starting outside are dropped."""
    g = as_degree(g)
    ivs = []
    for comp in dec.components:
        if not leq(comp.shift, g):
            continue
        if min(comp.shift, default=0) < 0:
            raise DomainError(f"component shift {comp.shift} is not in N^n")
        upper = tuple(gj if j in comp.vars else sj for j, (sj, gj) in enumerate(zip(comp.shift, g)))
        ivs.append(Interval(comp.shift, upper))
    p = HilbertPartition(g, tuple(ivs))
    if table is not None and not p.is_partition_of(table):
        raise InconsistentPartitionError("decomposition is not a Hilbert decomposition of this table")
    return p


# --- search ---------------------------------------------------------------


class _Search:
    """Backtracking state for one (table, depth, filter) problem."""

    def __init__(self, table: HilbertTable, d: int, interval_filter: IntervalFilter | None):
        if not 0 <= d <= table.n:
            raise ValueError(f"depth bound must lie in 0..{table.n}")
        self.table = table
        self.g = table.g
        self.d = d
        self.filter = interval_filter
        self.shape = table.values.shape
        self.points = list(box_iter(self.g))
        self.uppers = [b for b in self.points if rho(b, self.g) >= d]
        self._branch_cache: dict[Degree, list[tuple[int, Interval]]] = {}

    def branches(self, c: Degree) -> list[tuple[int, Interval]]:
        """Candidate intervals with lower corner c, with the rank of the upper corner."""
        out = self._branch_cache.get(c)
        if out is None:
            out = []
            for rank, b in enumerate(self.uppers):
                if leq(c, b):
                    iv = Interval(c, b)
                    if self.filter is None or self.filter(iv):
                        out.append((rank, iv))
            self._branch_cache[c] = out
        return out

    def first_positive(self, rem: np.ndarray) -> Degree | None:
        nz = np.flatnonzero(rem)
        if nz.size == 0:
            return None
        return tuple(int(i) for i in np.unravel_index(nz[0], self.shape))

    def coverable(self, rem: np.ndarray) -> bool:
        """Fail fast when some positive point fits under no admissible upper corner.

        Any interval through p contains [p, b] for its upper corner b, so
        positive mass on [p, b] for some b with rho(b) >= d is necessary.
        """
        if self.d == 0:
            return True
        for idx in np.argwhere(rem > 0):
            p = tuple(int(i) for i in idx)
            if not any(
                leq(p, b) and (rem[Interval(p, b).slices()] > 0).all() for b in self.uppers
            ):
                return False
        return True

    def walk(self, rem: np.ndarray, chosen: list[Interval], floor: tuple[Degree, int] | None):
        c = self.first_positive(rem)
        if c is None:
            yield tuple(chosen)
            return
        if not self.coverable(rem):
            return
        start = floor[1] if floor is not None and floor[0] == c else -1
        for rank, iv in self.branches(c):
            if rank < start:
                continue
            sl = iv.slices()
            if not (rem[sl] > 0).all():
                continue
            rem[sl] -= 1
            chosen.append(iv)
            yield from self.walk(rem, chosen, (c, rank))
            chosen.pop()
            rem[sl] += 1

    def count(self) -> int:
        @lru_cache(maxsize=None)
        def count_from(key: bytes, floor: tuple[Degree, int] | None) -> int:
            rem = np.frombuffer(key, dtype=np.int64).reshape(self.shape).copy()
            c = self.first_positive(rem)
            if c is None:
                return 1
            if not self.coverable(rem):
                return 0
            start = floor[1] if floor is not None and floor[0] == c else -1
            total = 0
            for rank, iv in self.branches(c):
                if rank < start:
                    continue
                sl = iv.slices()
                if not (rem[sl] > 0).all():
                    continue
                rem[sl] -= 1
                nxt = self.first_positive(rem)
                total += count_from(rem.tobytes(), (c, rank) if nxt == c else None)
                rem[sl] += 1
            return total

        rem = np.array(self.table.values, dtype=np.int64)
        return count_from(rem.tobytes(), None)


def iter_partitions(
    table: HilbertTable, d: int = 0, interval_filter: IntervalFilter | None = None
) -> Iterator[HilbertPartition]:
    """All partitions of depth >= d in canonical (lexicographic) order.

    ``interval_filter`` excludes intervals up front; the result is the same
    as discarding afterwards every partition containing an excluded interval.
    """
    search = _Search(table, d, interval_filter)
    rem = np.array(table.values, dtype=np.int64)
    for ivs in search.walk(rem, [], None):
        yield HilbertPartition(table.g, ivs)


def enumerate_partitions(
    table: HilbertTable,
    d: int = 0,
    limit: int | None = None,
    interval_filter: IntervalFilter | None = None,
) -> list[HilbertPartition]:
    return list(islice(iter_partitions(table, d, interval_filter), limit))


def count_partitions(
    table: HilbertTable, d: int = 0, interval_filter: IntervalFilter | None = None
) -> int:
    """Number of partitions of depth >= d, without materializing them."""
    return _Search(table, d, interval_filter).count()


def exists_partition(
    table: HilbertTable, d: int, interval_filter: IntervalFilter | None = None
) -> HilbertPartition | None:
    return next(iter_partitions(table, d, interval_filter), None)


def hdepth(table: HilbertTable) -> tuple[int, HilbertPartition]:
    """Hilbert depth of the table and a partition attaining it."""
    for d in range(table.n, -1, -1):
        p = exists_partition(table, d)
        if p is not None:
            return d, p
    raise AssertionError("the partition into singletons always exists")


def specialize_partition(p: HilbertPartition, keep: int) -> HilbertPartition:
    """Drop trailing coordinates; an interval is repeated by the size of what it loses."""
    if not 0 < keep <= p.n:
        raise ValueError(f"keep must lie in 1..{p.n}")
    ivs = []
    for iv in p.intervals:
        mult = 1
        for a, b in zip(iv.lower[keep:], iv.upper[keep:]):
            mult *= b - a + 1
        ivs.extend([Interval(iv.lower[:keep], iv.upper[:keep])] * mult)
    return HilbertPartition(p.g[:keep], tuple(ivs))

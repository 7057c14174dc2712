"""Deciding which Hilbert decompositions come from Stanley decompositions.

Coefficients live in Q.  Everything reduces to the box [0, g]: a choice of
generators m_i gives a Stanley decomposition iff no m_i is killed inside its
box and the products X^t m_i landing in [0, g] are linearly independent.
Because the modules here are monomial, that family splits by degree into
square blocks (one per point of the box), each checked by an exact rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import sympy

from ._linalg import rank
from .lattice import Degree, DomainError, Interval, VarSet, box_iter, g_set, leq, sub, z_set
from .module_spec import (
    ComponentBasisElement,
    ModuleElement,
    ModuleSpec,
    _resolve_g,
    component_basis,
    hilbert_table,
    is_dim_le_1,
    multiply_element,
)
from .partitions import (
    HilbertDecomposition,
    HilbertPartition,
    exists_partition,
    induced_decomposition,
    iter_partitions,
)


class PreconditionError(ValueError):
    """An algorithm was called on a module it does not apply to."""


@dataclass(frozen=True)
class StanleyCandidate:
    """A Hilbert decomposition plus one generator per component.

    ``choices[i]`` holds coordinates of m_i in ``component_basis(spec, s_i)``.
    """

    decomposition: HilbertDecomposition
    choices: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        choices = tuple(tuple(Fraction(x) for x in ch) for ch in self.choices)
        if len(choices) != len(self.decomposition.components):
            raise ValueError(
                f"{len(choices)} choices for {len(self.decomposition.components)} components"
            )
        object.__setattr__(self, "choices", choices)

    def generators(self, spec: ModuleSpec) -> list[ModuleElement]:
        out = []
        for comp, choice in zip(self.decomposition.components, self.choices):
            basis = component_basis(spec, comp.shift)
            if len(choice) != len(basis):
                raise ValueError(
                    f"choice for degree {comp.shift} has {len(choice)} coordinates, "
                    f"but the component has dimension {len(basis)}"
                )
            coeffs = tuple((e.summand_index, x) for e, x in zip(basis, choice) if x != 0)
            out.append(ModuleElement(comp.shift, coeffs))
        return out


@dataclass(frozen=True)
class StanleyPart:
    generator: ModuleElement
    vars: VarSet


@dataclass(frozen=True)
class StanleyDecomposition:
    n: int
    parts: tuple[StanleyPart, ...]

    @property
    def depth(self) -> int:
        return min((len(p.vars) for p in self.parts), default=self.n)

    def format(self, names: Sequence[str]) -> str:
        if not self.parts:
            return "0"
        out = []
        for p in self.parts:
            gen = " + ".join(f"{c}*e{k + 1}" for k, c in p.generator.coefficients)
            vs = ",".join(names[j] for j in sorted(p.vars))
            out.append(f"({gen})@{p.generator.degree} K[{vs}]")
        return " (+) ".join(out)


def _as_element(e: ComponentBasisElement | ModuleElement) -> ModuleElement:
    return ModuleElement.from_basis(e) if isinstance(e, ComponentBasisElement) else e


def _annihilator_box(s: Degree, vars_: VarSet, g: Degree) -> Interval:
    return Interval(s, tuple(gj if j in vars_ else sj for j, (sj, gj) in enumerate(zip(s, g))))


def annihilator_free(
    spec: ModuleSpec,
    element: ComponentBasisElement | ModuleElement,
    vars_: VarSet,
    g: Sequence[int] | None = None,
) -> bool:
    """True iff no monomial in the variables ``vars_`` kills the element.

    Only exponents reaching up to g are tried; past g multiplication is
    injective because the module is positively g-determined.
    """
    g = _resolve_g(spec, g)
    m = _as_element(element)
    if m.is_zero:
        raise ValueError("annihilator check needs a nonzero element")
    if not leq(m.degree, g):
        raise DomainError(f"element degree {m.degree} is not <= g={g}")
    for c in _annihilator_box(m.degree, frozenset(vars_), g).points():
        if multiply_element(spec, m, sub(c, m.degree)).is_zero:
            return False
    return True


def _decomposition_matches(spec: ModuleSpec, dec: HilbertDecomposition, g: Degree) -> bool:
    table = hilbert_table(spec, g)
    return all(dec.hilbert_function(c) == v for c, v in table.items())


def _block_columns(dec: HilbertDecomposition, c: Degree) -> list[int]:
    """Components i whose space K[vars_i] m_i reaches degree c."""
    return [i for i, comp in enumerate(dec.components) if comp.hilbert_function(c)]


def diagnose_candidate(
    spec: ModuleSpec, cand: StanleyCandidate, g: Sequence[int] | None = None
) -> str | None:
    """None if the candidate is a Stanley decomposition, else the reason it is not."""
    g = _resolve_g(spec, g)
    dec = cand.decomposition
    for comp in dec.components:
        if not leq(comp.shift, g):
            raise DomainError(f"component shift {comp.shift} is not <= g={g}")
    gens = cand.generators(spec)
    for i, (m, comp) in enumerate(zip(gens, dec.components)):
        if m.is_zero:
            raise ValueError(f"choice for component {i} is zero")
    if not _decomposition_matches(spec, dec, g):
        return "the components do not form a Hilbert decomposition of the module"
    for i, (m, comp) in enumerate(zip(gens, dec.components)):
        if not annihilator_free(spec, m, comp.vars, g):
            return f"component {i}: generator in degree {comp.shift} is annihilated by a monomial in its variables"
    for c in box_iter(g):
        rows = {e.summand_index: r for r, e in enumerate(component_basis(spec, c))}
        cols = _block_columns(dec, c)
        if not cols:
            continue
        matrix = [[Fraction(0)] * len(cols) for _ in rows]
        for col, i in enumerate(cols):
            prod = multiply_element(spec, gens[i], sub(c, gens[i].degree))
            for k, x in prod.coefficients:
                matrix[rows[k]][col] = x
        if rank(matrix) < len(cols):
            return f"the products landing in degree {c} are linearly dependent"
    return None


def check_stanley_candidate(
    spec: ModuleSpec, cand: StanleyCandidate, g: Sequence[int] | None = None
) -> bool:
    return diagnose_candidate(spec, cand, g) is None


def necessary_filter(
    spec: ModuleSpec, dec: HilbertDecomposition, g: Sequence[int] | None = None
) -> bool:
    """False when a one-dimensional component's only generator is annihilated.

    True does not certify anything; it only means the decomposition is not
    ruled out without choosing generators.
    """
    g = _resolve_g(spec, g)
    for comp in dec.components:
        basis = component_basis(spec, comp.shift)
        if len(basis) == 1 and not annihilator_free(spec, basis[0], comp.vars, g):
            return False
    return True


def interval_filter(spec: ModuleSpec, g: Sequence[int] | None = None):
    """The necessary filter, applied to the components an interval induces."""
    g = _resolve_g(spec, g)

    def allowed(iv: Interval) -> bool:
        z = z_set(iv.upper, g)
        for c in g_set(iv, g):
            basis = component_basis(spec, c)
            if len(basis) == 1 and not annihilator_free(spec, basis[0], z, g):
                return False
        return True

    return allowed


def generic_stanley_check(
    spec: ModuleSpec, dec: HilbertDecomposition, g: Sequence[int] | None = None
) -> StanleyCandidate | None:
    """Find generators turning ``dec`` into a Stanley decomposition, if any exist.

    The coordinates of every m_i are treated as indeterminates.  Each degree
    block of the independence condition is a square matrix whose
    determinant is a polynomial of degree at most one in every coordinate;
    a choice exists iff none of these determinants vanishes identically.
    Coordinates are then fixed one at a time to the least of 1, 2, ...
    keeping every determinant nonzero; a coordinate occurring in D blocks
    has at most D bad values, so D + 1 candidates always suffice.
    """
    g = _resolve_g(spec, g)
    comps = dec.components
    for comp in comps:
        if not leq(comp.shift, g):
            raise DomainError(f"component shift {comp.shift} is not <= g={g}")
    if not _decomposition_matches(spec, dec, g):
        return None

    bases = [component_basis(spec, comp.shift) for comp in comps]
    if any(not b for b in bases):
        return None
    symbols = [
        [sympy.Symbol(f"m_{i}_{e.summand_index}") for e in basis] for i, basis in enumerate(bases)
    ]
    sym_of = {
        (i, e.summand_index): s for i, basis in enumerate(bases) for e, s in zip(basis, symbols[i])
    }

    dets = []
    for c in box_iter(g):
        rows = {e.summand_index: r for r, e in enumerate(component_basis(spec, c))}
        cols = _block_columns(dec, c)
        if not cols:
            continue
        block = sympy.zeros(len(rows), len(cols))
        for col, i in enumerate(cols):
            for e in bases[i]:
                if spec.summands[e.summand_index].nonzero_at(c):
                    block[rows[e.summand_index], col] = sym_of[(i, e.summand_index)]
        det = sympy.expand(block.det(method="berkowitz"))
        if det == 0:
            return None
        dets.append(det)

    values: dict[sympy.Symbol, int] = {}
    for sym in (s for row in symbols for s in row):
        involved = [k for k, det in enumerate(dets) if det.has(sym)]
        for val in range(1, len(involved) + 2):
            trial = {k: sympy.expand(dets[k].subs(sym, val)) for k in involved}
            if all(t != 0 for t in trial.values()):
                for k, t in trial.items():
                    dets[k] = t
                values[sym] = val
                break
        else:
            raise AssertionError("degree bound violated while fixing generic coordinates")

    choices = tuple(tuple(Fraction(values[s]) for s in row) for row in symbols)
    cand = StanleyCandidate(dec, choices)
    reason = diagnose_candidate(spec, cand, g)
    if reason is not None:
        raise AssertionError(f"generic witness failed re-certification: {reason}")
    return cand


def stanley_decomposition(spec: ModuleSpec, cand: StanleyCandidate) -> StanleyDecomposition:
    parts = tuple(
        StanleyPart(m, comp.vars)
        for m, comp in zip(cand.generators(spec), cand.decomposition.components)
    )
    return StanleyDecomposition(spec.n, parts)


def _canonical_candidate(spec: ModuleSpec, dec: HilbertDecomposition) -> StanleyCandidate:
    """Canonical basis elements as generators; repeated shifts take successive ones."""
    used: dict[Degree, int] = {}
    choices = []
    for comp in dec.components:
        dim = len(component_basis(spec, comp.shift))
        j = used.get(comp.shift, 0)
        used[comp.shift] = j + 1
        choices.append(tuple(Fraction(int(k == j)) for k in range(dim)))
    return StanleyCandidate(dec, tuple(choices))


def fine_decomposition(spec: ModuleSpec, g: Sequence[int] | None = None) -> StanleyDecomposition:
    """One part per canonical basis element of the box, on the variables where it sits at g."""
    g = _resolve_g(spec, g)
    table = hilbert_table(spec, g)
    ivs = tuple(Interval(c, c) for c, v in table.items() for _ in range(v))
    dec = induced_decomposition(HilbertPartition(g, ivs))
    cand = _canonical_candidate(spec, dec)
    reason = diagnose_candidate(spec, cand, g)
    if reason is not None:
        raise AssertionError(f"fine decomposition failed certification: {reason}")
    return stanley_decomposition(spec, cand)


def stdepth_dim1(spec: ModuleSpec) -> tuple[int, StanleyDecomposition]:
    """Stanley depth of a module with every graded piece of dimension at most one.

    Depth bounds are tried from n downwards; a partition is accepted as soon
    as none of its components is annihilated by a monomial in its own
    variables.  The annihilator test is applied interval by interval inside
    the search.
    """
    g = spec.g
    table = hilbert_table(spec, g)
    if not (table.values <= 1).all():
        raise PreconditionError("module has a graded piece of dimension > 1; use stdepth")
    if table.is_zero:
        return spec.n, StanleyDecomposition(spec.n, ())
    allowed = interval_filter(spec, g)
    for j in range(spec.n, 0, -1):
        p = exists_partition(table, j, allowed)
        if p is not None:
            dec = induced_decomposition(p)
            return j, stanley_decomposition(spec, _canonical_candidate(spec, dec))
    return 0, fine_decomposition(spec, g)


def stdepth(spec: ModuleSpec) -> tuple[int, StanleyDecomposition]:
    """Stanley depth with a witness decomposition."""
    g = spec.g
    if is_dim_le_1(spec, g):
        return stdepth_dim1(spec)
    table = hilbert_table(spec, g)
    allowed = interval_filter(spec, g)
    for d in range(spec.n, 0, -1):
        for p in iter_partitions(table, d, allowed):
            if p.depth != d:
                continue  # examined at a larger bound already
            dec = induced_decomposition(p)
            if not necessary_filter(spec, dec, g):
                continue
            cand = generic_stanley_check(spec, dec, g)
            if cand is not None:
                return d, stanley_decomposition(spec, cand)
    return 0, fine_decomposition(spec, g)


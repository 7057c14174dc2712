import json
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hilbertdepth import (
    ComponentBasisElement,
    DomainError,
    HilbertTable,
    MonomialIdeal,
    SpecError,
    UnsupportedSpecError,
    component_basis,
    determine_g,
    extend_scalars,
    hilbert_table,
    is_dim_le_1,
    multiply,
    parse_spec,
    specialize_ideal_spec,
    specialize_table,
)
from hilbertdepth.module_spec import dump_spec

from conftest import make_spec
from oracles import box, dim_from_dict, multiplication_is_bijective_past, random_summand_dict


def test_parse_shipped_specs(r_max, mixed):
    assert r_max.n == 2 and len(r_max.summands) == 2
    assert len(mixed.summands) == 3
    assert mixed.summands[0].denominator.generators == ((0, 1), (1, 0))


@pytest.mark.parametrize(
    "text",
    [
        "{not json",
        json.dumps({"vars": ["X"], "summands": [{"shift": [-1], "numerator_gens": [[0]]}]}),
        json.dumps({"vars": ["X", "Y"], "summands": [{"shift": [0], "numerator_gens": [[0, 0]]}]}),
        json.dumps({"vars": ["X"], "summands": [{"shift": [0], "numerator_gens": [[1]], "denominator_gens": [[0]]}]}),
        json.dumps([1, 2]),
        json.dumps({"vars": ["X"]}),
    ],
)
def test_parse_rejects(text):
    with pytest.raises(SpecError):
        parse_spec(text)


def test_negative_shift_message():
    with pytest.raises(SpecError, match="standing assumption"):
        make_spec(2, [{"shift": [-1, 0], "numerator_gens": [[0, 0]]}])


def test_round_trip(mixed):
    assert parse_spec(dump_spec(mixed)) == mixed


def test_ideal_minimized():
    I = MonomialIdeal(2, ((1, 1), (1, 0), (2, 3), (0, 2)))
    assert I.generators == ((0, 2), (1, 0))
    assert I.contains((3, 0)) and not I.contains((0, 1))
    assert MonomialIdeal.unit(2).is_unit and MonomialIdeal(2).is_zero


def test_determine_g(r_max, mixed):
    assert determine_g(r_max) == (1, 1)
    assert determine_g(mixed) == (1, 1)
    assert determine_g(make_spec(3, [{"shift": [0, 0, 0]}])) == (0, 0, 0)


def test_g_override():
    spec = make_spec(2, [{"shift": [0, 0]}], g=[1, 2])
    assert spec.g == (1, 2)
    with pytest.raises(SpecError):
        make_spec(2, [{"shift": [0, 0], "numerator_gens": [[2, 0]]}], g=[1, 0])


def test_hilbert_table(r_max, mixed):
    assert hilbert_table(r_max).as_dict() == {(0, 0): 1, (0, 1): 2, (1, 0): 2, (1, 1): 2}
    assert hilbert_table(r_max).to_polynomial() == "1 + 2*X1 + 2*X2 + 2*X1*X2"
    assert hilbert_table(mixed).to_polynomial() == "1 + 2*X2 + X1*X2"
    empty = make_spec(2, [], vars=None)
    assert hilbert_table(empty).is_zero


def test_hilbert_table_g_too_small(r_max):
    with pytest.raises(DomainError):
        hilbert_table(r_max, (1, 0))


def test_component_basis(mixed):
    assert [e.summand_index for e in component_basis(mixed, (0, 1))] == [1, 2]
    assert [e.summand_index for e in component_basis(mixed, (0, 0))] == [0]
    assert component_basis(mixed, (1, 0)) == []
    shifted = make_spec(2, [{"shift": [1, 1]}])
    assert component_basis(shifted, (0, 5)) == []


def test_multiply(mixed):
    assert multiply(mixed, ComponentBasisElement(0, (0, 0)), (0, 1)) is None
    assert multiply(mixed, ComponentBasisElement(2, (0, 1)), (1, 0)) == ComponentBasisElement(2, (1, 1))
    e = ComponentBasisElement(1, (0, 1))
    assert multiply(mixed, e, (0, 0)) == e
    assert multiply(mixed, e, (1, 0)) is None


def test_is_dim_le_1(r_max, mixed, max_ideal):
    assert not is_dim_le_1(r_max)
    assert not is_dim_le_1(mixed)
    assert is_dim_le_1(max_ideal)


def test_extend_scalars(mixed):
    ext = extend_scalars(mixed, 1)
    assert ext.n == 3
    assert [s.shift for s in ext.summands] == [(0, 0, 0), (0, 1, 0), (0, 1, 0)]
    assert ext.g == (1, 1, 0)
    assert ext.var_names == ("X1", "X2", "X3")


def test_specialize_ideal_spec(xy_xz):
    m = specialize_ideal_spec(xy_xz, 1)
    assert m.n == 1 and m.summands[0].numerator.generators == ((1,),)
    assert specialize_ideal_spec(xy_xz, 3).summands == xy_xz.summands
    single = make_spec(2, [{"shift": [0, 0], "numerator_gens": [[1, 1]]}])
    assert specialize_ideal_spec(single, 1).summands[0].numerator.generators == ((1,),)


def test_specialize_rejects_subquotients(mixed):
    with pytest.raises(UnsupportedSpecError):
        specialize_ideal_spec(mixed, 1)


def random_spec(seed, n=2, max_summands=3):
    rng = random.Random(seed)
    summands = [random_summand_dict(rng, n) for _ in range(rng.randint(0, max_summands))]
    return make_spec(n, summands), summands


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_table_matches_definition(seed):
    spec, raw = random_spec(seed)
    table = hilbert_table(spec)
    for c, v in table.items():
        assert v == dim_from_dict(raw, c) == len(component_basis(spec, c))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_determine_g_is_determining(seed):
    spec, _ = random_spec(seed)
    assert multiplication_is_bijective_past(spec, spec.g)


def test_too_small_g_fails_bijection(mixed):
    assert not multiplication_is_bijective_past(mixed, (1, 0))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 2))
def test_extension_table_is_padded(seed, m):
    spec, _ = random_spec(seed)
    ext = extend_scalars(spec, m)
    assert ext.g == spec.g + (0,) * m
    base = hilbert_table(spec).values
    assert np.array_equal(hilbert_table(ext).values.reshape(base.shape), base)


def test_specialized_table_is_not_the_summed_out_table():
    # Setting trailing variables to 1 sums the whole series; after truncation
    # to the box the two tables differ, e.g. (X1, X2) -> (X1, 1) = R.
    spec = make_spec(2, [{"shift": [0, 0], "numerator_gens": [[1, 0], [0, 1]]}])
    summed = specialize_table(hilbert_table(spec), 1)
    assert summed.as_dict() == {(0,): 1, (1,): 2}
    assert hilbert_table(specialize_ideal_spec(spec, 1), (1,)).as_dict() == {(0,): 1, (1,): 1}


def test_specialize_table_sums_trailing_axes():
    t = HilbertTable((1, 1, 1), np.arange(8).reshape(2, 2, 2))
    assert specialize_table(t, 1).as_dict() == {(0,): 0 + 1 + 2 + 3, (1,): 4 + 5 + 6 + 7}
    assert specialize_table(t, 3) == t


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.tuples(*[st.integers(0, 2)] * 2), st.tuples(*[st.integers(0, 2)] * 2))
def test_multiply_associative(seed, t1, t2):
    spec, _ = random_spec(seed)
    for a in box((2, 2)):
        for e in component_basis(spec, a):
            step = multiply(spec, e, t1)
            two = multiply(spec, step, t2) if step is not None else None
            assert two == multiply(spec, e, (t1[0] + t2[0], t1[1] + t2[1]))


def test_table_validation():
    with pytest.raises(DomainError):
        HilbertTable((1, 1), np.zeros((2, 3)))
    with pytest.raises(ValueError):
        HilbertTable((0,), np.array([-1]))

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brute import random_arc_instance, valid_colorings
from sccolor import (
    ConflictInstance,
    DomainError,
    conflict_color,
    is_uniquely_restrictive,
    multiplicity,
    normalize,
    reorient,
    restrictiveness,
    unique_restrictiveness_witnesses,
    verify,
)
from sccolor.multigraph import Orientation


def one_arc(conflict=(1, 2), k=3):
    return ConflictInstance.from_arcs(2, k, [(0, 1, *conflict)])


@st.composite
def instances(draw, max_n=6, max_k=5, max_mu=4, max_m=14):
    n = draw(st.integers(2, max_n))
    k = draw(st.integers(1, max_k))
    mu = draw(st.integers(1, max_mu))
    seed = draw(st.integers(0, 2**32 - 1))
    m = draw(st.integers(0, max_m))
    return random_arc_instance(np.random.default_rng(seed), n, k, m, mu=mu)


def test_conflict_color_reads_both_ends():
    inst = one_arc()
    assert conflict_color(inst, 0, 0) == 1
    assert conflict_color(inst, 1, 0) == 2
    with pytest.raises(DomainError):
        conflict_color(ConflictInstance.from_arcs(3, 3, [(0, 1, 1, 2)]), 2, 0)


def test_instance_validation():
    with pytest.raises(DomainError):
        ConflictInstance.from_arcs(2, 2, [(0, 1, 0, 2)])
    with pytest.raises(DomainError):
        ConflictInstance.from_arcs(2, 2, [(0, 0, 0, 0)])


def test_normalize_collapses_identical_parallels():
    inst = ConflictInstance.from_arcs(2, 2, [(0, 1, 1, 1), (0, 1, 1, 1)])
    assert normalize(inst).arcs == ((0, 1, 1, 1),)


def test_normalize_keeps_distinct_parallels():
    inst = ConflictInstance.from_arcs(3, 3, [(0, 1, 1, 1), (0, 1, 1, 2)])
    assert normalize(inst).arcs == inst.arcs


def test_normalize_collapses_reversed_duplicate():
    inst = ConflictInstance.from_arcs(2, 3, [(0, 1, 1, 2), (1, 0, 2, 1)])
    out = normalize(inst)
    assert out.arcs == ((0, 1, 1, 2),)
    assert valid_colorings(out) == valid_colorings(inst)


@settings(max_examples=200, deadline=None)
@given(instances(max_n=4, max_k=3, max_m=8))
def test_normalize_preserves_solutions(inst):
    out = normalize(inst)
    assert valid_colorings(out) == valid_colorings(inst)
    assert out.m <= inst.m
    assert normalize(out) == out


def test_verify_is_order_sensitive():
    inst = one_arc()
    assert verify(inst, (1, 2)) == [0]
    assert verify(inst, (2, 1)) == []


def test_verify_triangle_dodge():
    inst = ConflictInstance.from_arcs(3, 2, [(0, 1, 0, 0), (1, 2, 0, 0), (0, 2, 0, 0)])
    assert verify(inst, (1, 1, 1)) == []


def test_verify_accepts_mapping_and_rejects_partial():
    inst = one_arc()
    assert verify(inst, {0: 1, 1: 2}) == [0]
    with pytest.raises(DomainError):
        verify(inst, {0: 1})
    with pytest.raises(DomainError):
        verify(inst, (1,))
    with pytest.raises(DomainError):
        verify(inst, (1, 7))


@settings(max_examples=200, deadline=None)
@given(instances(), st.data())
def test_reversal_coherence(inst, data):
    flips = data.draw(st.lists(st.booleans(), min_size=inst.m, max_size=inst.m))
    direction = tuple((h, t) if f else (t, h) for (t, h), f in zip(inst.orientation.direction, flips))
    other = reorient(inst, Orientation(direction, inst.n))
    for e, (t, h, a, b) in enumerate(inst.arcs):
        assert (conflict_color(inst, t, e), conflict_color(inst, h, e)) == (a, b)
        assert (conflict_color(other, t, e), conflict_color(other, h, e)) == (a, b)
    col = tuple(data.draw(st.integers(0, inst.k - 1)) for _ in range(inst.n))
    assert verify(other, col) == verify(inst, col)


@settings(max_examples=200, deadline=None)
@given(instances(), st.data())
def test_verify_monotone_under_added_arcs(inst, data):
    col = tuple(data.draw(st.integers(0, inst.k - 1)) for _ in range(inst.n))
    extra = data.draw(
        st.lists(
            st.tuples(
                st.integers(0, inst.n - 1),
                st.integers(0, inst.n - 1),
                st.integers(0, inst.k - 1),
                st.integers(0, inst.k - 1),
            ).filter(lambda a: a[0] != a[1]),
            max_size=5,
        )
    )
    bigger = ConflictInstance.from_arcs(inst.n, inst.k, list(inst.arcs) + extra)
    assert set(verify(inst, col)) <= set(verify(bigger, col))


def test_simple_graph_is_uniquely_restrictive():
    inst = ConflictInstance.from_arcs(4, 5, [(0, 1, 1, 2), (1, 2, 3, 3), (2, 3, 4, 0), (3, 0, 1, 1)])
    assert is_uniquely_restrictive(inst)


def test_unique_restrictiveness_witness():
    inst = ConflictInstance.from_arcs(2, 7, [(0, 1, 1, 5), (0, 1, 2, 5)])
    assert not is_uniquely_restrictive(inst)
    assert unique_restrictiveness_witnesses(inst) == [(1, 0, 1)]


def test_distinct_head_colors_are_uniquely_restrictive():
    inst = ConflictInstance.from_arcs(2, 7, [(0, 1, 1, 5), (0, 1, 1, 6)])
    assert is_uniquely_restrictive(inst)


def test_restrictiveness_counts_tail_colors_per_head_color():
    inst = ConflictInstance.from_arcs(2, 7, [(0, 1, 1, 5), (0, 1, 2, 5), (0, 1, 3, 6)])
    r, per_vertex = restrictiveness(inst)
    assert per_vertex == {0: 2, 1: 0}
    assert r == 2


def test_arcless_restrictiveness_reports_one():
    assert restrictiveness(ConflictInstance.from_arcs(3, 2, [])) == (1, {0: 0, 1: 0, 2: 0})


@settings(max_examples=300, deadline=None)
@given(instances())
def test_restrictiveness_one_iff_uniquely_restrictive(inst):
    inst = normalize(inst)
    r, _ = restrictiveness(inst)
    assert (r == 1) == is_uniquely_restrictive(inst)
    assert r <= max(1, multiplicity(inst.graph))

from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import brute
from sccolor import (
    ConflictInstance,
    MultiGraph,
    ResourceError,
    adversarial_chi_con,
    backtracking_solve,
    chromatic_number,
    proper_to_scc,
    verify,
)


def naive_chi_con(g, k_max):
    """Every conflict function, no symmetry reduction, exhaustive colorability."""
    for k in range(1, k_max + 1):
        pairs = [(a, b) for a in range(k) for b in range(k)]
        if all(
            brute.solvable(ConflictInstance.from_arcs(g.n, k, [(u, v, *f) for (u, v), f in zip(g.edges, fs)]))
            for fs in product(pairs, repeat=g.m)
        ):
            return k
    return None


def test_single_arc():
    assert backtracking_solve(ConflictInstance.from_arcs(2, 1, [(0, 1, 0, 0)])) is None
    col = backtracking_solve(ConflictInstance.from_arcs(2, 2, [(0, 1, 0, 0)]))
    assert col is not None and verify(ConflictInstance.from_arcs(2, 2, [(0, 1, 0, 0)]), col) == []


def test_trivial_instances():
    assert backtracking_solve(ConflictInstance.from_arcs(0, 0, [])) == ()
    assert backtracking_solve(ConflictInstance.from_arcs(1, 0, [])) is None
    assert backtracking_solve(ConflictInstance.from_arcs(3, 1, [])) == (0, 0, 0)


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 4), st.integers(1, 3), st.integers(0, 5), st.integers(0, 2**32 - 1))
def test_backtracking_matches_enumeration(n, k, m, seed):
    inst = brute.random_arc_instance(np.random.default_rng(seed), n, k, m)
    col = backtracking_solve(inst)
    assert (col is not None) == brute.solvable(inst)
    if col is not None:
        assert verify(inst, col) == []


@pytest.mark.parametrize(
    "g, chi",
    [
        (brute.complete(4), 4),
        (MultiGraph(5, tuple((i, (i + 1) % 5) for i in range(5))), 3),
        (brute.petersen(), 3),
        (MultiGraph(0), 0),
        (MultiGraph(3), 1),
    ],
)
def test_chromatic_number(g, chi):
    assert chromatic_number(g) == chi


@pytest.mark.parametrize("seed", range(20))
def test_chromatic_number_matches_brute_force(seed):
    rng = np.random.default_rng(seed)
    g = brute.random_simple_graph(rng, int(rng.integers(1, 8)))
    assert chromatic_number(g) == brute.chromatic(g.n, g.edges)


def test_chi_con_small_cases():
    assert adversarial_chi_con(MultiGraph(2, ((0, 1),)), 4) == 2
    assert adversarial_chi_con(MultiGraph(4), 4) == 1
    assert adversarial_chi_con(MultiGraph(2, ((0, 1),) * 3), 4) == 2


@pytest.mark.parametrize("m", range(1, 9))
def test_chi_con_parallel_pair(m):
    expected = next(k for k in range(1, 10) if k * k >= m + 1)
    assert adversarial_chi_con(MultiGraph(2, ((0, 1),) * m), 4) == expected


def test_chi_con_none_below_k_max():
    assert adversarial_chi_con(MultiGraph(2, ((0, 1),) * 8), 2) is None


def test_chi_con_budget():
    with pytest.raises(ResourceError):
        adversarial_chi_con(brute.complete(4), 3, budget=10)


TINY = [
    MultiGraph(3, ((0, 1), (1, 2))),
    brute.complete(3),
    MultiGraph(3, ((0, 1), (0, 1), (1, 2))),
    MultiGraph(4, ((0, 1), (1, 2), (2, 3))),
    MultiGraph(2, ((0, 1), (0, 1))),
]


@pytest.mark.parametrize("g", TINY)
def test_chi_con_matches_naive_enumeration(g):
    assert adversarial_chi_con(g, 3) == naive_chi_con(g, 3)


@pytest.mark.parametrize("g", TINY + [brute.complete(4), MultiGraph(3, ((0, 1),) * 3 + ((1, 2),) * 2)])
def test_chi_con_monotone_under_edge_deletion(g):
    full = adversarial_chi_con(g, 4)
    for e in range(g.m):
        sub = MultiGraph(g.n, g.edges[:e] + g.edges[e + 1:])
        assert adversarial_chi_con(sub, 4) <= full


@pytest.mark.parametrize("seed", range(10))
def test_proper_reduction_agrees_with_chromatic_number(seed):
    rng = np.random.default_rng(100 + seed)
    g = brute.random_simple_graph(rng, int(rng.integers(2, 8)))
    chi = chromatic_number(g)
    for k in range(1, 5):
        assert (backtracking_solve(proper_to_scc(g, k)) is not None) == (chi <= k)

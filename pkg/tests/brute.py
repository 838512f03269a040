"""Exhaustive reference computations, kept independent of the package's search code."""
from itertools import permutations, product

import numpy as np

from sccolor import ConflictInstance, MultiGraph


def valid_colorings(inst):
    arcs = inst.arcs
    return [
        col
        for col in product(range(inst.k), repeat=inst.n)
        if all(not (col[t] == a and col[h] == b) for t, h, a, b in arcs)
    ]


def solvable(inst):
    arcs = inst.arcs
    for col in product(range(inst.k), repeat=inst.n):
        if all(not (col[t] == a and col[h] == b) for t, h, a, b in arcs):
            return True
    return False


def chromatic(n, edges):
    if n == 0:
        return 0
    for k in range(1, n + 1):
        for col in product(range(k), repeat=n):
            if all(col[u] != col[v] for u, v in edges):
                return k
    raise AssertionError


def degeneracy(g):
    best = None
    for order in permutations(range(g.n)):
        pos = {v: i for i, v in enumerate(order)}
        back = [0] * g.n
        for u, v in g.edges:
            back[u if pos[u] > pos[v] else v] += 1
        worst = max(back, default=0)
        best = worst if best is None else min(best, worst)
    return best or 0


def cooperative_colorable(fam):
    """Search over all set systems (R_1..R_k): each R_i independent in G_i, union = V."""
    n = fam.vertex_count
    independent = []
    for g in fam.members:
        sets = []
        for mask in range(1 << n):
            if all(not ((mask >> u) & 1 and (mask >> v) & 1) for u, v in g.edges):
                sets.append(mask)
        independent.append(sets)
    full = (1 << n) - 1
    for system in product(*independent):
        union = 0
        for s in system:
            union |= s
        if union == full:
            return True
    return False


def random_arc_instance(rng, n, k, m, mu=None):
    """Arbitrary orientations; parallel arcs allowed (at most ``mu`` per vertex pair)."""
    arcs = []
    mult = {}
    attempts = 0
    while len(arcs) < m and n >= 2 and attempts < 50 * m + 50:
        attempts += 1
        u, v = (int(x) for x in rng.choice(n, size=2, replace=False))
        key = (min(u, v), max(u, v))
        if mu is not None and mult.get(key, 0) >= mu:
            continue
        mult[key] = mult.get(key, 0) + 1
        arcs.append((u, v, int(rng.integers(k)), int(rng.integers(k))))
    return ConflictInstance.from_arcs(n, k, arcs)


def random_simple_graph(rng, n, p=0.5):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return MultiGraph(n, tuple(edges))


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return MultiGraph(10, tuple(outer + spokes + inner))


def complete(n):
    return MultiGraph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def rng(seed):
    return np.random.default_rng(seed)

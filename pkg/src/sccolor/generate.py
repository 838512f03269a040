"""Seeded random generators for graphs, conflict functions and forest families."""
import numpy as np

from .conflict import ConflictInstance, normalize
from .errors import DomainError
from .multigraph import MultiGraph
from .reductions import GraphFamily


def _rng(seed):
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def gen_degenerate(n, d, seed):
    """Simple graph where vertex ``j`` joins ``min(j, d)`` distinct random earlier vertices."""
    if n < 1 or d < 0:
        raise DomainError("need n >= 1 and d >= 0")
    rng = _rng(seed)
    edges = []
    for j in range(1, n):
        s = min(j, d)
        if s:
            for i in sorted(rng.choice(j, size=s, replace=False).tolist()):
                edges.append((j, i))
    return MultiGraph(n, tuple(edges))


def random_conflicts(g, k, seed, mu=None):
    """One uniform pair from C x C per edge, written along the edge's ``(u, v)``.

    With ``mu``, each edge is repeated a uniform number of times in
    ``1..min(mu, k^2)`` with pairwise distinct pairs.  The result is normalized.
    """
    if k < 1:
        raise DomainError("k must be positive")
    rng = _rng(seed)
    if mu is None:
        ends = np.asarray(g.edges, dtype=np.int64).reshape(-1, 2)
        pairs = rng.integers(0, k, size=(g.m, 2))
        return normalize(ConflictInstance.from_arcs(g.n, k, np.concatenate([ends, pairs], axis=1)))
    arcs = []
    for u, v in g.edges:
        copies = int(rng.integers(1, min(mu, k * k) + 1))
        chosen = set()
        while len(chosen) < copies:
            pair = tuple(int(x) for x in rng.integers(0, k, size=2))
            if pair not in chosen:
                chosen.add(pair)
                arcs.append((u, v, *pair))
    return normalize(ConflictInstance.from_arcs(g.n, k, arcs))


def random_forest(n, max_degree, seed):
    """Random tree-like forest; vertices attach to random earlier vertices of spare degree."""
    if max_degree < 0:
        raise DomainError("max_degree must be nonnegative")
    rng = _rng(seed)
    perm = rng.permutation(n).tolist()
    deg = [0] * n
    open_ = []
    edges = []
    for v in perm:
        if open_ and max_degree > 0:
            i = int(rng.integers(len(open_)))
            u = open_[i]
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
            if deg[u] >= max_degree:
                open_[i] = open_[-1]
                open_.pop()
        if deg[v] < max_degree:
            open_.append(v)
    return MultiGraph(n, tuple(edges))


def random_forests(count, n, max_degree, seed):
    rng = _rng(seed)
    return GraphFamily(n, tuple(random_forest(n, max_degree, rng) for _ in range(count)))


def random_instance(rng, n, d, k, mu=1):
    """Degenerate graph with random conflicts, parallel copies up to ``mu``."""
    g = gen_degenerate(n, d, rng)
    return random_conflicts(g, k, rng, mu=mu if mu > 1 else None)

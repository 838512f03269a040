"""Pure-Python implementations of the hot kernels.

Each function here has a twin with the same signature and the same output
in ``_ckernels.pyx``.  Arrays follow one convention throughout:

* adjacency / incidence lists are CSR pairs ``(indptr, data)``;
* inventories are ``(n, k)`` boolean (or uint8) arrays;
* colorings are int64 arrays with ``-1`` meaning "uncolored".
"""
import heapq
import sys

import numpy as np


def smallest_last(n, indptr, nbrs):
    """Smallest-last ordering with multiplicity-counted degrees.

    Returns ``(order, d)`` where ``order`` lists vertices in reverse removal
    order and ``d`` is the largest degree seen at a removal step.  Ties are
    broken towards the smallest vertex id.
    """
    deg = [int(indptr[v + 1] - indptr[v]) for v in range(n)]
    heap = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    removed = [False] * n
    removal = []
    d = 0
    while heap:
        dv, v = heapq.heappop(heap)
        if removed[v] or dv != deg[v]:
            continue
        removed[v] = True
        removal.append(v)
        if dv > d:
            d = dv
        for j in range(indptr[v], indptr[v + 1]):
            u = int(nbrs[j])
            if not removed[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    removal.reverse()
    return np.asarray(removal, dtype=np.int64), d


def prune(S, tails, heads, ctail, chead):
    """Copy ``S`` and delete tail colors whose conflicting head color is present.

    Firing is decided on the unpruned ``S`` only, so the result does not
    depend on arc order.
    """
    S = np.asarray(S, dtype=bool)
    pruned = S.copy()
    if len(tails):
        fire = S[tails, ctail] & S[heads, chead]
        pruned[tails[fire], ctail[fire]] = False
    return pruned


def greedy_color(n, k, order, indptr, other, self_cc, other_cc):
    """Color vertices in ``order``, avoiding conflicts with colored neighbours.

    An arc to an already colored vertex ``u`` excludes ``self_cc`` exactly when
    ``u`` carries ``other_cc``.  Returns the coloring; on failure the vertex
    that ran out of colors (and every later one) holds ``-1``.
    """
    color = np.full(n, -1, dtype=np.int64)
    for v in order:
        banned = set()
        for j in range(indptr[v], indptr[v + 1]):
            cu = color[other[j]]
            if cu >= 0 and cu == other_cc[j]:
                banned.add(int(self_cc[j]))
        for c in range(k):
            if c not in banned:
                color[v] = c
                break
        else:
            return color
    return color


def backtrack(n, k, order, indptr, other, self_cc, other_cc):
    """Complete search with forward checking; returns a coloring or ``None``."""
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    if k == 0:
        return None
    order = [int(v) for v in order]
    indptr = [int(x) for x in indptr]
    other = [int(x) for x in other]
    self_cc = [int(x) for x in self_cc]
    other_cc = [int(x) for x in other_cc]
    blocked = [[0] * k for _ in range(n)]
    avail = [k] * n
    color = [-1] * n

    def assign(i):
        if i == n:
            return True
        v = order[i]
        bv = blocked[v]
        for c in range(k):
            if bv[c]:
                continue
            color[v] = c
            trail = []
            ok = True
            for j in range(indptr[v], indptr[v + 1]):
                if self_cc[j] != c:
                    continue
                u = other[j]
                if color[u] >= 0:
                    continue
                oc = other_cc[j]
                blocked[u][oc] += 1
                trail.append((u, oc))
                if blocked[u][oc] == 1:
                    avail[u] -= 1
                    if avail[u] == 0:
                        ok = False
                        break
            if ok and assign(i + 1):
                return True
            for u, oc in trail:
                blocked[u][oc] -= 1
                if blocked[u][oc] == 0:
                    avail[u] += 1
            color[v] = -1
        return False

    limit = sys.getrecursionlimit()
    if limit < n + 100:
        sys.setrecursionlimit(n + 100)
    try:
        found = assign(0)
    finally:
        sys.setrecursionlimit(limit)
    return np.asarray(color, dtype=np.int64) if found else None

"""Loop-free multigraphs, smallest-last degeneracy orderings and orientations.

Vertices are the dense ids ``0..n-1``; edge ``i`` is ``edges[i]``.  Degrees
count parallel edges with multiplicity everywhere in this package.
"""
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import kernels
from .errors import DomainError, InvalidOrderingError


@dataclass(frozen=True)
class MultiGraph:
    """Undirected multigraph with stable edge identities.

    ``edges`` is a tuple of ``(u, v)`` pairs; the position of a pair is its
    edge id.  Parallel edges are distinct entries.
    """

    vertex_count: int
    edges: tuple = ()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise DomainError("vertex_count must be nonnegative")
        arr = np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)
        n = self.vertex_count
        loops = np.flatnonzero(arr[:, 0] == arr[:, 1])
        if len(loops):
            i = int(loops[0])
            raise DomainError(f"edge {i} is a loop at vertex {arr[i, 0]}")
        outside = np.flatnonzero(((arr < 0) | (arr >= n)).any(axis=1))
        if len(outside):
            i = int(outside[0])
            raise DomainError(f"edge {i} = ({arr[i, 0]}, {arr[i, 1]}) has an endpoint outside 0..{n - 1}")
        object.__setattr__(self, "edges", tuple(map(tuple, arr.tolist())))

    @property
    def n(self):
        return self.vertex_count

    @property
    def m(self):
        return len(self.edges)

    @cached_property
    def _endpoints(self):
        arr = np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)
        return arr[:, 0].copy(), arr[:, 1].copy()

    @cached_property
    def adjacency(self):
        """CSR ``(indptr, nbrs, edge_ids)``; a neighbour repeats once per parallel edge."""
        us, vs = self._endpoints
        src = np.concatenate([us, vs])
        dst = np.concatenate([vs, us])
        eid = np.concatenate([np.arange(self.m), np.arange(self.m)]).astype(np.int64)
        idx = np.argsort(src, kind="stable")
        counts = np.bincount(src, minlength=self.n) if self.m else np.zeros(self.n, np.int64)
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        return indptr, dst[idx], eid[idx]

    def degrees(self):
        indptr = self.adjacency[0]
        return np.diff(indptr)

    def neighbors(self, v):
        indptr, nbrs, _ = self.adjacency
        return nbrs[indptr[v]:indptr[v + 1]].tolist()

    def underlying_simple(self):
        """The simple graph on the same vertices (one edge per adjacent pair)."""
        seen = {}
        for u, v in self.edges:
            seen.setdefault((min(u, v), max(u, v)), None)
        return MultiGraph(self.n, tuple(seen))

    def induced(self, keep):
        """Subgraph induced by ``keep``, relabelled densely in increasing id order."""
        keep = sorted(set(keep))
        relabel = {v: i for i, v in enumerate(keep)}
        edges = tuple(
            (relabel[u], relabel[v]) for u, v in self.edges if u in relabel and v in relabel
        )
        return MultiGraph(len(keep), edges)


@dataclass(frozen=True)
class DegeneracyOrder:
    order: tuple
    d: int

    @cached_property
    def position(self):
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return tuple(pos)


@dataclass(frozen=True)
class Orientation:
    """``direction[e] == (tail, head)`` for every edge id ``e``."""

    direction: tuple
    vertex_count: int = field(default=0)

    def out_degrees(self):
        tails = np.asarray(self.direction, dtype=np.int64).reshape(-1, 2)[:, 0]
        return np.bincount(tails, minlength=self.vertex_count)

    def max_out_degree(self):
        return int(self.out_degrees().max()) if self.vertex_count and self.direction else 0


def degeneracy_order(g):
    """Smallest-last ordering of ``g`` and its degeneracy.

    The vertex removed last comes first in the ordering, so every vertex has
    at most ``d`` neighbours (with multiplicity) earlier in the ordering.
    """
    indptr, nbrs, _ = g.adjacency
    order, d = kernels.smallest_last(g.n, indptr, nbrs)
    return DegeneracyOrder(tuple(int(v) for v in order), int(d))


def orient(g, ordering):
    """Direct every edge from its later endpoint to its earlier one."""
    order = ordering.order if isinstance(ordering, DegeneracyOrder) else tuple(ordering)
    if sorted(order) != list(range(g.n)):
        raise InvalidOrderingError("ordering is not a permutation of 0..n-1")
    pos = np.empty(g.n, dtype=np.int64)
    pos[np.asarray(order, dtype=np.int64)] = np.arange(g.n)
    us, vs = g._endpoints
    keep = pos[us] > pos[vs]
    arcs = np.stack([np.where(keep, us, vs), np.where(keep, vs, us)], axis=1)
    return Orientation(tuple(map(tuple, arcs.tolist())), g.n)


def max_degree(g):
    return int(g.degrees().max()) if g.n and g.m else 0


def multiplicity(g):
    """Largest number of parallel edges joining one vertex pair (0 if edgeless)."""
    if not g.edges:
        return 0
    return max(Counter((min(u, v), max(u, v)) for u, v in g.edges).values())

"""Conflict functions on oriented multigraphs.

A :class:`ConflictInstance` stores one ordered forbidden pair per arc, read
in the arc's tail-to-head direction.  Reading the same edge the other way
round swaps the pair, so re-orienting an instance never changes which
colorings are valid.
"""
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DomainError
from .multigraph import MultiGraph, Orientation


@dataclass(frozen=True)
class ConflictInstance:
    graph: MultiGraph
    orientation: Orientation
    k: int
    conflicts: tuple

    def __post_init__(self):
        if self.k < 0:
            raise DomainError("color count k must be nonnegative")
        m = self.graph.m
        conf = np.asarray(self.conflicts, dtype=np.int64).reshape(-1, 2)
        arcs = np.asarray(self.orientation.direction, dtype=np.int64).reshape(-1, 2)
        if len(conf) != m or len(arcs) != m:
            raise DomainError("need exactly one conflict and one direction per edge")
        us, vs = self.graph._endpoints
        same = (arcs[:, 0] == us) & (arcs[:, 1] == vs)
        flipped = (arcs[:, 0] == vs) & (arcs[:, 1] == us)
        bad = np.flatnonzero(~(same | flipped))
        if len(bad):
            e = int(bad[0])
            raise DomainError(f"arc {e} = {tuple(arcs[e].tolist())} does not match edge {self.graph.edges[e]}")
        bad = np.flatnonzero(((conf < 0) | (conf >= self.k)).any(axis=1))
        if len(bad):
            e = int(bad[0])
            raise DomainError(
                f"arc {e} conflict {tuple(conf[e].tolist())} uses a color outside 0..{self.k - 1}"
            )
        object.__setattr__(self, "conflicts", tuple(map(tuple, conf.tolist())))
        self.__dict__["table"] = np.concatenate([arcs, conf], axis=1)

    @classmethod
    def from_arcs(cls, n, k, arcs):
        """Build from ``(tail, head, c_tail, c_head)`` records; arc order gives edge ids."""
        table = np.asarray(arcs, dtype=np.int64).reshape(-1, 4)
        direction = tuple(map(tuple, table[:, :2].tolist()))
        return cls(MultiGraph(n, direction), Orientation(direction, n), k, table[:, 2:])

    @property
    def n(self):
        return self.graph.n

    @property
    def m(self):
        return self.graph.m

    @cached_property
    def arcs(self):
        """``(tail, head, c_tail, c_head)`` per edge id."""
        return tuple(map(tuple, self.table.tolist()))

    @cached_property
    def arrays(self):
        """``(tails, heads, c_tail, c_head)`` as int64 arrays."""
        return tuple(self.table[:, i].copy() for i in range(4))

    @cached_property
    def incidence(self):
        """CSR over vertices of ``(other endpoint, own conflict color, other conflict color)``."""
        tails, heads, ct, ch = self.arrays
        src = np.concatenate([tails, heads])
        other = np.concatenate([heads, tails])
        own = np.concatenate([ct, ch])
        oth = np.concatenate([ch, ct])
        idx = np.argsort(src, kind="stable")
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        if self.m:
            np.cumsum(np.bincount(src, minlength=self.n), out=indptr[1:])
        return indptr, other[idx], own[idx], oth[idx]

    @cached_property
    def out_arcs(self):
        """``out_arcs[v]`` lists the edge ids whose tail is ``v``."""
        tails = self.table[:, 0]
        idx = np.argsort(tails, kind="stable")
        bounds = np.searchsorted(tails[idx], np.arange(self.n + 1))
        ids = idx.tolist()
        return tuple(tuple(ids[bounds[v]:bounds[v + 1]]) for v in range(self.n))

    def max_out_degree(self):
        return max((len(x) for x in self.out_arcs), default=0)


def conflict_color(inst, v, arc):
    """The entry of ``arc``'s conflict sitting at endpoint ``v``."""
    t, h = inst.orientation.direction[arc]
    a, b = inst.conflicts[arc]
    if v == t:
        return a
    if v == h:
        return b
    raise DomainError(f"vertex {v} is not an endpoint of arc {arc} = ({t}, {h})")


def reorient(inst, orientation):
    """Same constraints under another orientation; flipped arcs get swapped pairs."""
    new = np.asarray(orientation.direction, dtype=np.int64).reshape(-1, 2)
    t = inst.table
    if len(new) != inst.m:
        raise DomainError("orientation has the wrong number of arcs")
    same = (new[:, 0] == t[:, 0]) & (new[:, 1] == t[:, 1])
    flipped = (new[:, 0] == t[:, 1]) & (new[:, 1] == t[:, 0])
    bad = np.flatnonzero(~(same | flipped))
    if len(bad):
        e = int(bad[0])
        raise DomainError(f"orientation arc {tuple(new[e].tolist())} does not match edge {e}")
    conf = np.where(same[:, None], t[:, 2:], t[:, [3, 2]])
    return ConflictInstance(inst.graph, orientation, inst.k, conf)


def _row_keys(rows, radices):
    """Injective int64 key per row (mixed radix), falling back to a lexsort rank."""
    if rows.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    if np.prod([float(max(r, 1)) for r in radices]) < 2.0**62:
        key = np.zeros(rows.shape[0], dtype=np.int64)
        for j, r in enumerate(radices):
            key = key * max(r, 1) + rows[:, j]
        return key
    _, inverse = np.unique(rows, axis=0, return_inverse=True)
    return inverse.reshape(-1).astype(np.int64)


def _constraint_keys(table):
    """Direction-free key per arc: endpoints ascending, pair swapped to match."""
    flip = table[:, 0] > table[:, 1]
    return np.where(flip[:, None], table[:, [1, 0, 3, 2]], table)


def normalize(inst):
    """Drop arcs that repeat an earlier arc's constraint; edge ids are re-densified.

    Two arcs repeat each other when they forbid the same pair of colors at the
    same two endpoints, whichever way round they are written.  The first
    occurrence and its direction are kept.
    """
    if inst.m == 0:
        return inst
    keys = _row_keys(_constraint_keys(inst.table), (inst.n, inst.n, inst.k, inst.k))
    _, first = np.unique(keys, return_index=True)
    if len(first) == inst.m:
        return inst
    return ConflictInstance.from_arcs(inst.n, inst.k, inst.table[np.sort(first)])


def as_coloring(col, n, k=None):
    """Validate a coloring given as a sequence or a vertex -> color mapping."""
    if isinstance(col, dict):
        missing = [v for v in range(n) if v not in col]
        if missing:
            raise DomainError(f"coloring is partial: vertex {missing[0]} has no color")
        extra = [v for v in col if not (0 <= v < n)]
        if extra:
            raise DomainError(f"coloring names unknown vertex {extra[0]}")
        values = [col[v] for v in range(n)]
    else:
        values = list(col)
        if len(values) != n:
            raise DomainError(f"coloring has {len(values)} entries for {n} vertices")
    out = []
    for v, c in enumerate(values):
        if c is None or int(c) < 0:
            raise DomainError(f"coloring is partial: vertex {v} has no color")
        if k is not None and int(c) >= k:
            raise DomainError(f"vertex {v} has color {c} outside 0..{k - 1}")
        out.append(int(c))
    return tuple(out)


def verify(inst, col):
    """Edge ids of the arcs whose forbidden pair the coloring realises."""
    phi = np.asarray(as_coloring(col, inst.n, inst.k), dtype=np.int64)
    t = inst.table
    hit = (phi[t[:, 0]] == t[:, 2]) & (phi[t[:, 1]] == t[:, 3]) if inst.m else np.zeros(0, bool)
    return np.flatnonzero(hit).tolist()


def unique_restrictiveness_witnesses(inst):
    """Triples ``(w, e1, e2)`` where parallel in-arcs of ``w`` agree at ``w`` but not at the tail."""
    if inst.m:
        # fast exit: every (head, tail, head color) group has one tail color
        t = inst.table
        full = np.unique(_row_keys(t[:, [1, 0, 3, 2]], (inst.n, inst.n, inst.k, inst.k)))
        group = np.unique(_row_keys(t[:, [1, 0, 3]], (inst.n, inst.n, inst.k)))
        if len(full) == len(group):
            return []
    groups = defaultdict(list)
    for e, (t, h, a, b) in enumerate(inst.arcs):
        groups[(h, t, b)].append(e)
    witnesses = []
    for (w, _, _), es in sorted(groups.items()):
        first = es[0]
        for e in es[1:]:
            if inst.conflicts[e][0] != inst.conflicts[first][0]:
                witnesses.append((w, first, e))
    return witnesses


def is_uniquely_restrictive(inst):
    return not unique_restrictiveness_witnesses(inst)


def restrictiveness(inst):
    """Global restrictiveness (at least 1) and the per-vertex values.

    ``r_v`` is the largest number of distinct tail colors among out-arcs of
    ``v`` that go to one neighbour and share one head color.
    """
    tails_by_group = defaultdict(set)
    for t, h, a, b in inst.arcs:
        tails_by_group[(t, h, b)].add(a)
    per_vertex = {v: 0 for v in range(inst.n)}
    for (t, _, _), colors in tails_by_group.items():
        per_vertex[t] = max(per_vertex[t], len(colors))
    r = max(1, max(per_vertex.values(), default=0))
    return r, per_vertex

"""Encode classical coloring problems as conflict instances."""
from dataclasses import dataclass

from .conflict import ConflictInstance, as_coloring, verify
from .errors import DomainError
from .multigraph import MultiGraph


@dataclass(frozen=True)
class EdgeColoredGraph:
    graph: MultiGraph
    edge_color: tuple
    k: int

    def __post_init__(self):
        colors = tuple(int(c) for c in self.edge_color)
        if len(colors) != self.graph.m:
            raise DomainError("need one color per edge")
        bad = [c for c in colors if not 0 <= c < self.k]
        if bad:
            raise DomainError(f"edge color {bad[0]} outside 0..{self.k - 1}")
        object.__setattr__(self, "edge_color", colors)


@dataclass(frozen=True)
class GraphFamily:
    vertex_count: int
    members: tuple

    def __post_init__(self):
        members = tuple(self.members)
        if not members:
            raise DomainError("a graph family needs at least one member")
        for i, g in enumerate(members):
            if g.n != self.vertex_count:
                raise DomainError(f"member {i} has {g.n} vertices, expected {self.vertex_count}")
        object.__setattr__(self, "members", members)


def proper_to_scc(g, k):
    """G^(k): every edge of the underlying simple graph becomes k monochromatic arcs."""
    if k <= 0:
        raise DomainError("k must be positive")
    simple = g.underlying_simple()
    arcs = [(u, v, c, c) for u, v in simple.edges for c in range(k)]
    return ConflictInstance.from_arcs(g.n, k, arcs)


def adapted_to_scc(ecg):
    arcs = [(u, v, c, c) for (u, v), c in zip(ecg.graph.edges, ecg.edge_color)]
    return ConflictInstance.from_arcs(ecg.graph.n, ecg.k, arcs)


def dp_to_scc(g, matchings, k):
    """Correspondence coloring: ``matchings[(u, v)]`` lists pairs ``(c_u, c_v)``.

    Keys name edges of the underlying simple graph in either order; pairs are
    read in the order of the key.  Each pair set must be a matching in C x C.
    """
    edges = set(g.underlying_simple().edges)
    arcs = []
    for (u, v), pairs in matchings.items():
        if (min(u, v), max(u, v)) not in edges:
            raise DomainError(f"({u}, {v}) is not an edge of the graph")
        pairs = list(dict.fromkeys((int(a), int(b)) for a, b in pairs))
        firsts = [a for a, _ in pairs]
        seconds = [b for _, b in pairs]
        if len(set(firsts)) != len(firsts) or len(set(seconds)) != len(seconds):
            raise DomainError(f"conflicts on edge ({u}, {v}) do not form a matching")
        arcs.extend((u, v, a, b) for a, b in pairs)
    return ConflictInstance.from_arcs(g.n, k, arcs)


def coop_to_adapted(fam):
    """Union of the members; an edge of member ``i`` gets color ``i``."""
    edges, colors = [], []
    for i, g in enumerate(fam.members):
        edges.extend(g.edges)
        colors.extend([i] * g.m)
    return EdgeColoredGraph(MultiGraph(fam.vertex_count, tuple(edges)), tuple(colors), len(fam.members))


def extract_cooperative(fam, col):
    """Vertex sets ``R_i = {v : col(v) = i}``, checked independent in member ``i``."""
    inst = adapted_to_scc(coop_to_adapted(fam))
    phi = as_coloring(col, fam.vertex_count, len(fam.members))
    if verify(inst, phi):
        raise DomainError("coloring is not a valid adapted coloring of the family")
    sets = [set() for _ in fam.members]
    for v, c in enumerate(phi):
        sets[c].add(v)
    for i, g in enumerate(fam.members):
        for u, v in g.edges:
            if u in sets[i] and v in sets[i]:
                raise DomainError(f"R_{i} is not independent in member {i}")
    covered = set().union(*sets)
    if covered != set(range(fam.vertex_count)):
        raise DomainError("color classes do not cover the vertex set")
    return [frozenset(s) for s in sets]

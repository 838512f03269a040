"""Random-inventory solver with Moser-Tardos resampling.

Every vertex draws an inventory of colors, each color independently with
probability ``p``.  A copy of the inventory is pruned: a tail color is
dropped when some out-arc's forbidden head color sits in the head's
(unpruned) inventory.  A vertex whose pruned copy is empty is *bad*; while
bad vertices exist, the inventories of the smallest bad vertex and its
out-neighbours are redrawn.  Once none is bad, any choice from the pruned
copies is a valid coloring.

The module also houses the color-count bounds, the per-vertex ``b`` counts
and the Monte Carlo estimate of a vertex's bad-event probability.
"""
import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import NamedTuple, Optional

import numpy as np

from . import kernels
from .conflict import is_uniquely_restrictive, reorient, restrictiveness, verify
from .errors import DomainError, ResourceError
from .multigraph import degeneracy_order, orient

VARIANTS = ("auto", "greedy", "unique", "general")

SOLVED = "solved"
EXHAUSTED = "exhausted-rounds"
INFEASIBLE = "infeasible-detected"


@dataclass(frozen=True)
class SolverConfig:
    variant: str = "auto"
    probability_override: Optional[float] = None
    max_rounds: Optional[int] = None  # None -> 1000 * n
    seed: int = 0

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise DomainError(f"unknown variant {self.variant!r}; choose from {VARIANTS}")
        p = self.probability_override
        if p is not None and not 0 < p <= 1:
            raise DomainError("probability_override must lie in (0, 1]")
        if self.max_rounds is not None and self.max_rounds < 1:
            raise DomainError("max_rounds must be positive")
        if not -(2**63) <= int(self.seed) < 2**64:
            raise DomainError("seed must fit in 64 bits")


@dataclass
class InventoryState:
    S: np.ndarray
    S_pruned: np.ndarray


@dataclass
class SolverReport:
    outcome: str
    coloring: Optional[tuple]
    rounds: int
    resampled_vertices: int
    p_used: Optional[float]
    variant_used: str
    seed: int
    bad_history: list = field(default_factory=list)

    def as_lines(self):
        p = "none" if self.p_used is None else repr(float(self.p_used))
        return [
            f"outcome={self.outcome}",
            f"rounds={self.rounds}",
            f"resamples={self.resampled_vertices}",
            f"p_used={p}",
            f"variant_used={self.variant_used}",
            f"seed={self.seed}",
        ]


def choose_probability(inst, variant):
    """Inclusion probability for the given variant on ``inst``'s orientation.

    ``unique``: k / 2d capped at 1.  ``general``: k / (2^(r+3) r d) capped at
    1/4.  ``auto`` picks between the two by unique restrictiveness.
    """
    if variant == "greedy":
        raise DomainError("the greedy variant draws no inventories")
    if variant == "auto":
        variant = "unique" if is_uniquely_restrictive(inst) else "general"
    if variant not in ("unique", "general"):
        raise DomainError(f"unknown variant {variant!r}")
    d = inst.max_out_degree()
    if d < 1:
        raise DomainError("instance has no arcs; no probability needed")
    k = inst.k
    if variant == "unique":
        return min(1.0, k / (2 * d))
    r, _ = restrictiveness(inst)
    return min(0.25, k / (2 ** (r + 3) * r * d))


def sample_inventories(inst, p, rng):
    if not 0 < p <= 1:
        raise DomainError("p must lie in (0, 1]")
    S = rng.random((inst.n, inst.k)) < p
    return InventoryState(S, S.copy())


def prune(inst, state):
    """Recompute ``S_pruned`` from ``S``; never reads the previous pruned copy."""
    pruned = kernels.prune(state.S, *inst.arrays)
    return InventoryState(state.S, pruned)


def bad_vertices(state):
    return [int(v) for v in np.flatnonzero(~state.S_pruned.any(axis=1))]


def exclusion_weights(inst):
    """Per vertex pair, the most colors one endpoint's color can rule out at the other.

    Returns ``(a, b, w)`` arrays over unordered pairs ``a < b``.  For a simple
    pair ``w`` is 1; parallel arcs raise it only when several of them share
    the same color at one end.
    """
    t = inst.table
    if inst.m == 0:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty, empty
    # rows (v, u, cc at u, cc at v) for both readings of every arc
    rows = np.concatenate([t[:, [0, 1, 3, 2]], t[:, [1, 0, 2, 3]]])
    n, k = inst.n, inst.k
    full = np.unique(_pack(rows, (n, n, k, k)))
    group = full // k
    g_keys, g_counts = np.unique(group, return_counts=True)
    pair = g_keys // k
    vu = np.stack([pair // n, pair % n], axis=1)
    lo, hi = vu.min(axis=1), vu.max(axis=1)
    key = lo * n + hi
    order = np.lexsort((-g_counts, key))
    key, counts = key[order], g_counts[order]
    first = np.ones(len(key), dtype=bool)
    first[1:] = key[1:] != key[:-1]
    key, w = key[first], counts[first]
    return key // n, key % n, w


def _pack(rows, radices):
    key = np.zeros(rows.shape[0], dtype=np.int64)
    for j, r in enumerate(radices):
        key = key * max(r, 1) + rows[:, j]
    return key


def greedy_order(inst):
    """Smallest-last order on the pair weights, and its weighted degeneracy."""
    a, b, w = exclusion_weights(inst)
    src = np.repeat(np.concatenate([a, b]), np.concatenate([w, w]))
    dst = np.repeat(np.concatenate([b, a]), np.concatenate([w, w]))
    idx = np.argsort(src, kind="stable")
    indptr = np.zeros(inst.n + 1, dtype=np.int64)
    if len(src):
        np.cumsum(np.bincount(src, minlength=inst.n), out=indptr[1:])
    order, d = kernels.smallest_last(inst.n, indptr, dst[idx])
    return order, int(d)


def greedy_solve(inst):
    """Greedy coloring along a smallest-last order.

    When ``v`` is colored, an already colored neighbour ``u`` rules out at most
    the pair weight of ``{u, v}`` colors (see :func:`exclusion_weights`).  The
    order keeps the total over earlier neighbours at most the weighted
    degeneracy ``d_w``, so ``k >= d_w + 1`` always succeeds.  ``d_w`` never
    exceeds the multiplicity-counted degeneracy.
    """
    if inst.n == 0:
        return ()
    order, d_w = greedy_order(inst)
    if inst.k < d_w + 1:
        raise DomainError(f"greedy needs k >= {d_w + 1}, got k = {inst.k}")
    indptr, other, own, oth = inst.incidence
    colors = kernels.greedy_color(inst.n, inst.k, order, indptr, other, own, oth)
    if (colors < 0).any():
        raise AssertionError("greedy ran out of colors above its bound")
    return tuple(int(c) for c in colors)


def _out_neighbour_rows(inst):
    rows = []
    for v, es in enumerate(inst.out_arcs):
        nb = {v}
        nb.update(inst.orientation.direction[e][1] for e in es)
        rows.append(np.asarray(sorted(nb), dtype=np.int64))
    return rows


def moser_tardos_solve(inst, config=None):
    """Solve ``inst`` with greedy or inventory resampling, per ``config.variant``.

    The instance is re-oriented along its smallest-last order first, so
    out-degrees are bounded by the degeneracy ``d``.  ``auto`` uses greedy
    when ``k >= d + 1``, the unique variant on uniquely restrictive
    instances and the general variant otherwise.
    """
    config = config if config is not None else SolverConfig()
    n, k = inst.n, inst.k
    if n == 0:
        return SolverReport(SOLVED, (), 0, 0, None, "greedy", config.seed)
    if k == 0:
        return SolverReport(INFEASIBLE, None, 0, 0, None, config.variant, config.seed)

    ordering = degeneracy_order(inst.graph)
    work = reorient(inst, orient(inst.graph, ordering))
    variant = config.variant
    if variant == "auto":
        if k >= ordering.d + 1:
            variant = "greedy"
        elif is_uniquely_restrictive(work):
            variant = "unique"
        else:
            variant = "general"
    if variant == "greedy" or work.m == 0:
        coloring = greedy_solve(work)
        return SolverReport(SOLVED, coloring, 0, 0, None, "greedy", config.seed)

    p = config.probability_override
    if p is None:
        p = choose_probability(work, variant)
    max_rounds = config.max_rounds if config.max_rounds is not None else 1000 * n
    rng = np.random.default_rng(config.seed % 2**64)
    S = rng.random((n, k)) < p
    arrays = work.arrays
    rows = _out_neighbour_rows(work)
    history = []
    resampled = 0
    for rnd in range(1, max_rounds + 1):
        pruned = kernels.prune(S, *arrays)
        bad = np.flatnonzero(~pruned.any(axis=1))
        history.append(int(len(bad)))
        if not len(bad):
            coloring = tuple(int(c) for c in pruned.argmax(axis=1))
            if verify(inst, coloring):
                raise AssertionError("pruned inventories produced an invalid coloring")
            return SolverReport(SOLVED, coloring, rnd, resampled, p, variant, config.seed, history)
        redraw = rows[bad[0]]
        S[redraw] = rng.random((len(redraw), k)) < p
        resampled += len(redraw)
    return SolverReport(EXHAUSTED, None, max_rounds, resampled, p, variant, config.seed, history)


BOUND_MODES = ("degenerate", "max-degree", "multiplicity", "restrictiveness", "cooperative")


def min_colors_bound(d, delta, mode, mu=None, r=None):
    """Number of colors guaranteed to suffice, by the selected bound (natural logs).

    ``degenerate``       ceil(2 sqrt(d (1 + ln((d+1) delta))))
    ``max-degree``       ceil(sqrt(e (2 delta - 1)))
    ``multiplicity``     ceil(sqrt(d) 2^(mu/2+2) sqrt(mu) sqrt(1 + ln((d+1) delta)))
    ``restrictiveness``  same with ``r`` in place of ``mu``
    ``cooperative``      ceil(13 (1 + d ln(d delta)))
    """
    if mode == "simple-degenerate":
        mode = "degenerate"
    if mode not in BOUND_MODES:
        raise DomainError(f"unknown bound mode {mode!r}; choose from {BOUND_MODES}")
    if delta is None or delta < 1:
        raise DomainError("delta must be at least 1")
    if mode == "max-degree":
        return math.ceil(math.sqrt(math.e * (2 * delta - 1)))
    if d is None or d < 1:
        raise DomainError("d must be at least 1")
    if mode == "degenerate":
        return math.ceil(2 * math.sqrt(d * (1 + math.log((d + 1) * delta))))
    if mode == "cooperative":
        return math.ceil(13 * (1 + d * math.log(d * delta)))
    s = mu if mode == "multiplicity" else r
    if s is None or s < 1:
        raise DomainError(f"mode {mode} needs {'mu' if mode == 'multiplicity' else 'r'} >= 1")
    return math.ceil(
        math.sqrt(d) * 2 ** (s / 2 + 2) * math.sqrt(s) * math.sqrt(1 + math.log((d + 1) * delta))
    )


def b_counts(inst, v):
    """Per-color arc counts at ``v`` and counts of jointly deletable color sets.

    ``b[c]`` counts out-arcs of ``v`` whose tail color is ``c``.
    ``b_sets[C]`` counts sets of out-arcs to one neighbour, all sharing one
    head color, whose tail colors are exactly ``C``; singletons agree with
    ``b``.
    """
    b = {c: 0 for c in range(inst.k)}
    groups = defaultdict(Counter)
    for e in inst.out_arcs[v]:
        _, w, a, c_star = inst.arcs[e]
        b[a] += 1
        groups[(w, c_star)][a] += 1
    b_sets = Counter()
    for tails in groups.values():
        colors = sorted(tails)
        if len(colors) > 20:
            raise ResourceError("more than 20 parallel arcs share a head color")
        for size in range(1, len(colors) + 1):
            for sub in combinations(colors, size):
                b_sets[frozenset(sub)] += math.prod(tails[c] for c in sub)
    return b, dict(b_sets)


def elementary_symmetric(values, z):
    """Sum over ``i_1 < ... < i_z`` of the products of ``values``."""
    e = [1] + [0] * z
    for x in values:
        for j in range(z, 0, -1):
            e[j] += e[j - 1] * x
    return e[z]


class ClaimResult(NamedTuple):
    lhs: int
    rhs: int
    holds: bool


def claim_check(inst, v, z, q, r=None, max_tuples=10**7):
    """Compare the disjoint-set sum against ``2^(z r) sigma_z`` at vertex ``v``.

    The left side sums ``b(C_1) ... b(C_z)`` over pairwise disjoint color sets
    with ``|C_i| = q_i``, listed in increasing order of their smallest
    element.  ``sigma_z`` is the degree-``z`` elementary symmetric sum of the
    per-color counts.
    """
    q = [int(x) for x in q]
    if z != len(q) or z < 1:
        raise DomainError("q must have exactly z >= 1 parts")
    if r is None:
        r, _ = restrictiveness(inst)
    if min(q) < 1 or max(q) > r or sum(q) > inst.k:
        raise DomainError(f"parts must satisfy 1 <= q_i <= r = {r} and sum(q) <= k = {inst.k}")
    k = inst.k
    if math.prod(math.comb(k, x) for x in q) > max_tuples:
        raise ResourceError("enumeration exceeds the tuple budget")
    b, b_sets = b_counts(inst, v)

    def total(i, used, last_min):
        if i == z:
            return 1
        acc = 0
        for C in combinations([c for c in range(last_min + 1, k) if c not in used], q[i]):
            weight = b_sets.get(frozenset(C), 0)
            if weight:
                acc += weight * total(i + 1, used | set(C), C[0])
        return acc

    lhs = total(0, frozenset(), -1)
    rhs = 2 ** (z * r) * elementary_symmetric([b[c] for c in range(k)], z)
    return ClaimResult(lhs, rhs, lhs <= rhs)


def sample_pruned_inventory(inst, v, p, samples, rng):
    """``samples`` independent draws of the pruned inventory of ``v``, shape ``(samples, k)``.

    Only the inventories of ``v`` and its out-neighbours are drawn, which is
    everything the pruned copy at ``v`` depends on.
    """
    k = inst.k
    arcs = [inst.arcs[e] for e in inst.out_arcs[v]]
    nbrs = sorted({w for _, w, _, _ in arcs})
    slot = {w: i for i, w in enumerate(nbrs)}
    Sv = rng.random((samples, k)) < p
    Sw = rng.random((samples, len(nbrs), k)) < p
    pruned = Sv.copy()
    for _, w, a, c_star in arcs:
        pruned[:, a] &= ~Sw[:, slot[w], c_star]
    return pruned


def estimate_bad_probability(inst, v, p, samples, seed, chunk=1 << 16):
    """Monte Carlo frequency of an empty pruned inventory at ``v``, with its standard error.

    Samples are drawn in chunks, each from its own child of the seed, so the
    result depends only on ``(seed, samples, chunk)``.
    """
    if samples < 1:
        raise DomainError("samples must be at least 1")
    if not 0 <= p <= 1:
        raise DomainError("p must lie in [0, 1]")
    sizes = [chunk] * (samples // chunk)
    if samples % chunk:
        sizes.append(samples % chunk)
    children = np.random.SeedSequence(seed).spawn(len(sizes))
    hits = 0
    for size, child in zip(sizes, children):
        pruned = sample_pruned_inventory(inst, v, p, size, np.random.default_rng(child))
        hits += int((~pruned.any(axis=1)).sum())
    est = hits / samples
    return est, math.sqrt(est * (1 - est) / samples)

"""Exact solvers for small instances."""
import math
from collections import Counter
from itertools import combinations, product

import numpy as np

from . import kernels
from .conflict import ConflictInstance
from .errors import ResourceError
from .multigraph import degeneracy_order
from .reductions import proper_to_scc


def backtracking_solve(inst, order=None):
    """A valid coloring of ``inst``, or ``None`` when there is none.

    Vertices are branched in smallest-last order (or ``order``), colors in
    increasing order; each assignment immediately removes the colors it
    forbids from uncolored neighbours and backtracks on an empty domain.
    """
    if order is None:
        order = degeneracy_order(inst.graph).order
    indptr, other, own, oth = inst.incidence
    found = kernels.backtrack(inst.n, inst.k, np.asarray(order, dtype=np.int64), indptr, other, own, oth)
    return None if found is None else tuple(int(c) for c in found)


def chromatic_number(g):
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        if backtracking_solve(proper_to_scc(g, k)) is not None:
            return k
    raise AssertionError("unreachable: n colors always suffice")


def _conflict_functions(classes, k):
    """Every maximal conflict function up to per-vertex relabelling.

    A parallel class of multiplicity ``m`` gets ``min(m, k^2)`` distinct
    pairs; repeating a pair only removes a constraint.  The first class is
    forced to contain ``(0, 0)``.
    """
    pairs = [(a, b) for a in range(k) for b in range(k)]
    per_class = []
    for i, (_, mult) in enumerate(classes):
        size = min(mult, k * k)
        options = combinations(pairs, size)
        if i == 0:
            options = (opt for opt in options if (0, 0) in opt)
        per_class.append(options)
    return product(*per_class)


def count_conflict_functions(g, k):
    classes = Counter((min(u, v), max(u, v)) for u, v in g.edges)
    total = 1
    for i, mult in enumerate(classes.values()):
        size = min(mult, k * k)
        total *= math.comb(k * k - 1, size - 1) if i == 0 else math.comb(k * k, size)
    return total


def adversarial_chi_con(g, k_max, budget=10**6):
    """Least ``k <= k_max`` such that every conflict function on ``g`` is colorable.

    Returns ``None`` if no such ``k`` exists up to ``k_max``.  Raises
    :class:`ResourceError` when some ``k`` would need more than ``budget``
    conflict functions.
    """
    classes = sorted(Counter((min(u, v), max(u, v)) for u, v in g.edges).items())
    order = degeneracy_order(g).order
    for k in range(1, k_max + 1):
        if not classes:
            return k
        if count_conflict_functions(g, k) > budget:
            raise ResourceError(f"k = {k} needs more than {budget} conflict functions")
        all_colorable = True
        for choice in _conflict_functions(classes, k):
            arcs = [
                (u, v, a, b)
                for ((u, v), _), chosen in zip(classes, choice)
                for a, b in chosen
            ]
            inst = ConflictInstance.from_arcs(g.n, k, arcs)
            if backtracking_solve(inst, order) is None:
                all_colorable = False
                break
        if all_colorable:
            return k
    return None

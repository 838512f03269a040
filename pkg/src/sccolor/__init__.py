"""Single-conflict graph coloring.

Every edge of a multigraph forbids one ordered pair of endpoint colors; the
task is a vertex coloring that realises none of them.
"""
from .conflict import (
    ConflictInstance,
    conflict_color,
    is_uniquely_restrictive,
    normalize,
    reorient,
    restrictiveness,
    unique_restrictiveness_witnesses,
    verify,
)
from .errors import DomainError, InvalidOrderingError, ParseError, ResourceError, SCCError
from .kernels import BACKEND
from .lll import (
    InventoryState,
    SolverConfig,
    SolverReport,
    b_counts,
    bad_vertices,
    choose_probability,
    claim_check,
    estimate_bad_probability,
    greedy_solve,
    min_colors_bound,
    moser_tardos_solve,
    prune,
    sample_inventories,
)
from .multigraph import (
    DegeneracyOrder,
    MultiGraph,
    Orientation,
    degeneracy_order,
    max_degree,
    multiplicity,
    orient,
)
from .oracle import adversarial_chi_con, backtracking_solve, chromatic_number
from .reductions import (
    EdgeColoredGraph,
    GraphFamily,
    adapted_to_scc,
    coop_to_adapted,
    dp_to_scc,
    extract_cooperative,
    proper_to_scc,
)

__version__ = "0.1.0"

"""Vertex-coloring toolkit: iterative k-reduction with tabu-search engines
and recycling initial-solution generators."""

from .coloring import (
    UNCOLORED,
    CompleteColoring,
    PartialColoring,
    color_classes,
    compact,
    conflicting_vertex_count,
    is_conflict_free,
    is_legal,
    penalty_complete,
    penalty_partial,
)
from .constructive import (
    dsatur,
    greedy_k_complete,
    greedy_k_partial,
    random_k,
    random_k_partial,
)
from .driver import RunRecord, initial_penalty_curve, solve_vcol
from .graph import (
    DegreeStats,
    Graph,
    degree_stats,
    gnm_random_graph,
    gnp_random_graph,
    parse_dimacs,
    write_dimacs,
)
from .oracle import exact_chromatic_number, is_k_colorable
from .recycle import (
    RecycleConfig,
    least_selection_recolor,
    recycle_complete,
    recycle_partial,
    select_smallest_class,
)
from .tabu import (
    DynTenure,
    FooTenure,
    SearchBudget,
    SearchOutcome,
    SearchStatus,
    partialcol_search,
    tabucol_search,
    tenure,
)

__version__ = "0.1.0"

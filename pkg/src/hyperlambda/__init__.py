"""L(h,k)-colouring of hypergraphs: data model, exact solver, constructive
colouring schemes, and spectral / expansion inequality checks."""

from .constraints import (
    ColouringReport,
    ConstraintSet,
    Violation,
    build_constraints,
    check,
    holes,
    span,
)
from .core import (
    Diagnostic,
    Hypergraph,
    InvalidHypergraphError,
    StructureSummary,
    INFINITE,
    degree,
    diagnose,
    distance,
    star,
    structure_summary,
    validate,
)
from .families import (
    cartesian_product,
    complete_graph,
    complete_hypergraph,
    complete_uniform,
    cube_graph,
    cycle_graph,
    hyperpath,
    hypertree_random,
    is_hypertree,
    line_graph,
    path_graph,
    petersen_graph,
    s_section,
    star_hypergraph,
)
from .solver import (
    SolveBudget,
    SolveResult,
    chromatic_number_graph,
    find_colouring_at_span,
    greedy_colouring,
    lambda_exact,
    strong_chromatic_exact,
    strong_independence_exact,
    strong_partition_exact,
    strong_stable_set_exact,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

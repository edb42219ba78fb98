"""Middle graphs and exact (total) domination.

The package builds middle graphs and related operator graphs, solves their
domination and total domination numbers exactly, evaluates the closed
forms known for standard families, constructs explicit witness sets that
meet those values, and replays every supported statement against the
solver on desk-scale grids.
"""

from .families import (
    Family,
    FamilySpec,
    all_graphs,
    all_trees,
    complete,
    complete_bipartite,
    cycle,
    double_star,
    edgeless,
    friendship,
    generate,
    path,
    random_connected_graph,
    star,
    wheel,
)
from .formulas import (
    FormulaResult,
    NordhausGaddumBounds,
    TheoremId,
    Witness,
    closed_form,
    construct_witness,
    diam3_leaf_counts,
    general_bounds,
    join_small_p_bounds,
    leaf_lower_bound,
    nordhaus_gaddum_bounds,
    plus_one_vertex_sandwich,
    tree_diam3,
    two_thirds,
)
from .graph import EdgeNode, Graph, Original, VertexLabel, vertices_by_label
from .io import read_graph, write_graph
from .operators import (
    MiddleGraph,
    corona_k1,
    join,
    line_graph,
    middle_graph,
    two_corona,
)
from .solver import (
    SolveResult,
    domination_number,
    edgeify,
    is_dominating,
    is_total_dominating,
    middle_total_domination,
    min_total_dom_over_subsets,
    total_domination_number,
    total_domination_number_middle,
)
from .verify import (
    DEFAULT_GRID,
    InstanceRecord,
    NordhausGaddumRecord,
    VerificationReport,
    nordhaus_gaddum_scan,
    render_csv,
    render_ng_csv,
    render_text,
    verify_all,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "EdgeNode", "Family", "FamilySpec", "FormulaResult", "Graph",
    "InstanceRecord", "MiddleGraph", "NordhausGaddumBounds",
    "NordhausGaddumRecord", "Original", "SolveResult", "TheoremId",
    "VerificationReport", "VertexLabel", "Witness", "DEFAULT_GRID",
    "all_graphs", "all_trees", "closed_form", "complete",
    "complete_bipartite", "construct_witness", "corona_k1", "cycle",
    "diam3_leaf_counts", "domination_number", "double_star", "edgeify",
    "edgeless", "friendship", "general_bounds", "generate",
    "is_dominating", "is_total_dominating", "join", "join_small_p_bounds",
    "leaf_lower_bound", "line_graph", "middle_graph",
    "middle_total_domination", "min_total_dom_over_subsets",
    "nordhaus_gaddum_bounds", "nordhaus_gaddum_scan", "path",
    "plus_one_vertex_sandwich", "random_connected_graph", "read_graph",
    "render_csv", "render_ng_csv", "render_text", "star",
    "total_domination_number", "total_domination_number_middle",
    "tree_diam3", "two_corona", "two_thirds", "verify_all",
    "verify_theorem", "vertices_by_label", "wheel", "write_graph",
    "__version__",
]

"""Graph-minors toolkit: generators, exact width solvers, minor search and
the constructive embedding lemmas, backed by the C++ core."""

from minors._core import (
    Graph,
    bound,
    comb,
    compactify,
    complete_binary_tree,
    complete_graph,
    cross_check,
    cycle_graph,
    double_wheel,
    embed_pw2_in_xi,
    es_extract,
    from_graph6,
    from_json,
    grid_2xk,
    is_linked,
    is_minor,
    path_graph,
    pathwidth,
    pathwidth_decomposition,
    read_dimacs,
    run_sweep,
    to_graph6,
    to_json,
    treewidth,
    verify_decomposition,
    verify_model,
    wheel,
    wheel_from_tree_path,
    xi,
    xi_from_double_path,
    yurt,
)

__all__ = [
    "Graph",
    "bound",
    "comb",
    "compactify",
    "complete_binary_tree",
    "complete_graph",
    "cross_check",
    "cycle_graph",
    "double_wheel",
    "embed_pw2_in_xi",
    "es_extract",
    "from_graph6",
    "from_json",
    "grid_2xk",
    "is_linked",
    "is_minor",
    "path_graph",
    "pathwidth",
    "pathwidth_decomposition",
    "read_dimacs",
    "run_sweep",
    "to_graph6",
    "to_json",
    "treewidth",
    "verify_decomposition",
    "verify_model",
    "wheel",
    "wheel_from_tree_path",
    "xi",
    "xi_from_double_path",
    "yurt",
]

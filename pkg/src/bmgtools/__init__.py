"""Best match graphs: construction, recognition, least resolved trees,
and minimum completion to binary-explainable graphs."""

from .bmg import best_matches_of, bmg_from_2lrt_fast, bmg_from_tree
from .completion import (
    CompletionResult,
    collapsed_tree,
    complete_to_bebmg,
    mandatory_hourglass_arcs,
)
from .forbidden import (
    BeViolation,
    Bmg2Verdict,
    SubgraphWitness,
    check_2bmg,
    find_f1,
    find_f2,
    find_f3,
    find_hourglass,
    is_2bmg,
    iter_hourglasses,
    tree_binary_explainability_violation,
    witness_holds,
)
from .graph import ColoredDigraph
from .graphio import GraphTextError, parse_graph, serialize_graph
from .lrt import NotABmgError, lrt_from_2bmg, lrt_from_tree, redundant_edges
from .newick import NewickError, parse_tree, serialize_tree
from .oracle import enumerate_trees, oracle_is_bmg, oracle_lrt, oracle_min_completion
from .tree import PhyloTree

__version__ = "0.1.0"

__all__ = [
    "BeViolation",
    "Bmg2Verdict",
    "ColoredDigraph",
    "CompletionResult",
    "GraphTextError",
    "NewickError",
    "NotABmgError",
    "PhyloTree",
    "SubgraphWitness",
    "best_matches_of",
    "bmg_from_2lrt_fast",
    "bmg_from_tree",
    "check_2bmg",
    "collapsed_tree",
    "complete_to_bebmg",
    "enumerate_trees",
    "find_f1",
    "find_f2",
    "find_f3",
    "find_hourglass",
    "is_2bmg",
    "iter_hourglasses",
    "lrt_from_2bmg",
    "lrt_from_tree",
    "mandatory_hourglass_arcs",
    "oracle_is_bmg",
    "oracle_lrt",
    "oracle_min_completion",
    "parse_graph",
    "parse_tree",
    "redundant_edges",
    "serialize_graph",
    "serialize_tree",
    "tree_binary_explainability_violation",
    "witness_holds",
]

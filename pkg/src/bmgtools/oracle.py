"""Brute-force reference implementations for desk-scale verification.

Everything here trades speed for being obviously exhaustive: trees are
enumerated by inserting one labeled leaf at a time, graph recognition
tries every explaining tree, and completions are enumerated by subset
size.  Size guards are hard errors so a "none" answer is always proven.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from .bmg import bmg_from_tree
from .forbidden import find_hourglass, is_2bmg
from .graph import ColoredDigraph
from .lrt import redundant_edges
from .tree import PhyloTree

MAX_ENUM_LEAVES = 8
MAX_COMPLETION_VERTICES = 6
MAX_COMPLETION_MISSING = 20

# leaf-labeled rooted trees where every inner node has >= 2 children,
# encoded as nested tuples: a leaf index, or a tuple of subtrees
_Shape = object


def _insertions(shape, leaf):
    """All shapes obtained by adding `leaf` to `shape`, each exactly once."""
    yield (shape, leaf)  # new node above `shape`
    if isinstance(shape, tuple):
        yield shape + (leaf,)  # new child of this inner node
        for i, sub in enumerate(shape):
            for grown in _insertions(sub, leaf):
                yield shape[:i] + (grown,) + shape[i + 1 :]


def _shapes(n: int):
    if n == 1:
        yield 0
        return
    for shape in _shapes(n - 1):
        yield from _insertions(shape, n - 1)


def _shape_to_tree(shape, leaves: tuple[tuple[str, str], ...]) -> PhyloTree:
    children: dict[int, tuple[int, ...]] = {}
    leaf_names: dict[int, str] = {}
    leaf_colors: dict[int, str] = {}
    next_id = len(leaves)

    def build(node) -> int:
        nonlocal next_id
        if isinstance(node, int):
            children[node] = ()
            leaf_names[node], leaf_colors[node] = leaves[node]
            return node
        u = next_id
        next_id += 1
        children[u] = tuple(build(sub) for sub in node)
        return u

    root = build(shape)
    return PhyloTree(root, children, leaf_names, leaf_colors)


def enumerate_trees(leaves):
    """All rooted phylogenetic trees on the given colored leaf list.

    `leaves` is a sequence of (name, color) pairs; every labeled tree on
    exactly these leaves is produced exactly once.
    """
    leaves = tuple(leaves)
    n = len(leaves)
    if not 1 <= n <= MAX_ENUM_LEAVES:
        raise ValueError(f"tree enumeration supports 1..{MAX_ENUM_LEAVES} leaves, got {n}")
    for shape in _shapes(n):
        yield _shape_to_tree(shape, leaves)


@lru_cache(maxsize=64)
def _bmg_index(colored_leaves: tuple[tuple[str, str], ...]):
    """Arc set -> explaining tree, over every tree on the given leaves.

    Keeps the first tree (in enumeration order) per distinct graph.
    """
    index: dict[frozenset[tuple[str, str]], PhyloTree] = {}
    for t in enumerate_trees(colored_leaves):
        key = bmg_from_tree(t).arc_name_set()
        if key not in index:
            index[key] = t
    return index


def oracle_is_bmg(g: ColoredDigraph) -> PhyloTree | None:
    """Search every tree on g's colored vertex set for one explaining g."""
    if g.n_vertices > MAX_ENUM_LEAVES:
        raise ValueError(f"oracle recognition is limited to {MAX_ENUM_LEAVES} vertices")
    if g.n_vertices == 0:
        return None
    key = g.arc_name_set()
    if g.n_vertices <= 6:
        return _bmg_index(tuple(sorted(g.vertex_items()))).get(key)
    for t in enumerate_trees(sorted(g.vertex_items())):
        if bmg_from_tree(t).arc_name_set() == key:
            return t
    return None


def _is_target(h: ColoredDigraph, two_colored: bool, binary_explainable: bool) -> bool:
    if two_colored:
        if not is_2bmg(h):
            return False
    elif oracle_is_bmg(h) is None:
        return False
    return not binary_explainable or find_hourglass(h) is None


def oracle_min_completion(g: ColoredDigraph, binary_explainable: bool = True):
    """All minimum arc sets completing `g` to a (binary-explainable) BMG.

    Tries insertion sets of missing opposite-color arcs in increasing
    size; returns every solution of the first size that has any, as a
    tuple of sorted arc-name tuples.  Membership is checked with the
    forbidden-subgraph recognizer for 2 colors and with the explaining
    tree search otherwise, plus hourglass-freeness when
    `binary_explainable` is set.
    """
    n = g.n_vertices
    if n > MAX_COMPLETION_VERTICES:
        raise ValueError(f"completion oracle is limited to {MAX_COMPLETION_VERTICES} vertices")
    if not g.is_properly_colored():
        raise ValueError("graph is not properly colored")
    names = tuple(name for name, _ in g.vertex_items())
    colors = tuple(color for _, color in g.vertex_items())
    missing = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and colors[u] != colors[v] and not g.has_arc(u, v)
    ]
    if len(missing) > MAX_COMPLETION_MISSING:
        raise ValueError(f"too many missing arcs ({len(missing)}) for the completion oracle")
    two_colored = len(set(colors)) == 2
    base = frozenset(g.arcs())
    for size in range(len(missing) + 1):
        found = []
        for extra in itertools.combinations(missing, size):
            h = ColoredDigraph._from_internal(names, colors, base | frozenset(extra))
            if _is_target(h, two_colored, binary_explainable):
                found.append(tuple(sorted((names[u], names[v]) for u, v in extra)))
        if found:
            return tuple(sorted(found))
    # reachable only for degenerate inputs (fewer than 2 colors present)
    return ()


def oracle_lrt(t: PhyloTree) -> PhyloTree:
    """Least resolved tree by trying every subset of inner edges.

    Returns the contraction by the largest edge set that leaves the best
    match graph unchanged.
    """
    if t.n_leaves > 6:
        raise ValueError("LRT oracle is limited to 6 leaves")
    target = bmg_from_tree(t).arc_name_set()
    inner = t.inner_edges()
    best: PhyloTree | None = None
    best_size = -1
    for k in range(len(inner) + 1):
        for subset in itertools.combinations(inner, k):
            contracted = t.contract_edges(subset)
            if bmg_from_tree(contracted).arc_name_set() == target and k > best_size:
                best = contracted
                best_size = k
    assert best is not None
    if __debug__:
        assert not redundant_edges(best)
    return best

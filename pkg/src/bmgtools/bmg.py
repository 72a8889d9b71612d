"""Best match graphs of leaf-colored trees.

A leaf y is a best match of a leaf x when y's color differs from x's and
no leaf of y's color has a strictly lower last common ancestor with x.
The best match graph of a tree has the leaves as vertices and an arc
from x to every best match of x.
"""
from __future__ import annotations

from .graph import ColoredDigraph
from .tree import PhyloTree


def _lowest_ancestor_with_color(t: PhyloTree, x: int, color: str) -> int | None:
    """Lowest ancestor of leaf `x` whose subtree contains `color`, if any."""
    v: int | None = x
    while v is not None and color not in t.subtree_colors(v):
        v = t.parent(v)
    return v


def _color_leaves_below(t: PhyloTree, v: int, color: str) -> tuple[int, ...]:
    return tuple(u for u in t.subtree_leaves(v) if t.leaf_color(u) == color)


def best_matches_of(t: PhyloTree, x: int, color: str) -> tuple[int, ...]:
    """All best matches of leaf `x` with the given color, sorted by id.

    Asking for the leaf's own color is an error; a color absent from the
    tree yields an empty result.
    """
    if not t.is_leaf(x):
        raise ValueError(f"node {x} is not a leaf")
    if color == t.leaf_color(x):
        raise ValueError("best matches are defined for colors other than the leaf's own")
    v = _lowest_ancestor_with_color(t, x, color)
    if v is None:
        return ()
    return tuple(sorted(_color_leaves_below(t, v, color)))


def bmg_from_tree(t: PhyloTree) -> ColoredDigraph:
    """Best match graph of a leaf-colored tree.

    Vertices are the leaves (names and colors carried over); there is an
    arc (x, y) iff y is a best match of x.  One upward walk per (leaf,
    color) pair finds the lowest ancestor containing that color; the
    color's leaves below it are collected once per distinct ancestor.
    """
    leaves = t.leaves()
    names = tuple(t.leaf_name(u) for u in leaves)
    colors = tuple(t.leaf_color(u) for u in leaves)
    gid = {u: i for i, u in enumerate(leaves)}
    all_colors = t.colors()
    targets: dict[tuple[int, str], tuple[int, ...]] = {}
    arc_ids: set[tuple[int, int]] = set()
    for x in leaves:
        cx = t.leaf_color(x)
        for c in all_colors:
            if c == cx:
                continue
            v = _lowest_ancestor_with_color(t, x, c)
            if v is None:
                continue
            key = (v, c)
            hits = targets.get(key)
            if hits is None:
                hits = targets[key] = _color_leaves_below(t, v, c)
            xi = gid[x]
            for y in hits:
                arc_ids.add((xi, gid[y]))
    return ColoredDigraph._from_internal(names, colors, frozenset(arc_ids))


def _lrt_fast_parts(
    t: PhyloTree,
) -> tuple[tuple[str, ...], tuple[str, ...], frozenset[tuple[int, int]]]:
    """Names, colors and arc ids of the fast-path graph.

    Vertices are the leaves ordered by node id, so a tree whose leaf ids
    are dense 0..n-1 yields a graph aligned with those ids.
    """
    if len(t.colors()) > 2:
        raise ValueError("fast path requires at most 2 leaf colors")
    leaves = sorted(t.leaves())
    names = tuple(t.leaf_name(u) for u in leaves)
    colors = tuple(t.leaf_color(u) for u in leaves)
    if leaves == list(range(len(leaves))):
        gid = None  # dense leaf ids map to themselves
    else:
        gid = {u: i for i, u in enumerate(leaves)}
    leaf_color = t.leaf_color
    by_parent: dict[int, tuple[list[int], list[int]]] = {}
    color_a = colors[0] if colors else ""
    arc_ids: set[tuple[int, int]] = set()
    add = arc_ids.add
    for x in leaves:
        u = t.parent(x)
        if u is None:
            continue
        split = by_parent.get(u)
        if split is None:
            split = by_parent[u] = ([], [])
            if gid is None:
                for v in t.subtree_leaves(u):
                    split[leaf_color(v) != color_a].append(v)
            else:
                for v in t.subtree_leaves(u):
                    split[leaf_color(v) != color_a].append(gid[v])
        opposite = split[leaf_color(x) == color_a]
        xi = x if gid is None else gid[x]
        for yi in opposite:
            add((xi, yi))
    return names, colors, frozenset(arc_ids)


def bmg_from_2lrt_fast(t: PhyloTree, validate: bool = False) -> ColoredDigraph:
    """Best match graph of a two-colored least resolved tree.

    On the LRT of a 2-colored best match graph, the arcs of the graph are
    exactly the pairs (x, y) with differing colors and y below the parent
    of x; this emits them directly, one subtree collection per distinct
    leaf parent.  The caller asserts that `t` is such an LRT; pass
    ``validate=True`` to cross-check against the generic construction.
    """
    names, colors, arc_ids = _lrt_fast_parts(t)
    g = ColoredDigraph._from_internal(names, colors, arc_ids)
    if validate and g != bmg_from_tree(t):
        raise ValueError("tree is not the LRT of a 2-colored best match graph")
    return g

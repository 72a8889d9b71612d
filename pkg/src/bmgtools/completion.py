"""Collapsed trees and minimum completion to a binary-explainable BMG.

Collapsing a 2-colored tree replaces the subtree below every inner node
that has leaf children of both colors by a star.  Applied to the least
resolved tree of a 2-colored best match graph, the collapsed tree
explains the unique minimum arc completion of the graph to a
binary-explainable best match graph.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bmg import _lrt_fast_parts
from .forbidden import iter_hourglasses
from .graph import ColoredDigraph
from .lrt import lrt_from_2bmg
from .tree import PhyloTree


@dataclass(frozen=True)
class CompletionResult:
    """Minimum completion of a 2-colored BMG to a binary-explainable one."""

    inserted: tuple[tuple[str, str], ...]
    completed_graph: ColoredDigraph
    tree: PhyloTree
    collapsed_subtrees: int

    @property
    def inserted_count(self) -> int:
        return len(self.inserted)


def _collapse(t: PhyloTree) -> tuple[PhyloTree, int]:
    """Collapsed tree plus the number of subtrees actually flattened."""
    if len(t.colors()) != 2:
        raise ValueError("collapsing requires exactly 2 leaf colors")
    children: dict[int, tuple[int, ...]] = {}
    collapsed = 0
    stack = [t.root]
    while stack:
        u = stack.pop()
        support_colors = {t.leaf_color(c) for c in t.support_leaves(u)}
        if len(support_colors) == 2:
            # topmost qualifying node: the whole subtree becomes a star
            below = t.subtree_leaves(u)
            children[u] = below
            for leaf in below:
                children[leaf] = ()
            if len(below) != len(t.children(u)):
                collapsed += 1
        else:
            cs = t.children(u)
            children[u] = cs
            stack.extend(cs)
    leaf_names = {u: t.leaf_name(u) for u in children if not children[u]}
    leaf_colors = {u: t.leaf_color(u) for u in leaf_names}
    return PhyloTree(t.root, children, leaf_names, leaf_colors), collapsed


def collapsed_tree(t: PhyloTree) -> PhyloTree:
    """Collapse every maximal subtree whose root has leaf children of both colors.

    Single top-down pass; nodes below a qualifying node are dropped, all
    leaves are re-parented to it.  Surviving nodes keep their ids.
    """
    return _collapse(t)[0]


def complete_to_bebmg(g: ColoredDigraph) -> CompletionResult:
    """Unique minimum arc completion of a 2-colored BMG to a binary-explainable BMG.

    Builds the least resolved tree of `g` (failures propagate), collapses
    it, and reads the completed graph off the collapsed tree; the inserted
    arcs are the difference to `g`.
    """
    lrt = lrt_from_2bmg(g)
    star, collapsed = _collapse(lrt)
    # the collapsed tree is again a least resolved tree, so the fast
    # reconstruction applies; its leaf node ids are g's vertex ids, so the
    # resulting graph is aligned with g
    names, colors, arc_ids = _lrt_fast_parts(star)
    assert names == tuple(name for name, _ in g.vertex_items())
    completed = ColoredDigraph._from_internal(names, colors, arc_ids)
    inserted = tuple(
        sorted((g.name(u), g.name(v)) for u, v in arc_ids - g.arc_id_set())
    )
    return CompletionResult(inserted, completed, star, collapsed)


def mandatory_hourglass_arcs(g: ColoredDigraph) -> tuple[tuple[str, str], ...]:
    """Arcs forced into every completion of `g` to a binary-explainable BMG.

    Every induced hourglass (x, x', y, y') forces the two missing arcs
    (x', y) and (y', x); this returns their union over all hourglasses,
    as sorted (src, dst) name pairs.
    """
    forced: set[tuple[str, str]] = set()
    for w in iter_hourglasses(g):
        x, xp, y, yp = w.vertices
        forced.add((g.name(xp), g.name(y)))
        forced.add((g.name(yp), g.name(x)))
    return tuple(sorted(forced))

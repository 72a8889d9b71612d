"""Least resolved trees.

A tree edge is redundant when contracting it leaves the best match graph
unchanged; the least resolved tree (LRT) of a best match graph is the
unique explaining tree without redundant edges.  It is obtained from any
explaining tree by contracting all redundant edges at once.

For 2-colored best match graphs the LRT is also built directly from the
graph by peeling off the root's support leaves and recursing on the
connected components of the remainder; the result is verified by
reconstructing the graph from the tree.
"""
from __future__ import annotations

from .bmg import _lowest_ancestor_with_color, _lrt_fast_parts
from .graph import ColoredDigraph
from .tree import PhyloTree


class NotABmgError(Exception):
    """Input graph is not a 2-colored best match graph.

    When construction succeeded but verification failed, `diff` holds the
    symmetric difference between the input arcs and the arcs of the graph
    explained by the candidate tree, as sorted (src, dst) name pairs.
    """

    def __init__(self, detail: str, diff: tuple[tuple[str, str], ...] = ()) -> None:
        super().__init__(f"not a 2-colored best match graph: {detail}")
        self.detail = detail
        self.diff = diff


def redundant_edges(t: PhyloTree) -> tuple[tuple[int, int], ...]:
    """All redundant inner edges of `t` w.r.t. its own best match graph.

    An inner edge (u, v) is non-redundant iff some arc (a, b) of the best
    match graph has its last common ancestor at v while b's color also
    occurs below u outside the subtree of v.  Every arc (a, b) has its
    last common ancestor at the lowest ancestor of a whose subtree
    contains b's color, so the arcs are aggregated per (ancestor, color)
    pair without materializing the graph.
    """
    markers: dict[int, set[str]] = {}
    all_colors = t.colors()
    for x in t.leaves():
        cx = t.leaf_color(x)
        for c in all_colors:
            if c == cx:
                continue
            v = _lowest_ancestor_with_color(t, x, c)
            if v is not None:
                markers.setdefault(v, set()).add(c)
    out: list[tuple[int, int]] = []
    for u, v in t.inner_edges():
        marked = markers.get(v)
        if marked:
            outside: set[str] = set()
            for w in t.children(u):
                if w != v:
                    outside |= t.subtree_colors(w)
            if marked & outside:
                continue
        out.append((u, v))
    return tuple(out)


def lrt_from_tree(t: PhyloTree) -> PhyloTree:
    """The least resolved tree explaining the same best match graph as `t`.

    Contracts all redundant edges of `t` in a single pass.
    """
    result = t.contract_edges(redundant_edges(t))
    if __debug__:
        assert not redundant_edges(result)
    return result


def _weak_components(g: ColoredDigraph, vs: frozenset[int]) -> list[tuple[int, ...]]:
    """Weakly connected components of the subgraph induced by `vs`.

    Components are sorted by smallest vertex id, members ascending.
    """
    seen: set[int] = set()
    comps: list[tuple[int, ...]] = []
    for start in sorted(vs):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = [start]
        while queue:
            v = queue.pop()
            for w in (g.out_set(v) | g.in_set(v)) & vs:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def lrt_from_2bmg(g: ColoredDigraph) -> PhyloTree:
    """Construct and verify the least resolved tree of a 2-colored BMG.

    Within each connected piece, the support leaves of the root are the
    vertices whose out-neighborhood is the entire opposite color class of
    the piece and whose in-neighborhood contains only such vertices; they
    become leaf children, and the connected components of the rest become
    child subtrees, recursively.  The candidate tree is then checked by
    rebuilding the graph from it; any mismatch means the input is not a
    2-colored best match graph.

    Membership bookkeeping uses per-vertex tags (one tag per work item, -1
    once a vertex became a support leaf) so the sweeps over adjacency
    lists are allocation-free; the total work is one pass over the
    surviving arcs per recursion level.
    """
    present = g.colors_present()
    if len(present) > 2:
        raise ValueError("graph uses more than 2 colors")
    if not g.is_properly_colored():
        raise ValueError("graph is not properly colored")
    if len(present) < 2:
        raise NotABmgError("fewer than 2 colors present")
    n = g.n_vertices
    for v in range(n):
        if not g.out_neighbors(v):
            raise NotABmgError(f"vertex {g.name(v)!r} has no out-neighbor")

    out_adj = [g.out_neighbors(v) for v in range(n)]
    in_adj = [g.in_neighbors(v) for v in range(n)]
    und_adj = [tuple(set(out_adj[v]) | set(in_adj[v])) for v in range(n)]
    is_first_color = [g.color(v) == present[0] for v in range(n)]

    tag = [0] * n  # current work item per vertex; -1 after removal
    next_tag = 1
    bfs_mark = [0] * n
    bfs_run = 0

    def split(members, t, und=und_adj, tag=tag, mark=bfs_mark):
        nonlocal bfs_run
        bfs_run += 1
        run = bfs_run
        comps: list[list[int]] = []
        for start in members:
            if mark[start] == run:
                continue
            mark[start] = run
            comp = [start]
            queue = [start]
            pop = queue.pop
            push = queue.append
            grow = comp.append
            while queue:
                v = pop()
                for w in und[v]:
                    if tag[w] == t and mark[w] != run:
                        mark[w] = run
                        grow(w)
                        push(w)
            comps.append(comp)
        comps.sort(key=lambda c: min(c))
        return comps

    children: dict[int, list[int]] = {}
    leaf_names: dict[int, str] = {}
    leaf_colors: dict[int, str] = {}
    next_node = n  # leaves reuse the vertex ids

    def new_leaf(v: int, parent: int | None) -> int:
        children[v] = []
        leaf_names[v] = g.name(v)
        leaf_colors[v] = g.color(v)
        if parent is not None:
            children[parent].append(v)
        return v

    def new_inner(parent: int | None) -> int:
        nonlocal next_node
        u = next_node
        next_node += 1
        children[u] = []
        if parent is not None:
            children[parent].append(u)
        return u

    root: int | None = None
    # worklist of (members, their tag, is known connected, parent node)
    work: list[tuple[list[int], int, bool, int | None]] = [
        (list(range(n)), 0, False, None)
    ]
    while work:
        members, t, connected, parent = work.pop()
        if len(members) == 1:
            node = new_leaf(members[0], parent)
            if parent is None:
                root = node
            continue
        if not connected:
            comps = split(sorted(members), t)
            if len(comps) > 1:
                node = new_inner(parent)
                if parent is None:
                    root = node
                # LIFO worklist: push reversed to process in ascending order
                items = []
                for comp in comps:
                    ct = next_tag
                    next_tag += 1
                    for v in comp:
                        tag[v] = ct
                    items.append((comp, ct, True, node))
                work.extend(reversed(items))
                continue
        # connected with at least two vertices, hence both colors present
        count_first = sum(1 for v in members if is_first_color[v])
        counts = (count_first, len(members) - count_first)
        candidates: set[int] = set()
        for v in members:
            target = counts[1] if is_first_color[v] else counts[0]
            if len(out_adj[v]) < target:
                continue
            if sum(1 for w in out_adj[v] if tag[w] == t) == target:
                candidates.add(v)
        support = sorted(
            v
            for v in candidates
            if all(tag[w] != t or w in candidates for w in in_adj[v])
        )
        if not support:
            raise NotABmgError(
                "a connected part has no support leaves "
                f"(members: {', '.join(sorted(g.name(v) for v in members))})"
            )
        node = new_inner(parent)
        if parent is None:
            root = node
        for v in support:
            new_leaf(v, node)
            tag[v] = -1
        rest = [v for v in members if tag[v] == t]
        if rest:
            comps = split(sorted(rest), t)
            items = []
            for comp in comps:
                ct = next_tag
                next_tag += 1
                for v in comp:
                    tag[v] = ct
                items.append((comp, ct, True, node))
            work.extend(reversed(items))

    assert root is not None
    tree = PhyloTree(root, children, leaf_names, leaf_colors)
    # the leaf node ids are exactly the vertex ids, so the rebuilt graph
    # aligns with g and the arc sets compare directly
    names, _, arc_ids = _lrt_fast_parts(tree)
    assert names == tuple(name for name, _ in g.vertex_items())
    want = g.arc_id_set()
    if arc_ids != want:
        diff = tuple(
            sorted((g.name(u), g.name(v)) for u, v in arc_ids ^ want)
        )
        raise NotABmgError(
            f"verification failed; {len(diff)} arcs differ from the "
            "graph explained by the candidate tree",
            diff,
        )
    return tree

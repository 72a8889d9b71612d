"""Rooted phylogenetic trees with colored leaves.

A PhyloTree is immutable after construction.  Nodes are integer ids that
stay stable across edge contraction, so a surviving node can be tracked
from a tree to its contracted variants.  Every inner node has at least
two children; every leaf has a unique name and a color.

Tree edges are represented as (parent, child) id pairs.  An edge is an
inner edge when its child is an inner node; only inner edges may be
contracted (contraction preserves the leaf set).
"""
from __future__ import annotations

from typing import Iterable, Mapping


class PhyloTree:
    """Rooted tree in which every inner node has >= 2 children."""

    __slots__ = (
        "_root",
        "_children",
        "_parent",
        "_leaf_names",
        "_leaf_colors",
        "_name_to_leaf",
        "_preorder",
        "_depth",
        "_subtree_colors",
        "_canon",
    )

    def __init__(
        self,
        root: int,
        children: Mapping[int, Iterable[int]],
        leaf_names: Mapping[int, str],
        leaf_colors: Mapping[int, str],
    ) -> None:
        child_map = {u: tuple(cs) for u, cs in children.items()}
        if root not in child_map:
            raise ValueError("root is not a node of the tree")
        parent: dict[int, int | None] = {root: None}
        order: list[int] = []
        stack = [root]
        while stack:
            u = stack.pop()
            order.append(u)
            cs = child_map.get(u)
            if cs is None:
                raise ValueError(f"node {u} has no children entry")
            for c in cs:
                if c in parent:
                    raise ValueError(f"node {c} reached twice; not a tree")
                parent[c] = u
                stack.append(c)
        if len(order) != len(child_map):
            raise ValueError("unreachable nodes in children map")
        names: dict[int, str] = {}
        colors: dict[int, str] = {}
        seen_names: set[str] = set()
        for u in order:
            cs = child_map[u]
            if cs:
                if len(cs) < 2:
                    raise ValueError(f"inner node {u} has a single child; not phylogenetic")
                if u in leaf_names:
                    raise ValueError(f"inner node {u} must not carry a leaf name")
            else:
                try:
                    name = leaf_names[u]
                except KeyError:
                    raise ValueError(f"leaf {u} has no name") from None
                if name in seen_names:
                    raise ValueError(f"duplicate leaf name {name!r}")
                seen_names.add(name)
                try:
                    color = leaf_colors[u]
                except KeyError:
                    raise ValueError(f"leaf {name!r} has no color") from None
                names[u] = name
                colors[u] = color
        self._root = root
        self._children = child_map
        self._parent = parent
        self._leaf_names = names
        self._leaf_colors = colors
        self._name_to_leaf = {name: u for u, name in names.items()}
        self._canon = None
        self._compute_caches()

    def _compute_caches(self) -> None:
        # preorder with children in stored order (iterative; trees can be deep)
        pre: list[int] = []
        stack = [self._root]
        while stack:
            u = stack.pop()
            pre.append(u)
            for c in reversed(self._children[u]):
                stack.append(c)
        self._preorder = tuple(pre)
        depth = {self._root: 0}
        for u in pre[1:]:
            depth[u] = depth[self._parent[u]] + 1
        self._depth = depth
        sub: dict[int, frozenset[str]] = {}
        for u in reversed(pre):
            cs = self._children[u]
            if not cs:
                sub[u] = frozenset((self._leaf_colors[u],))
            else:
                acc: set[str] = set()
                for c in cs:
                    acc |= sub[c]
                sub[u] = frozenset(acc)
        self._subtree_colors = sub

    # ---- basic structure ----------------------------------------------------

    @property
    def root(self) -> int:
        return self._root

    @property
    def n_nodes(self) -> int:
        return len(self._children)

    @property
    def n_leaves(self) -> int:
        return len(self._leaf_names)

    def nodes(self) -> tuple[int, ...]:
        """All node ids in preorder."""
        return self._preorder

    def leaves(self) -> tuple[int, ...]:
        return tuple(u for u in self._preorder if not self._children[u])

    def inner_nodes(self) -> tuple[int, ...]:
        return tuple(u for u in self._preorder if self._children[u])

    def is_leaf(self, u: int) -> bool:
        return not self._children[u]

    def children(self, u: int) -> tuple[int, ...]:
        return self._children[u]

    def parent(self, u: int) -> int | None:
        return self._parent[u]

    def depth(self, u: int) -> int:
        return self._depth[u]

    def leaf_name(self, u: int) -> str:
        return self._leaf_names[u]

    def leaf_color(self, u: int) -> str:
        return self._leaf_colors[u]

    def leaf_by_name(self, name: str) -> int:
        try:
            return self._name_to_leaf[name]
        except KeyError:
            raise ValueError(f"unknown leaf name {name!r}") from None

    def colors(self) -> tuple[str, ...]:
        """Colors present among the leaves, sorted."""
        return tuple(sorted(self._subtree_colors[self._root]))

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All (parent, child) edges in preorder of the child."""
        return tuple((self._parent[u], u) for u in self._preorder if u != self._root)

    def inner_edges(self) -> tuple[tuple[int, int], ...]:
        """Edges whose child is an inner node."""
        return tuple(
            (self._parent[u], u)
            for u in self._preorder
            if u != self._root and self._children[u]
        )

    # ---- order queries -------------------------------------------------------

    def is_ancestor(self, a: int, b: int) -> bool:
        """True iff `a` lies on the path from the root to `b` (inclusive)."""
        if a not in self._depth or b not in self._depth:
            raise ValueError("node not in tree")
        da = self._depth[a]
        while self._depth[b] > da:
            b = self._parent[b]
        return a == b

    def lca(self, nodes: Iterable[int]) -> int:
        """Last common ancestor of a non-empty set of nodes."""
        it = iter(nodes)
        try:
            a = next(it)
        except StopIteration:
            raise ValueError("lca of an empty node set") from None
        if a not in self._depth:
            raise ValueError(f"node {a} not in tree")
        for b in it:
            if b not in self._depth:
                raise ValueError(f"node {b} not in tree")
            while self._depth[a] > self._depth[b]:
                a = self._parent[a]
            while self._depth[b] > self._depth[a]:
                b = self._parent[b]
            while a != b:
                a = self._parent[a]
                b = self._parent[b]
        return a

    def subtree_nodes(self, u: int) -> tuple[int, ...]:
        """All nodes below `u` inclusive, preorder."""
        out: list[int] = []
        stack = [u]
        while stack:
            v = stack.pop()
            out.append(v)
            for c in reversed(self._children[v]):
                stack.append(c)
        return tuple(out)

    def subtree_leaves(self, u: int) -> tuple[int, ...]:
        """Leaves below `u` inclusive, preorder."""
        children = self._children
        out: list[int] = []
        stack = [u]
        while stack:
            v = stack.pop()
            cs = children[v]
            if cs:
                stack.extend(reversed(cs))
            else:
                out.append(v)
        return tuple(out)

    def subtree_colors(self, u: int) -> frozenset[str]:
        """Colors of the leaves below `u` inclusive."""
        return self._subtree_colors[u]

    def support_leaves(self, u: int) -> tuple[int, ...]:
        """The leaf children of `u`."""
        return tuple(c for c in self._children[u] if not self._children[c])

    def displays_triple(self, x: int, y: int, z: int) -> bool:
        """True iff the rooted triple xy|z is displayed by the tree."""
        if len({x, y, z}) != 3:
            raise ValueError("triple leaves must be pairwise distinct")
        for v in (x, y, z):
            if v not in self._leaf_names:
                raise ValueError(f"node {v} is not a leaf")
        return self.lca((x, y)) != self.lca((x, y, z))

    # ---- derived trees ---------------------------------------------------------

    def contract_edges(self, edges: Iterable[tuple[int, int]]) -> "PhyloTree":
        """Contract a set of inner edges; returns a new tree, self unchanged.

        Each (parent, child) edge must be an inner edge; the child node is
        removed and its children are re-parented in place.  Surviving nodes
        keep their ids, so the result of contracting a set never depends on
        the order of contraction.
        """
        removed: set[int] = set()
        for p, c in edges:
            if self._parent.get(c) != p:
                raise ValueError(f"({p}, {c}) is not an edge of the tree")
            if not self._children[c]:
                raise ValueError(f"({p}, {c}) is a leaf edge; only inner edges contract")
            removed.add(c)
        new_children: dict[int, tuple[int, ...]] = {}
        for u in self._preorder:
            if u in removed:
                continue
            out: list[int] = []
            stack = list(reversed(self._children[u]))
            while stack:
                c = stack.pop()
                if c in removed:
                    stack.extend(reversed(self._children[c]))
                else:
                    out.append(c)
            new_children[u] = tuple(out)
        return PhyloTree(self._root, new_children, self._leaf_names, self._leaf_colors)

    def with_leaf_colors(self, colors_by_name: Mapping[str, str]) -> "PhyloTree":
        """Same topology with a new leaf coloring (keyed by leaf name)."""
        colors = {u: colors_by_name[name] for u, name in self._leaf_names.items()}
        return PhyloTree(self._root, self._children, self._leaf_names, colors)

    # ---- canonical form ----------------------------------------------------------

    def canonical_form(self):
        """Nested-tuple form invariant under reordering of children.

        Children are ordered leaves-first, then by smallest leaf name, so
        two trees are isomorphic as leaf-colored rooted trees iff their
        canonical forms are equal.
        """
        if self._canon is None:
            min_name: dict[int, str] = {}
            form: dict[int, tuple] = {}
            for u in reversed(self._preorder):
                cs = self._children[u]
                if not cs:
                    name = self._leaf_names[u]
                    min_name[u] = name
                    form[u] = ("leaf", name, self._leaf_colors[u])
                else:
                    ordered = sorted(cs, key=lambda c: (bool(self._children[c]), min_name[c]))
                    min_name[u] = min(min_name[c] for c in cs)
                    form[u] = ("node", tuple(form[c] for c in ordered))
            self._canon = form[self._root]
        return self._canon

    def canonical_children(self, u: int) -> tuple[int, ...]:
        """Children of `u` ordered leaves-first, then by smallest leaf name."""
        def key(c: int) -> tuple[bool, str]:
            if not self._children[c]:
                return (False, self._leaf_names[c])
            return (True, min(self._leaf_names[v] for v in self.subtree_leaves(c)))

        return tuple(sorted(self._children[u], key=key))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PhyloTree):
            return NotImplemented
        return self.canonical_form() == other.canonical_form()

    def __hash__(self) -> int:
        return hash(self.canonical_form())

    def __repr__(self) -> str:
        return f"PhyloTree(n_leaves={self.n_leaves}, n_nodes={self.n_nodes})"

"""Shared corpus builders for the exhaustive small-scale sweeps."""
from __future__ import annotations

import itertools
from functools import lru_cache

from bmgtools.oracle import _shape_to_tree, _shapes
from bmgtools.tree import PhyloTree

LEAF_NAMES = tuple(f"l{i}" for i in range(9))


@lru_cache(maxsize=None)
def tree_shapes(n: int) -> tuple:
    """All rooted phylogenetic tree shapes on n labeled leaves."""
    return tuple(_shapes(n))


def build_tree(shape, colors: tuple[str, ...]) -> PhyloTree:
    leaves = tuple((LEAF_NAMES[i], colors[i]) for i in range(len(colors)))
    return _shape_to_tree(shape, leaves)


@lru_cache(maxsize=None)
def two_colorings(n: int) -> tuple[tuple[str, ...], ...]:
    """Surjective 2-colorings of n leaves, deduplicated up to color swap."""
    out = []
    for bits in range(2 ** (n - 1)):
        colors = ("A",) + tuple("B" if (bits >> i) & 1 else "A" for i in range(n - 1))
        if "B" in colors:
            out.append(colors)
    return tuple(out)


@lru_cache(maxsize=None)
def three_colorings(n: int) -> tuple[tuple[str, ...], ...]:
    """Surjective 3-colorings, canonical up to color permutation.

    Canonical means the colors make their first appearances in the order
    A, B, C along the leaf sequence.
    """
    out = []
    for assign in itertools.product(range(3), repeat=n):
        first_seen: list[int] = []
        for a in assign:
            if a not in first_seen:
                first_seen.append(a)
        if first_seen == [0, 1, 2]:
            out.append(tuple("ABC"[a] for a in assign))
    return tuple(out)


def iter_two_color_corpus(max_leaves: int, min_leaves: int = 2):
    """All (tree, coloring) instances with 2 colors up to the given size."""
    for n in range(min_leaves, max_leaves + 1):
        for shape in tree_shapes(n):
            for colors in two_colorings(n):
                yield build_tree(shape, colors)


def colorings_with_class_sizes(n: int, sizes: tuple[int, ...]) -> tuple[tuple[str, ...], ...]:
    """Colorings whose class sizes match `sizes`, canonical up to permutation
    of same-sized classes (distinct-sized classes keep fixed colors)."""
    assert sum(sizes) == n
    out = set()
    colors = tuple("ABC"[: len(sizes)])
    for assign in itertools.product(range(len(sizes)), repeat=n):
        if tuple(assign.count(i) for i in range(len(sizes))) != tuple(sizes):
            continue
        # canonicalize: same-sized classes are ordered by their first leaf
        order = sorted(range(len(sizes)), key=lambda i: (sizes[i], assign.index(i)))
        rank = {cls: r for r, cls in enumerate(order)}
        out.add(tuple(colors[rank[a]] for a in assign))
    return tuple(sorted(out))


def graph_key(g):
    return (tuple(sorted(g.vertex_items())), g.arc_name_set())

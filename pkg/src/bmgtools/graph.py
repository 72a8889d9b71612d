"""Vertex-colored simple digraphs.

A ColoredDigraph is immutable after construction.  Vertices are dense
integer ids 0..n-1; every vertex carries a display name (unique within
the graph) and a color.  Arcs are ordered pairs of vertex ids with no
self-loops.  Adjacency is stored both as frozensets (membership) and as
sorted tuples (deterministic iteration), plus integer bitmasks that the
pattern searches use on small graphs.
"""
from __future__ import annotations

from typing import Iterable, Iterator

# bitmask adjacency is built only up to this size; larger graphs use the
# set-based accessors
MASK_ADJACENCY_LIMIT = 64


class ColoredDigraph:
    """Simple directed graph with a total vertex coloring."""

    __slots__ = (
        "_names",
        "_colors",
        "_index",
        "_arcs",
        "_out",
        "_in",
        "_out_sets",
        "_in_sets",
        "_out_masks",
        "_in_masks",
    )

    def __init__(
        self,
        vertices: Iterable[tuple[str, str]],
        arcs: Iterable[tuple[str, str]] = (),
    ) -> None:
        names: list[str] = []
        colors: list[str] = []
        index: dict[str, int] = {}
        for name, color in vertices:
            if name in index:
                raise ValueError(f"duplicate vertex name {name!r}")
            index[name] = len(names)
            names.append(name)
            colors.append(color)
        arc_ids = set()
        for src, dst in arcs:
            try:
                u, v = index[src], index[dst]
            except KeyError as exc:
                raise ValueError(f"arc references unknown vertex {exc.args[0]!r}") from None
            if u == v:
                raise ValueError(f"self-loop on vertex {src!r}")
            arc_ids.add((u, v))
        self._names = tuple(names)
        self._colors = tuple(colors)
        self._index = index
        self._init_arcs(frozenset(arc_ids))

    def _init_arcs(self, arc_ids: frozenset[tuple[int, int]]) -> None:
        n = len(self._names)
        out: list[list[int]] = [[] for _ in range(n)]
        inn: list[list[int]] = [[] for _ in range(n)]
        for u, v in arc_ids:
            out[u].append(v)
            inn[v].append(u)
        self._arcs = arc_ids
        self._out = tuple(tuple(sorted(vs)) for vs in out)
        self._in = tuple(tuple(sorted(us)) for us in inn)
        self._out_sets = tuple(frozenset(vs) for vs in out)
        self._in_sets = tuple(frozenset(us) for us in inn)
        if n <= MASK_ADJACENCY_LIMIT:
            out_masks = [0] * n
            in_masks = [0] * n
            for u, v in arc_ids:
                out_masks[u] |= 1 << v
                in_masks[v] |= 1 << u
            self._out_masks = tuple(out_masks)
            self._in_masks = tuple(in_masks)
        else:
            self._out_masks = None
            self._in_masks = None

    @classmethod
    def _from_internal(
        cls,
        names: tuple[str, ...],
        colors: tuple[str, ...],
        arc_ids: frozenset[tuple[int, int]],
    ) -> "ColoredDigraph":
        """Fast constructor for pre-validated id-based data (internal use)."""
        g = object.__new__(cls)
        g._names = names
        g._colors = colors
        g._index = {name: i for i, name in enumerate(names)}
        g._init_arcs(arc_ids)
        return g

    # ---- size and lookup ---------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self._names)

    @property
    def n_arcs(self) -> int:
        return len(self._arcs)

    def vertices(self) -> range:
        return range(len(self._names))

    def name(self, v: int) -> str:
        return self._names[v]

    def color(self, v: int) -> str:
        return self._colors[v]

    def vertex(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown vertex {name!r}") from None

    def vertex_items(self) -> tuple[tuple[str, str], ...]:
        """(name, color) pairs in id order."""
        return tuple(zip(self._names, self._colors))

    # ---- arcs and adjacency ------------------------------------------------

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._arcs

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def out_set(self, v: int) -> frozenset[int]:
        return self._out_sets[v]

    def in_set(self, v: int) -> frozenset[int]:
        return self._in_sets[v]

    def out_mask(self, v: int) -> int:
        if self._out_masks is None:
            raise RuntimeError(f"no bitmask adjacency beyond {MASK_ADJACENCY_LIMIT} vertices")
        return self._out_masks[v]

    def in_mask(self, v: int) -> int:
        if self._in_masks is None:
            raise RuntimeError(f"no bitmask adjacency beyond {MASK_ADJACENCY_LIMIT} vertices")
        return self._in_masks[v]

    def arcs(self) -> Iterator[tuple[int, int]]:
        """All arcs as id pairs, sorted."""
        for u in range(len(self._names)):
            for v in self._out[u]:
                yield u, v

    def arc_id_set(self) -> frozenset[tuple[int, int]]:
        return self._arcs

    def arc_names(self) -> list[tuple[str, str]]:
        """All arcs as (src name, dst name) pairs, sorted by name."""
        return sorted((self._names[u], self._names[v]) for u, v in self._arcs)

    def arc_name_set(self) -> frozenset[tuple[str, str]]:
        return frozenset((self._names[u], self._names[v]) for u, v in self._arcs)

    # ---- queries -----------------------------------------------------------

    def is_properly_colored(self) -> bool:
        """True iff every arc joins vertices of distinct colors."""
        colors = self._colors
        return all(colors[u] != colors[v] for u, v in self._arcs)

    def is_sink_free(self) -> bool:
        """True iff every vertex has at least one out-neighbor."""
        return all(self._out_sets)

    def colors_present(self) -> tuple[str, ...]:
        return tuple(sorted(set(self._colors)))

    def color_classes(self) -> dict[str, tuple[int, ...]]:
        """Partition of the vertex ids by color, colors in sorted order."""
        classes: dict[str, list[int]] = {}
        for v, color in enumerate(self._colors):
            classes.setdefault(color, []).append(v)
        return {color: tuple(classes[color]) for color in sorted(classes)}

    def induced_subgraph(self, vs: Iterable[int]) -> "ColoredDigraph":
        """Subgraph induced by the vertex ids `vs`, names preserved.

        The surviving vertices are renumbered densely, keeping their
        relative order.
        """
        keep = sorted(set(vs))
        for v in keep:
            if not 0 <= v < len(self._names):
                raise ValueError(f"unknown vertex id {v}")
        names = tuple(self._names[v] for v in keep)
        colors = tuple(self._colors[v] for v in keep)
        remap = {v: i for i, v in enumerate(keep)}
        keep_set = remap.keys()
        arc_ids = frozenset(
            (remap[u], remap[v]) for u, v in self._arcs if u in keep_set and v in keep_set
        )
        return ColoredDigraph._from_internal(names, colors, arc_ids)

    # ---- comparison --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        """Equality as colored arc sets over named vertices (id order ignored)."""
        if not isinstance(other, ColoredDigraph):
            return NotImplemented
        if sorted(zip(self._names, self._colors)) != sorted(zip(other._names, other._colors)):
            return False
        return self.arc_name_set() == other.arc_name_set()

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"ColoredDigraph(n_vertices={len(self._names)}, n_arcs={len(self._arcs)})"

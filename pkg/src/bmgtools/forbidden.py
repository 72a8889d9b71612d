"""Forbidden induced subgraphs and 2-colored best match graph recognition.

A properly 2-colored digraph is a best match graph iff it is sink-free
and contains no induced F1-, F2- or F3-graph; a best match graph is
binary-explainable iff it is hourglass-free.  The four patterns, as
ordered role tuples:

  F1 (x1, x2, y1, y2):  arcs (x1,y1), (y2,x2), (y1,x2);
                        non-arcs (x1,y2), (y2,x1)
  F2 (x1, x2, y1, y2):  arcs (x1,y1), (y1,x2), (x2,y2);
                        non-arc (x1,y2)
  F3 (x1, x2, y1, y2, y3): arcs (x1,y1), (x2,y2), (x1,y3), (x2,y3);
                        non-arcs (x1,y2), (x2,y1)
  hourglass (x, x', y, y'): bidirectional (x,y) and (x',y');
                        arcs (x,y'), (y,x'); non-arcs (y',x), (x',y)

with x-roles sharing one color and y-roles sharing another.  Pairs not
listed are unconstrained.  Searches are exhaustive and return the
lexicographically least role tuple, so output is deterministic.  Small
graphs are searched with bitmask adjacency, larger ones with sets; both
paths visit candidates in the same order.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import MASK_ADJACENCY_LIMIT, ColoredDigraph
from .tree import PhyloTree

# graphs up to this many vertices use the bitmask search path
_MASK_LIMIT = MASK_ADJACENCY_LIMIT

WITNESS_ROLES = {
    "F1": ("x1", "x2", "y1", "y2"),
    "F2": ("x1", "x2", "y1", "y2"),
    "F3": ("x1", "x2", "y1", "y2", "y3"),
    "hourglass": ("x", "x'", "y", "y'"),
}


@dataclass(frozen=True)
class SubgraphWitness:
    """An induced occurrence of a forbidden pattern, as vertex ids in role order."""

    kind: str
    vertices: tuple[int, ...]

    def names(self, g: ColoredDigraph) -> tuple[str, ...]:
        return tuple(g.name(v) for v in self.vertices)


def witness_holds(g: ColoredDigraph, w: SubgraphWitness) -> bool:
    """Re-check a witness against its defining arc / non-arc pattern."""
    vs = w.vertices
    if len(set(vs)) != len(vs):
        return False
    if len(vs) != len(WITNESS_ROLES[w.kind]):
        return False
    col = [g.color(v) for v in vs]
    if w.kind in ("F1", "F2"):
        x1, x2, y1, y2 = vs
        if not (col[0] == col[1] != col[2] == col[3]):
            return False
        if w.kind == "F1":
            present = ((x1, y1), (y2, x2), (y1, x2))
            absent = ((x1, y2), (y2, x1))
        else:
            present = ((x1, y1), (y1, x2), (x2, y2))
            absent = ((x1, y2),)
    elif w.kind == "F3":
        x1, x2, y1, y2, y3 = vs
        if not (col[0] == col[1] != col[2] == col[3] == col[4]):
            return False
        present = ((x1, y1), (x2, y2), (x1, y3), (x2, y3))
        absent = ((x1, y2), (x2, y1))
    elif w.kind == "hourglass":
        x, xp, y, yp = vs
        if not (col[0] == col[1] != col[2] == col[3]):
            return False
        present = ((x, y), (y, x), (xp, yp), (yp, xp), (x, yp), (y, xp))
        absent = ((yp, x), (xp, y))
    else:
        raise ValueError(f"unknown witness kind {w.kind!r}")
    return all(g.has_arc(*a) for a in present) and not any(g.has_arc(*a) for a in absent)


def _require_properly_colored(g: ColoredDigraph) -> None:
    if not g.is_properly_colored():
        raise ValueError("graph is not properly colored")


def _require_properly_2_colored(g: ColoredDigraph) -> None:
    if len(g.colors_present()) > 2:
        raise ValueError("graph uses more than 2 colors")
    _require_properly_colored(g)


def _bits(mask: int):
    """Set bit indices of a mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---- F1 ----------------------------------------------------------------------


def _f1_masks(g: ColoredDigraph) -> SubgraphWitness | None:
    for x1 in g.vertices():
        out1 = g.out_mask(x1)
        if not out1:
            continue
        cand = 0
        for y in _bits(out1):
            cand |= g.out_mask(y)
        cand &= ~(1 << x1)
        in1 = g.in_mask(x1)
        for x2 in _bits(cand):
            y1s = out1 & g.in_mask(x2)
            if not y1s:
                continue
            y2s = g.in_mask(x2) & ~out1 & ~in1
            if y2s:
                y1 = (y1s & -y1s).bit_length() - 1
                y2 = (y2s & -y2s).bit_length() - 1
                return SubgraphWitness("F1", (x1, x2, y1, y2))
    return None


def _f1_sets(g: ColoredDigraph) -> SubgraphWitness | None:
    for x1 in g.vertices():
        out1 = g.out_set(x1)
        if not out1:
            continue
        cand: set[int] = set()
        for y in out1:
            cand |= g.out_set(y)
        cand.discard(x1)
        in1 = g.in_set(x1)
        for x2 in sorted(cand):
            y1s = out1 & g.in_set(x2)
            if not y1s:
                continue
            y2s = g.in_set(x2) - out1 - in1
            if y2s:
                return SubgraphWitness("F1", (x1, x2, min(y1s), min(y2s)))
    return None


def find_f1(g: ColoredDigraph) -> SubgraphWitness | None:
    """First induced F1-graph of a properly 2-colored digraph, if any."""
    _require_properly_2_colored(g)
    if g.n_vertices <= _MASK_LIMIT:
        return _f1_masks(g)
    return _f1_sets(g)


# ---- F2 ----------------------------------------------------------------------


def _f2_masks(g: ColoredDigraph) -> SubgraphWitness | None:
    for x1 in g.vertices():
        out1 = g.out_mask(x1)
        if not out1:
            continue
        cand = 0
        for y in _bits(out1):
            cand |= g.out_mask(y)
        cand &= ~(1 << x1)
        for x2 in _bits(cand):
            y1s = out1 & g.in_mask(x2)
            if not y1s:
                continue
            y2s = g.out_mask(x2) & ~out1
            if y2s:
                y1 = (y1s & -y1s).bit_length() - 1
                y2 = (y2s & -y2s).bit_length() - 1
                return SubgraphWitness("F2", (x1, x2, y1, y2))
    return None


def _f2_sets(g: ColoredDigraph) -> SubgraphWitness | None:
    for x1 in g.vertices():
        out1 = g.out_set(x1)
        if not out1:
            continue
        cand: set[int] = set()
        for y in out1:
            cand |= g.out_set(y)
        cand.discard(x1)
        for x2 in sorted(cand):
            y1s = out1 & g.in_set(x2)
            if not y1s:
                continue
            y2s = g.out_set(x2) - out1
            if y2s:
                return SubgraphWitness("F2", (x1, x2, min(y1s), min(y2s)))
    return None


def find_f2(g: ColoredDigraph) -> SubgraphWitness | None:
    """First induced F2-graph of a properly 2-colored digraph, if any."""
    _require_properly_2_colored(g)
    if g.n_vertices <= _MASK_LIMIT:
        return _f2_masks(g)
    return _f2_sets(g)


# ---- F3 ----------------------------------------------------------------------


def _f3_masks(g: ColoredDigraph) -> SubgraphWitness | None:
    for x1 in g.vertices():
        out1 = g.out_mask(x1)
        if not out1:
            continue
        cand = 0
        for y in _bits(out1):
            cand |= g.in_mask(y)
        cand &= ~(1 << x1)
        for x2 in _bits(cand):
            out2 = g.out_mask(x2)
            y3s = out1 & out2
            if not y3s:
                continue
            y1s = out1 & ~out2
            if not y1s:
                continue
            y2s = out2 & ~out1
            if y2s:
                y1 = (y1s & -y1s).bit_length() - 1
                y2 = (y2s & -y2s).bit_length() - 1
                y3 = (y3s & -y3s).bit_length() - 1
                return SubgraphWitness("F3", (x1, x2, y1, y2, y3))
    return None


def _f3_crossing_exists(g: ColoredDigraph) -> bool:
    """Whether some color class has two crossing out-neighborhoods.

    An induced F3 exists iff two same-colored vertices have intersecting
    out-neighborhoods neither of which contains the other, so this is an
    exact F3 test.  Linear sweep: process the sets of a class largest
    first, track for each target the smallest set seen containing it; a
    set whose elements disagree on that owner crosses one of them.
    """
    by_color: dict[str, list[int]] = {}
    for v in g.vertices():
        if g.out_set(v):
            by_color.setdefault(g.color(v), []).append(v)
    for members in by_color.values():
        members.sort(key=lambda v: (-len(g.out_set(v)), v))
        owner: dict[int, int] = {}
        for v in members:
            out = g.out_neighbors(v)
            first = owner.get(out[0], -1)
            if any(owner.get(y, -1) != first for y in out[1:]):
                return True
            for y in out:
                owner[y] = v
    return False


def _f3_sets(g: ColoredDigraph) -> SubgraphWitness | None:
    # fast negative certificate; the tuple search below can be expensive
    # on graphs with large out-degrees
    if not _f3_crossing_exists(g):
        return None
    for x1 in g.vertices():
        out1 = g.out_set(x1)
        if not out1:
            continue
        cand: set[int] = set()
        for y in out1:
            cand |= g.in_set(y)
        cand.discard(x1)
        for x2 in sorted(cand):
            out2 = g.out_set(x2)
            y3s = out1 & out2
            if not y3s:
                continue
            y1s = out1 - out2
            if not y1s:
                continue
            y2s = out2 - out1
            if y2s:
                return SubgraphWitness("F3", (x1, x2, min(y1s), min(y2s), min(y3s)))
    return None


def find_f3(g: ColoredDigraph) -> SubgraphWitness | None:
    """First induced F3-graph of a properly 2-colored digraph, if any."""
    _require_properly_2_colored(g)
    if g.n_vertices <= _MASK_LIMIT:
        return _f3_masks(g)
    return _f3_sets(g)


# ---- hourglass -----------------------------------------------------------------


def _hourglass_masks(g: ColoredDigraph):
    color_mask: dict[str, int] = {}
    for v in g.vertices():
        color_mask[g.color(v)] = color_mask.get(g.color(v), 0) | (1 << v)
    bp = [g.out_mask(v) & g.in_mask(v) for v in g.vertices()]
    for x in g.vertices():
        bpx = bp[x]
        if not bpx:
            continue
        nonrecip = g.out_mask(x) & ~g.in_mask(x)
        if not nonrecip:
            continue
        cand = 0
        for yp in _bits(nonrecip):
            cand |= bp[yp]
        cand &= color_mask[g.color(x)] & ~(1 << x)
        for xp in _bits(cand):
            ys = bpx & g.in_mask(xp) & ~g.out_mask(xp)
            if not ys:
                continue
            yps = bp[xp] & g.out_mask(x) & ~g.in_mask(x)
            if not yps:
                continue
            for y in _bits(ys):
                hit = yps & color_mask[g.color(y)]
                for yp in _bits(hit):
                    yield SubgraphWitness("hourglass", (x, xp, y, yp))


def _hourglass_sets(g: ColoredDigraph):
    bp = [g.out_set(v) & g.in_set(v) for v in g.vertices()]
    for x in g.vertices():
        bpx = bp[x]
        if not bpx:
            continue
        nonrecip = g.out_set(x) - g.in_set(x)
        if not nonrecip:
            continue
        cand: set[int] = set()
        for yp in nonrecip:
            cand |= bp[yp]
        cx = g.color(x)
        cand.discard(x)
        for xp in sorted(cand):
            if g.color(xp) != cx:
                continue
            ys = bpx & g.in_set(xp) - g.out_set(xp)
            if not ys:
                continue
            yps = bp[xp] & nonrecip
            if not yps:
                continue
            for y in sorted(ys):
                cy = g.color(y)
                hit = sorted(v for v in yps if g.color(v) == cy)
                for yp in hit:
                    yield SubgraphWitness("hourglass", (x, xp, y, yp))


def iter_hourglasses(g: ColoredDigraph):
    """All induced hourglasses, one witness per valid role tuple."""
    _require_properly_colored(g)
    if g.n_vertices <= _MASK_LIMIT:
        yield from _hourglass_masks(g)
    else:
        yield from _hourglass_sets(g)


def find_hourglass(g: ColoredDigraph) -> SubgraphWitness | None:
    """First induced hourglass of a properly colored digraph, if any."""
    return next(iter_hourglasses(g), None)


# ---- recognition ----------------------------------------------------------------


@dataclass(frozen=True)
class Bmg2Verdict:
    """Outcome of the 2-colored best match graph check."""

    ok: bool
    reason: str | None = None  # "sink", "F1", "F2" or "F3" when not ok
    witness: SubgraphWitness | None = None
    sink: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_2bmg(g: ColoredDigraph) -> Bmg2Verdict:
    """Decide 2-colored best-match-graph membership, with a witness on failure.

    The graph is one iff it is sink-free and free of induced F1-, F2- and
    F3-graphs.
    """
    _require_properly_2_colored(g)
    for v in g.vertices():
        if not g.out_set(v):
            return Bmg2Verdict(False, "sink", None, v)
    small = g.n_vertices <= _MASK_LIMIT
    for kind, fn in (
        ("F1", _f1_masks if small else _f1_sets),
        ("F2", _f2_masks if small else _f2_sets),
        ("F3", _f3_masks if small else _f3_sets),
    ):
        w = fn(g)
        if w is not None:
            return Bmg2Verdict(False, kind, w, None)
    return Bmg2Verdict(True)


def is_2bmg(g: ColoredDigraph) -> bool:
    return check_2bmg(g).ok


# ---- binary explainability on trees ----------------------------------------------


@dataclass(frozen=True)
class BeViolation:
    """A node with three children that rules out binary explainability.

    Below child `v1` color `r` occurs but `s` does not, below `v2` both
    occur, below `v3` color `s` occurs but `r` does not.
    """

    node: int
    v1: int
    v2: int
    v3: int
    r: str
    s: str


def tree_binary_explainability_violation(t: PhyloTree) -> BeViolation | None:
    """Search `t` for a configuration incompatible with a binary explanation.

    For each inner node and each unordered color pair, children are
    classified by which of the two colors appear below them; a violation
    is three children in the classes r-only / both / s-only.
    """
    for u in t.nodes():
        cs = t.children(u)
        if len(cs) < 3:
            continue
        colors = sorted(t.subtree_colors(u))
        for i, r in enumerate(colors):
            for s in colors[i + 1 :]:
                only_r: int | None = None
                both: int | None = None
                only_s: int | None = None
                for c in cs:
                    below = t.subtree_colors(c)
                    has_r = r in below
                    has_s = s in below
                    if has_r and has_s:
                        if both is None or c < both:
                            both = c
                    elif has_r:
                        if only_r is None or c < only_r:
                            only_r = c
                    elif has_s:
                        if only_s is None or c < only_s:
                            only_s = c
                if only_r is not None and both is not None and only_s is not None:
                    return BeViolation(u, only_r, both, only_s, r, s)
    return None

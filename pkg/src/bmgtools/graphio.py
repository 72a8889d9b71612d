"""Line-oriented text format for colored digraphs.

``V <name> <color>`` declares a vertex, ``A <src> <dst>`` an arc between
previously declared vertices.  Full-line ``#`` comments and blank lines
are ignored.  Duplicate declarations, self-loops and undeclared arc
endpoints are errors.  Serialization sorts V lines, then A lines.

Names and colors obey the same token rules as the Newick format, so
graphs and trees can flow through each other's file formats.
"""
from __future__ import annotations

from .graph import ColoredDigraph
from .newick import valid_token


class GraphTextError(ValueError):
    """Parse failure, with the 1-based line number."""

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"{message} (line {line})")
        self.line = line


def parse_graph(text: str) -> ColoredDigraph:
    """Parse graph text into a ColoredDigraph (empty input: empty graph)."""
    vertices: list[tuple[str, str]] = []
    declared: dict[str, str] = {}
    arcs: list[tuple[str, str]] = []
    seen_arcs: set[tuple[str, str]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "V":
            if len(fields) != 3:
                raise GraphTextError("V line needs a name and a color", lineno)
            _, name, color = fields
            for token in (name, color):
                if not valid_token(token):
                    raise GraphTextError(f"invalid token {token!r}", lineno)
            if name in declared:
                raise GraphTextError(f"duplicate vertex {name!r}", lineno)
            declared[name] = color
            vertices.append((name, color))
        elif kind == "A":
            if len(fields) != 3:
                raise GraphTextError("A line needs a source and a target", lineno)
            _, src, dst = fields
            for v in (src, dst):
                if v not in declared:
                    raise GraphTextError(f"undeclared vertex {v!r}", lineno)
            if src == dst:
                raise GraphTextError(f"self-loop on {src!r}", lineno)
            if (src, dst) in seen_arcs:
                raise GraphTextError(f"duplicate arc {src!r} -> {dst!r}", lineno)
            seen_arcs.add((src, dst))
            arcs.append((src, dst))
        else:
            raise GraphTextError(f"unknown line kind {kind!r}", lineno)
    return ColoredDigraph(vertices, arcs)


def serialize_graph(g: ColoredDigraph) -> str:
    """Serialize a ColoredDigraph as graph text (V lines, then A lines)."""
    lines: list[str] = []
    for name, color in sorted(g.vertex_items()):
        for token in (name, color):
            if not valid_token(token):
                raise ValueError(f"token {token!r} is not writable as graph text")
        lines.append(f"V {name} {color}")
    for src, dst in g.arc_names():
        lines.append(f"A {src} {dst}")
    return "\n".join(lines) + ("\n" if lines else "")

"""Colored Newick trees.

Leaves are written as ``name|color``; inner nodes are parenthesized,
comma-separated child lists; the tree ends with ``;``.  Names and colors
are non-empty and contain no whitespace and none of ``( ) , ; |``.

Serialization is canonical: children are ordered leaves-first, then by
the smallest leaf name in the subtree, so equal trees serialize to
identical text.
"""
from __future__ import annotations

from .tree import PhyloTree

_SPECIAL = set("(),;|")


class NewickError(ValueError):
    """Parse or validation failure, with 1-based line and column."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


def valid_token(text: str) -> bool:
    """True iff `text` may serve as a leaf name or color."""
    return bool(text) and not any(ch in _SPECIAL or ch.isspace() for ch in text)


class _Scanner:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def error(self, message: str) -> NewickError:
        return NewickError(message, self.line, self.col)

    def _advance(self, n: int) -> None:
        for ch in self.text[self.pos : self.pos + n]:
            if ch == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += 1
        self.pos += n

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self._advance(1)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self._advance(1)
        return ch

    def take_token(self) -> str:
        start = self.pos
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch in _SPECIAL or ch.isspace():
                break
            self._advance(1)
        return self.text[start : self.pos]


def parse_tree(text: str) -> PhyloTree:
    """Parse a colored Newick string into a PhyloTree."""
    sc = _Scanner(text)
    next_id = 0

    def fresh() -> int:
        nonlocal next_id
        next_id += 1
        return next_id - 1

    children: dict[int, list[int]] = {}
    leaf_names: dict[int, str] = {}
    leaf_colors: dict[int, str] = {}
    seen: set[str] = set()

    def parse_leaf() -> int:
        line, col = sc.line, sc.col
        name = sc.take_token()
        if not name:
            raise sc.error("expected a leaf name")
        if sc.peek() != "|":
            raise NewickError(f"leaf {name!r} has no |color annotation", line, col)
        sc.take()
        color = sc.take_token()
        if not color:
            raise sc.error(f"leaf {name!r} has an empty color")
        if name in seen:
            raise NewickError(f"duplicate leaf name {name!r}", line, col)
        seen.add(name)
        u = fresh()
        children[u] = []
        leaf_names[u] = name
        leaf_colors[u] = color
        return u

    # iterative descent: a stack of child lists for the open '(' groups
    stack: list[tuple[int, list[int]]] = []
    root: int | None = None
    while True:
        sc.skip_ws()
        if sc.peek() == "(":
            sc.take()
            stack.append((fresh(), []))
            continue
        node = parse_leaf() if sc.peek() not in ("", ")", ",", ";") else None
        # close groups / separators until this subtree is placed
        while True:
            if node is not None and stack:
                stack[-1][1].append(node)
            sc.skip_ws()
            ch = sc.peek()
            if ch == ",":
                if node is None or not stack:
                    raise sc.error("unexpected ','")
                sc.take()
                break
            if ch == ")":
                if node is None or not stack:
                    raise sc.error("unexpected ')'")
                sc.take()
                u, cs = stack.pop()
                if len(cs) < 2:
                    raise sc.error("inner node with a single child is not phylogenetic")
                children[u] = cs
                node = u
                continue
            if ch == ";":
                if node is None or stack:
                    raise sc.error("unexpected ';'")
                sc.take()
                root = node
                break
            raise sc.error("expected ',', ')' or ';'")
        if root is not None:
            break
    sc.skip_ws()
    if sc.pos != len(sc.text):
        raise sc.error("trailing content after ';'")
    return PhyloTree(root, children, leaf_names, leaf_colors)


def serialize_tree(t: PhyloTree) -> str:
    """Serialize a PhyloTree as canonical colored Newick."""
    for u in t.leaves():
        for token in (t.leaf_name(u), t.leaf_color(u)):
            if not valid_token(token):
                raise ValueError(f"token {token!r} is not writable as Newick")
    # smallest leaf name per subtree, bottom-up
    min_name: dict[int, str] = {}
    for u in reversed(t.nodes()):
        cs = t.children(u)
        if not cs:
            min_name[u] = t.leaf_name(u)
        else:
            min_name[u] = min(min_name[c] for c in cs)

    def order(u: int) -> list[int]:
        return sorted(t.children(u), key=lambda c: (not t.is_leaf(c), min_name[c]))

    parts: list[str] = []
    stack: list[object] = [t.root]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
            continue
        u = item
        if t.is_leaf(u):
            parts.append(f"{t.leaf_name(u)}|{t.leaf_color(u)}")
            continue
        parts.append("(")
        stack.append(")")
        cs = order(u)
        for i in range(len(cs) - 1, -1, -1):
            stack.append(cs[i])
            if i:
                stack.append(",")
    parts.append(";")
    return "".join(parts)

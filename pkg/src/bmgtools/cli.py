"""Command-line interface.

Exit codes: 0 success, 1 parse/validation/usage error, 2 input is not a
2-colored best match graph.  Output is byte-deterministic; `--format
json` mirrors the text output as structured data.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .bmg import bmg_from_tree
from .completion import complete_to_bebmg
from .forbidden import (
    WITNESS_ROLES,
    SubgraphWitness,
    check_2bmg,
    find_hourglass,
    tree_binary_explainability_violation,
)
from .graph import ColoredDigraph
from .graphio import GraphTextError, parse_graph, serialize_graph
from .lrt import NotABmgError, lrt_from_2bmg, lrt_from_tree
from .newick import NewickError, parse_tree, serialize_tree
from .oracle import enumerate_trees, oracle_is_bmg, oracle_lrt, oracle_min_completion
from .tree import PhyloTree


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; this tool reserves 2 for
    # "not a 2-colored best match graph"
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _looks_like_graph(text: str) -> bool:
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        return line.split()[0] in ("V", "A")
    return True  # empty input: empty graph


def _graph_json(g: ColoredDigraph) -> dict:
    return {
        "vertices": [{"name": n, "color": c} for n, c in sorted(g.vertex_items())],
        "arcs": [list(a) for a in g.arc_names()],
    }


def _witness_json(g: ColoredDigraph, w: SubgraphWitness) -> dict:
    return {
        "kind": w.kind,
        "roles": list(WITNESS_ROLES[w.kind]),
        "vertices": list(w.names(g)),
    }


def _emit_json(obj: dict) -> None:
    print(json.dumps(obj, indent=2))


def _not_a_bmg(exc: NotABmgError, as_json: bool) -> int:
    print(f"not a 2-colored best match graph: {exc.detail}", file=sys.stderr)
    for src, dst in exc.diff:
        print(f"diff {src} {dst}", file=sys.stderr)
    if as_json:
        _emit_json(
            {
                "error": "not_a_2bmg",
                "detail": exc.detail,
                "diff": [list(a) for a in exc.diff],
            }
        )
    return 2


def _cmd_from_tree(args) -> int:
    t = parse_tree(_read(args.tree))
    g = bmg_from_tree(t)
    if args.format == "json":
        _emit_json({"graph": _graph_json(g)})
    else:
        sys.stdout.write(serialize_graph(g))
    return 0


def _parse_any(path: str) -> PhyloTree | ColoredDigraph:
    text = _read(path)
    if _looks_like_graph(text):
        return parse_graph(text)
    return parse_tree(text)


def _cmd_lrt(args) -> int:
    obj = _parse_any(args.input)
    try:
        t = lrt_from_2bmg(obj) if isinstance(obj, ColoredDigraph) else lrt_from_tree(obj)
    except NotABmgError as exc:
        return _not_a_bmg(exc, args.format == "json")
    text = serialize_tree(t)
    if args.format == "json":
        _emit_json({"tree": text})
    else:
        print(text)
    return 0


def _cmd_recognize(args) -> int:
    g = parse_graph(_read(args.graph))
    verdict = check_2bmg(g)
    if args.format == "json":
        _emit_json(
            {
                "is_2bmg": verdict.ok,
                "reason": verdict.reason,
                "witness": _witness_json(g, verdict.witness) if verdict.witness else None,
                "sink": g.name(verdict.sink) if verdict.sink is not None else None,
            }
        )
    else:
        print(f"2-BMG: {'yes' if verdict.ok else 'no'}")
    if verdict.ok:
        return 0
    if verdict.witness is not None:
        print(f"witness {verdict.witness.kind} " + " ".join(verdict.witness.names(g)), file=sys.stderr)
    else:
        print(f"witness sink {g.name(verdict.sink)}", file=sys.stderr)
    return 2


def _cmd_check_be(args) -> int:
    obj = _parse_any(args.input)
    if isinstance(obj, ColoredDigraph):
        w = find_hourglass(obj)
        if args.format == "json":
            _emit_json(
                {
                    "hourglass_free": w is None,
                    "witness": _witness_json(obj, w) if w else None,
                }
            )
        else:
            print(f"hourglass-free: {'yes' if w is None else 'no'}")
        if w is not None:
            print("witness hourglass " + " ".join(w.names(obj)), file=sys.stderr)
        return 0
    v = tree_binary_explainability_violation(obj)
    if args.format == "json":
        violation = None
        if v is not None:
            violation = {
                "r": v.r,
                "s": v.s,
                "v1_leaves": sorted(obj.leaf_name(u) for u in obj.subtree_leaves(v.v1)),
                "v2_leaves": sorted(obj.leaf_name(u) for u in obj.subtree_leaves(v.v2)),
                "v3_leaves": sorted(obj.leaf_name(u) for u in obj.subtree_leaves(v.v3)),
            }
        _emit_json({"binary_explainable": v is None, "violation": violation})
    else:
        print(f"binary-explainable: {'yes' if v is None else 'no'}")
    if v is not None:
        parts = [
            ",".join(sorted(obj.leaf_name(u) for u in obj.subtree_leaves(c)))
            for c in (v.v1, v.v2, v.v3)
        ]
        print(
            f"violation r={v.r} s={v.s} v1={parts[0]} v2={parts[1]} v3={parts[2]}",
            file=sys.stderr,
        )
    return 0


def _cmd_complete(args) -> int:
    g = parse_graph(_read(args.graph))
    try:
        result = complete_to_bebmg(g)
    except NotABmgError as exc:
        return _not_a_bmg(exc, args.format == "json")
    tree_text = serialize_tree(result.tree)
    if args.format == "json":
        _emit_json(
            {
                "inserted": [list(a) for a in result.inserted],
                "inserted_count": result.inserted_count,
                "collapsed_subtrees": result.collapsed_subtrees,
                "graph": _graph_json(result.completed_graph),
                "tree": tree_text,
            }
        )
    else:
        print(f"# inserted-arcs {result.inserted_count}")
        print(f"# collapsed-subtrees {result.collapsed_subtrees}")
        for src, dst in result.inserted:
            print(f"+ {src} {dst}")
        print("# completed-graph")
        sys.stdout.write(serialize_graph(result.completed_graph))
        print("# explaining-tree")
        print(tree_text)
    return 0


def _cmd_oracle_count_trees(args) -> int:
    leaves = tuple((f"l{i}", "A") for i in range(args.n))
    count = sum(1 for _ in enumerate_trees(leaves))
    if args.format == "json":
        _emit_json({"n": args.n, "trees": count})
    else:
        print(count)
    return 0


def _cmd_oracle_is_bmg(args) -> int:
    g = parse_graph(_read(args.graph))
    t = oracle_is_bmg(g)
    if args.format == "json":
        _emit_json({"is_bmg": t is not None, "tree": serialize_tree(t) if t else None})
    else:
        print(serialize_tree(t) if t is not None else "none")
    return 0 if t is not None else 2


def _cmd_oracle_min_completions(args) -> int:
    g = parse_graph(_read(args.graph))
    solutions = oracle_min_completion(g, binary_explainable=not args.plain_bmg)
    if args.format == "json":
        _emit_json(
            {
                "minimum_size": len(solutions[0]) if solutions else None,
                "solutions": [[list(a) for a in sol] for sol in solutions],
            }
        )
    else:
        if not solutions:
            print("no completion")
        else:
            print(f"minimum-size {len(solutions[0])}")
            print(f"solutions {len(solutions)}")
            for i, sol in enumerate(solutions, start=1):
                print(f"solution {i}:")
                for src, dst in sol:
                    print(f"+ {src} {dst}")
    return 0


def _cmd_oracle_lrt(args) -> int:
    t = parse_tree(_read(args.tree))
    result = oracle_lrt(t)
    text = serialize_tree(result)
    if args.format == "json":
        _emit_json({"tree": text})
    else:
        print(text)
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="bmgtools", description=__doc__)
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("from-tree", help="best match graph of a colored Newick tree")
    p.add_argument("tree", help="tree file, or - for stdin")
    p.set_defaults(func=_cmd_from_tree)

    p = sub.add_parser("lrt", help="least resolved tree of a tree or of a 2-colored graph")
    p.add_argument("input", help="tree or graph file, or - for stdin")
    p.set_defaults(func=_cmd_lrt)

    p = sub.add_parser("recognize", help="2-colored best match graph check with witness")
    p.add_argument("graph", help="graph file, or - for stdin")
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("check-be", help="binary explainability: hourglass / tree condition")
    p.add_argument("input", help="tree or graph file, or - for stdin")
    p.set_defaults(func=_cmd_check_be)

    p = sub.add_parser("complete", help="minimum completion to a binary-explainable BMG")
    p.add_argument("graph", help="graph file, or - for stdin")
    p.set_defaults(func=_cmd_complete)

    p = sub.add_parser("oracle", help="brute-force reference computations")
    osub = p.add_subparsers(dest="oracle_command", required=True)

    q = osub.add_parser("count-trees", help="number of rooted phylogenetic trees on n leaves")
    q.add_argument("n", type=int)
    q.set_defaults(func=_cmd_oracle_count_trees)

    q = osub.add_parser("is-bmg", help="search all explaining trees")
    q.add_argument("graph", help="graph file, or - for stdin")
    q.set_defaults(func=_cmd_oracle_is_bmg)

    q = osub.add_parser("min-completions", help="all minimum completions by subset search")
    q.add_argument("graph", help="graph file, or - for stdin")
    q.add_argument("--plain-bmg", action="store_true", help="complete to a plain BMG instead")
    q.set_defaults(func=_cmd_oracle_min_completions)

    q = osub.add_parser("lrt", help="least resolved tree by subset search")
    q.add_argument("tree", help="tree file, or - for stdin")
    q.set_defaults(func=_cmd_oracle_lrt)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (NewickError, GraphTextError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())

"""Acceptance suite: one test per criterion, each printing a PASS line
with its measured time (visible with `pytest -v -s` or in captured output).
"""
import itertools
import random
import time

from bmgtools.bmg import bmg_from_tree
from bmgtools.cli import main
from bmgtools.completion import collapsed_tree, complete_to_bebmg, mandatory_hourglass_arcs
from bmgtools.forbidden import find_hourglass, is_2bmg, tree_binary_explainability_violation
from bmgtools.graph import ColoredDigraph
from bmgtools.graphio import parse_graph
from bmgtools.lrt import lrt_from_2bmg, lrt_from_tree, redundant_edges
from bmgtools.oracle import oracle_is_bmg, oracle_min_completion
from bmgtools.tree import PhyloTree

from conftest import (
    build_tree,
    colorings_with_class_sizes,
    graph_key,
    three_colorings,
    tree_shapes,
    two_colorings,
)


def _report(num: int, label: str, started: float, limit: float, extra: str = "") -> None:
    elapsed = time.perf_counter() - started
    assert elapsed < limit, f"criterion {num} took {elapsed:.1f}s (limit {limit}s)"
    suffix = f" [{extra}]" if extra else ""
    print(f"criterion {num} ({label}): PASS in {elapsed:.1f}s{suffix}")


def iter_corpus_instances(max_leaves=6):
    """(colors, tree) for every shape x surjective 2-coloring, <= max_leaves."""
    for n in range(2, max_leaves + 1):
        for shape in tree_shapes(n):
            for colors in two_colorings(n):
                yield colors, build_tree(shape, colors)


def distinct_corpus_bmgs(max_leaves=6):
    """One representative (graph, tree) per distinct BMG of the corpus."""
    seen = {}
    for _, t in iter_corpus_instances(max_leaves):
        g = bmg_from_tree(t)
        key = graph_key(g)
        if key not in seen:
            seen[key] = (g, t)
    return list(seen.values())


def test_criterion_01_hourglass_fixture(tmp_path, capsys):
    started = time.perf_counter()
    tree_file = tmp_path / "hourglass.tree"
    tree_file.write_text("(x|A,y|B,(xp|A,yp|B));\n")
    assert main(["from-tree", str(tree_file)]) == 0
    out = capsys.readouterr().out
    g = parse_graph(out)
    expected = {("x", "y"), ("y", "x"), ("xp", "yp"), ("yp", "xp"), ("x", "yp"), ("y", "xp")}
    assert g.arc_name_set() == expected
    cross = {
        (u, v)
        for u, cu in g.vertex_items()
        for v, cv in g.vertex_items()
        if cu != cv
    }
    assert cross - expected == {("yp", "x"), ("xp", "y")}
    with capsys.disabled():
        _report(1, "hourglass fixture", started, 1.0)


def test_criterion_02_unique_minimum_completion():
    started = time.perf_counter()
    checked = 0
    for g, _ in distinct_corpus_bmgs():
        result = complete_to_bebmg(g)
        solutions = oracle_min_completion(g)
        assert len(solutions) == 1, f"non-unique minimum for {g.arc_names()}"
        assert solutions[0] == result.inserted
        checked += 1
    _report(2, "unique minimum completion", started, 600.0, f"{checked} distinct BMGs")


def test_criterion_03_contraction_preserves_least_resolved():
    started = time.perf_counter()
    seen = set()
    lrts = []
    for g, t in distinct_corpus_bmgs():
        lrt = lrt_from_tree(t)
        form = lrt.canonical_form()
        if form not in seen:
            seen.add(form)
            lrts.append(lrt)
    checked = 0
    for lrt in lrts:
        base = bmg_from_tree(lrt).arc_name_set()
        inner = lrt.inner_edges()
        for r in range(len(inner) + 1):
            for subset in itertools.combinations(inner, r):
                contracted = lrt.contract_edges(subset)
                assert redundant_edges(contracted) == ()
                if r:
                    grown = bmg_from_tree(contracted).arc_name_set()
                    assert base < grown
                checked += 1
    _report(3, "contraction preserves least-resolvedness", started, 600.0,
            f"{len(lrts)} LRTs, {checked} contractions")


def test_criterion_04_hourglass_iff_tree_condition():
    started = time.perf_counter()
    fibers: dict = {}
    instances = 0
    for n in range(2, 7):
        for colors in two_colorings(n) + three_colorings(n):
            for shape in tree_shapes(n):
                t = build_tree(shape, colors)
                g = bmg_from_tree(t)
                key = graph_key(g)
                if key not in fibers:
                    fibers[key] = [find_hourglass(g) is None, True]
                clean = tree_binary_explainability_violation(t) is None
                assert clean == fibers[key][0]  # per explaining tree
                fibers[key][1] = fibers[key][1] and clean
                instances += 1
    for hourglass_free, all_trees_clean in fibers.values():
        assert hourglass_free == all_trees_clean
    _report(4, "hourglass-freeness iff tree condition", started, 900.0,
            f"{instances} instances, {len(fibers)} BMGs")


def _surjective_colorings(n):
    out = []
    for bits in range(1, 2**n - 1):
        out.append(tuple("AB"[(bits >> i) & 1] for i in range(n)))
    return out


def test_criterion_05_recognition_matches_tree_search():
    started = time.perf_counter()
    cases = []
    for n in range(2, 5):
        cases += [tuple((f"v{i}", c[i]) for i in range(n)) for c in _surjective_colorings(n)]
    cases += [
        tuple((f"v{i}", c[i]) for i in range(5))
        for c in _surjective_colorings(5)
        if sorted((c.count("A"), c.count("B"))) == [2, 3]
    ]
    checked = 0
    for vertices in cases:
        names = [v for v, _ in vertices]
        colors = dict(vertices)
        cross = [
            (u, v) for u in names for v in names if u != v and colors[u] != colors[v]
        ]
        for bits in range(2 ** len(cross)):
            arcs = [cross[i] for i in range(len(cross)) if (bits >> i) & 1]
            g = ColoredDigraph(vertices, arcs)
            assert is_2bmg(g) == (oracle_is_bmg(g) is not None)
            checked += 1
    _report(5, "recognition matches explaining-tree search", started, 900.0,
            f"{checked} graphs")


def test_criterion_06_lrt_round_trip():
    started = time.perf_counter()
    from_graph: dict = {}
    instances = 0
    for _, t in iter_corpus_instances():
        g = bmg_from_tree(t)
        key = graph_key(g)
        if key not in from_graph:
            from_graph[key] = lrt_from_2bmg(g)
        assert lrt_from_tree(t) == from_graph[key]
        instances += 1
    _report(6, "LRT round trip", started, 600.0, f"{instances} instances")


def test_criterion_07_collapsed_tree_laws():
    started = time.perf_counter()
    instances = 0
    for _, t in iter_corpus_instances():
        star = collapsed_tree(t)
        assert collapsed_tree(star) == star
        instances += 1
    lrt_count = 0
    seen = set()
    for g, t in distinct_corpus_bmgs():
        lrt = lrt_from_tree(t)
        form = lrt.canonical_form()
        if form in seen:
            continue
        seen.add(form)
        assert redundant_edges(collapsed_tree(lrt)) == ()
        lrt_count += 1
    _report(7, "collapsed tree laws", started, 600.0,
            f"{instances} instances, {lrt_count} LRTs")


def test_criterion_08_mandatory_arcs_lower_bound():
    started = time.perf_counter()
    checked = 0
    for g, _ in distinct_corpus_bmgs():
        forced = set(mandatory_hourglass_arcs(g))
        inserted = set(complete_to_bebmg(g).inserted)
        assert forced <= inserted
        checked += 1
    _report(8, "hourglass arcs are a lower bound", started, 600.0, f"{checked} BMGs")


def test_criterion_09_three_colors_lose_uniqueness():
    started = time.perf_counter()
    colorings = colorings_with_class_sizes(5, (2, 2, 1))
    assert len(colorings) == 15
    seen = set()
    found = 0
    for shape in tree_shapes(5):
        for colors in colorings:
            t = build_tree(shape, colors)
            g = bmg_from_tree(t)
            key = graph_key(g)
            if key in seen:
                continue
            seen.add(key)
            forced = set(mandatory_hourglass_arcs(g))
            if not forced:
                continue
            solutions = oracle_min_completion(g, binary_explainable=True)
            assert solutions, "a completion always exists"
            assert all(forced <= set(sol) for sol in solutions)
            if len(solutions) >= 2:
                assert len(forced) >= 2
                found += 1
    assert found >= 1
    _report(9, "3-colored minimum completions are non-unique", started, 300.0,
            f"{found} witnesses among {len(seen)} BMGs")


def _random_binary_tree(n_leaves: int, seed: int) -> PhyloTree:
    rng = random.Random(seed)
    children = {0: [1, 2], 1: [], 2: []}
    edges = [(0, 1), (0, 2)]
    next_id = 3
    for _ in range(n_leaves - 2):
        i = rng.randrange(len(edges))
        u, v = edges[i]
        inner, leaf = next_id, next_id + 1
        next_id += 2
        children[u][children[u].index(v)] = inner
        children[inner] = [v, leaf]
        children[leaf] = []
        edges[i] = (u, inner)
        edges.append((inner, v))
        edges.append((inner, leaf))
    leaves = [u for u, cs in children.items() if not cs]
    names = {u: f"g{u}" for u in leaves}
    colors = {u: rng.choice("AB") for u in leaves}
    assert len(set(colors.values())) == 2
    return PhyloTree(0, children, names, colors)


def test_criterion_10_large_instance_performance():
    started = time.perf_counter()
    t = _random_binary_tree(10_000, seed=421)
    g = bmg_from_tree(t)
    t0 = time.perf_counter()
    result = complete_to_bebmg(g)
    complete_elapsed = time.perf_counter() - t0
    assert complete_elapsed < 10.0, f"complete took {complete_elapsed:.1f}s"
    out = result.completed_graph
    assert find_hourglass(out) is None
    assert is_2bmg(out)
    _report(10, "10^4-leaf performance", started, 600.0,
            f"complete {complete_elapsed:.2f}s, {g.n_vertices} vertices, "
            f"{g.n_arcs} arcs, |F|={result.inserted_count}")

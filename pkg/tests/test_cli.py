import io
import json

import pytest

from bmgtools.cli import main

HOURGLASS_TREE = "(x|A,y|B,(xp|A,yp|B));\n"
HOURGLASS_GRAPH = """\
V x A
V xp A
V y B
V yp B
A x y
A x yp
A xp yp
A y x
A y xp
A yp xp
"""
F2_GRAPH = """\
V x1 A
V x2 A
V y1 B
V y2 B
A x1 y1
A y1 x2
A x2 y2
A y2 x1
"""


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in (
        ("hourglass.tree", HOURGLASS_TREE),
        ("hourglass.graph", HOURGLASS_GRAPH),
        ("f2.graph", F2_GRAPH),
    ):
        p = tmp_path / name
        p.write_text(text)
        paths[name] = str(p)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_from_tree(files, capsys):
    code, out, _ = run(capsys, "from-tree", files["hourglass.tree"])
    assert code == 0
    assert out == HOURGLASS_GRAPH


def test_from_tree_json(files, capsys):
    code, out, _ = run(capsys, "--format", "json", "from-tree", files["hourglass.tree"])
    assert code == 0
    data = json.loads(out)
    assert ["xp", "yp"] in data["graph"]["arcs"]
    assert {"name": "x", "color": "A"} in data["graph"]["vertices"]


def test_lrt_from_graph(files, capsys):
    code, out, _ = run(capsys, "lrt", files["hourglass.graph"])
    assert code == 0
    assert out == "(x|A,y|B,(xp|A,yp|B));\n"


def test_lrt_from_tree_input(files, capsys):
    code, out, _ = run(capsys, "lrt", files["hourglass.tree"])
    assert code == 0
    assert out == "(x|A,y|B,(xp|A,yp|B));\n"


def test_lrt_rejects_non_bmg(files, capsys):
    code, out, err = run(capsys, "lrt", files["f2.graph"])
    assert code == 2
    assert "not a 2-colored best match graph" in err


def test_recognize_good(files, capsys):
    code, out, _ = run(capsys, "recognize", files["hourglass.graph"])
    assert code == 0
    assert out == "2-BMG: yes\n"


def test_recognize_f2(files, capsys):
    code, out, err = run(capsys, "recognize", files["f2.graph"])
    assert code == 2
    assert out == "2-BMG: no\n"
    assert err.strip() == "witness F2 x1 x2 y1 y2"


def test_recognize_f2_json(files, capsys):
    code, out, err = run(capsys, "--format", "json", "recognize", files["f2.graph"])
    assert code == 2
    data = json.loads(out)
    assert data["is_2bmg"] is False
    assert data["reason"] == "F2"
    assert data["witness"] == {
        "kind": "F2",
        "roles": ["x1", "x2", "y1", "y2"],
        "vertices": ["x1", "x2", "y1", "y2"],
    }


def test_check_be_graph(files, capsys):
    code, out, err = run(capsys, "check-be", files["hourglass.graph"])
    assert code == 0
    assert out == "hourglass-free: no\n"
    assert err.strip() == "witness hourglass x xp y yp"


def test_check_be_tree(files, capsys):
    code, out, err = run(capsys, "check-be", files["hourglass.tree"])
    assert code == 0
    assert out == "binary-explainable: no\n"
    assert err.startswith("violation r=A s=B")


def test_complete(files, capsys):
    code, out, _ = run(capsys, "complete", files["hourglass.graph"])
    assert code == 0
    lines = out.splitlines()
    assert "+ xp y" in lines and "+ yp x" in lines
    assert lines[0] == "# inserted-arcs 2"
    assert lines[-1] == "(x|A,xp|A,y|B,yp|B);"
    assert "A xp y" in lines  # part of the completed graph


def test_complete_json(files, capsys):
    code, out, _ = run(capsys, "--format", "json", "complete", files["hourglass.graph"])
    assert code == 0
    data = json.loads(out)
    assert data["inserted"] == [["xp", "y"], ["yp", "x"]]
    assert data["inserted_count"] == 2
    assert data["collapsed_subtrees"] == 1
    assert data["tree"] == "(x|A,xp|A,y|B,yp|B);"


def test_complete_not_a_bmg(files, capsys):
    code, out, err = run(capsys, "complete", files["f2.graph"])
    assert code == 2
    assert "not a 2-colored best match graph" in err


def test_oracle_subcommands(files, capsys):
    code, out, _ = run(capsys, "oracle", "count-trees", "4")
    assert code == 0 and out == "26\n"

    code, out, _ = run(capsys, "oracle", "is-bmg", files["hourglass.graph"])
    assert code == 0 and out.endswith(";\n")

    code, out, _ = run(capsys, "oracle", "is-bmg", files["f2.graph"])
    assert code == 2 and out == "none\n"

    code, out, _ = run(capsys, "oracle", "min-completions", files["hourglass.graph"])
    assert code == 0
    assert out.splitlines()[:2] == ["minimum-size 2", "solutions 1"]

    code, out, _ = run(capsys, "oracle", "lrt", files["hourglass.tree"])
    assert code == 0 and out == "(x|A,y|B,(xp|A,yp|B));\n"


def test_stdin_input(files, capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(HOURGLASS_TREE))
    code, out, _ = run(capsys, "from-tree", "-")
    assert code == 0
    assert out == HOURGLASS_GRAPH


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.tree"
    bad.write_text("(a|A);")
    code, _, err = run(capsys, "from-tree", str(bad))
    assert code == 1
    assert "parse error" in err


def test_usage_error_exit_code(capsys):
    assert main(["no-such-command"]) == 1
    assert main([]) == 1
    capsys.readouterr()


def test_byte_determinism(files, capsys):
    runs = [run(capsys, "complete", files["hourglass.graph"]) for _ in range(2)]
    assert runs[0] == runs[1]
    runs = [
        run(capsys, "--format", "json", "recognize", files["f2.graph"]) for _ in range(2)
    ]
    assert runs[0] == runs[1]


def test_missing_file(capsys):
    code, _, err = run(capsys, "from-tree", "/nonexistent/path.tree")
    assert code == 1
    assert "error" in err

import io
import json

import pytest

from critgroup.cli import (
    EXIT_CHECK_FAILED,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    InputError,
    emit_graph,
    parse_graph_text,
    parse_matrix_text,
    run,
)
from critgroup.digraph import line_graph

G1_TEXT = """\
vertices: [u, w]
edges:
  - {tail: u, head: w}
  - {tail: w, head: u}
"""

G2_TEXT = """\
vertices: ["0", "1", "2"]
edges:
  - ["0", "1"]
  - ["0", "2"]
  - ["1", "0"]
  - ["1", "2"]
  - ["2", "0"]
  - ["2", "1"]
"""


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def g1_file(tmp_path):
    p = tmp_path / "g1.yaml"
    p.write_text(G1_TEXT)
    return str(p)


@pytest.fixture
def g2_file(tmp_path):
    p = tmp_path / "g2.yaml"
    p.write_text(G2_TEXT)
    return str(p)


class TestParseGraph:
    def test_two_cycle(self):
        named = parse_graph_text(G1_TEXT)
        assert named.graph.vertices == ("u", "w")
        assert named.graph.edges == ((0, 1), (1, 0))

    def test_parallel_edges(self):
        named = parse_graph_text("vertices: [u, w]\nedges:\n  - [u, w]\n  - [u, w]\n")
        assert named.graph.edges == ((0, 1), (0, 1))

    def test_undeclared_vertex_has_line(self):
        with pytest.raises(InputError, match=r":4: edge uses undeclared vertex 'x'"):
            parse_graph_text("vertices: [u, w]\nedges:\n  - [u, w]\n  - [u, x]\n")

    def test_empty_vertices(self):
        with pytest.raises(InputError, match="non-empty"):
            parse_graph_text("vertices: []\nedges: []\n")

    def test_json_accepted(self):
        named = parse_graph_text(json.dumps({"vertices": ["a"], "edges": [{"tail": "a", "head": "a"}]}))
        assert named.graph.edges == ((0, 0),)

    def test_malformed(self):
        with pytest.raises(InputError):
            parse_graph_text("vertices: [u\n")
        with pytest.raises(InputError):
            parse_graph_text("- just a list\n")
        with pytest.raises(InputError, match="duplicate"):
            parse_graph_text("vertices: [u, u]\n")


def test_linegraph_roundtrip(g2_file):
    code, out, _ = invoke("linegraph", g2_file)
    assert code == EXIT_OK
    lg = parse_graph_text(out).graph
    expected = line_graph(parse_graph_text(G2_TEXT).graph)
    assert lg == expected
    assert lg.vertices[0] == "0>1#0"
    # and once more through emit
    assert parse_graph_text(emit_graph(lg)).graph == lg


def test_parse_matrix():
    m = parse_matrix_text("2 2\n2 4\n-2 6\n")
    assert m.to_rows() == [[2, 4], [-2, 6]]
    with pytest.raises(InputError):
        parse_matrix_text("2 2\n1 2\n")
    with pytest.raises(InputError):
        parse_matrix_text("1 2\n1 x\n")


class TestCommands:
    def test_kappa(self, g1_file):
        code, out, _ = invoke("kappa", g1_file, "--root", "w")
        assert (code, out.strip()) == (EXIT_OK, "1")

    def test_critgroup(self, g2_file):
        code, out, _ = invoke("critgroup", g2_file, "--sink", "0")
        assert code == EXIT_OK
        assert "Z/3" in out and "order: 3" in out
        code, out, _ = invoke("critgroup", g2_file, "--sink", "0", "--format", "record")
        rec = json.loads(out)
        assert rec["invariant_factors"] == [3] and rec["order"] == "3"

    def test_verify_passes(self, g2_file):
        code, out, _ = invoke("verify", g2_file, "--edge", "0")
        assert code == EXIT_OK
        assert "all binding checks passed" in out

    def test_verify_records(self, g2_file):
        code, out, _ = invoke("verify", g2_file, "--edge", "0", "--format", "record")
        recs = [json.loads(line) for line in out.splitlines()]
        assert all(r["passed"] for r in recs)
        assert {r["base_group"] for r in recs} == {"Z/3"}

    def test_verify_mutation_fails(self, g2_file):
        code, _, _ = invoke("verify", g2_file, "--edge", "0", "--mutate", "rho")
        assert code == EXIT_CHECK_FAILED

    def test_snf(self, tmp_path):
        p = tmp_path / "m.txt"
        p.write_text("2 2\n2 4\n-2 6\n")
        code, out, _ = invoke("snf", str(p), "--format", "record")
        assert code == EXIT_OK
        assert json.loads(out)["diagonal"] == [2, 10]
        code, out, _ = invoke("snf", str(p))
        assert "S:\n2 2\n2 0\n0 10" in out

    def test_fuzz(self):
        code, out, _ = invoke("fuzz", "--n", "6", "--k", "2", "--trials", "100", "--seed", "7")
        assert code == EXIT_OK
        assert "100 instances, 100 passed, 0 failed" in out

    def test_fuzz_deterministic(self):
        a = invoke("fuzz", "--trials", "15", "--seed", "3")
        b = invoke("fuzz", "--trials", "15", "--seed", "3")
        assert a == b


class TestExitCodes:
    def test_unknown_selector(self, g1_file):
        code, _, err = invoke("kappa", g1_file, "--root", "nope")
        assert code == EXIT_INPUT_ERROR and "unknown vertex" in err

    def test_edge_out_of_range(self, g1_file):
        code, _, _ = invoke("verify", g1_file, "--edge", "5")
        assert code == EXIT_INPUT_ERROR

    def test_missing_file(self, tmp_path):
        code, _, _ = invoke("kappa", str(tmp_path / "none.yaml"), "--root", "u")
        assert code == EXIT_INPUT_ERROR

    def test_malformed_graph(self, tmp_path):
        p = tmp_path / "bad.yaml"
        p.write_text("vertices: [a]\nedges:\n  - [a, b]\n")
        code, _, err = invoke("linegraph", str(p))
        assert code == EXIT_INPUT_ERROR and ":3:" in err

    def test_bad_arguments(self):
        assert invoke("frobnicate")[0] == EXIT_INPUT_ERROR

    def test_trio(self, g2_file, tmp_path):
        bad = tmp_path / "bad.yaml"
        bad.write_text("edges: []\n")
        assert invoke("verify", g2_file, "--edge", "0")[0] == EXIT_OK
        assert invoke("verify", g2_file, "--edge", "0", "--mutate", "tau")[0] == EXIT_CHECK_FAILED
        assert invoke("verify", str(bad), "--edge", "0")[0] == EXIT_INPUT_ERROR

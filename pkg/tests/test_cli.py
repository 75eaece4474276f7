import json

import pytest

from transversal_lab.cli import main
from transversal_lab.codec import decode_graph6, encode_digraph6, encode_graph6
from transversal_lab.constructions import half_graph, tensor
from transversal_lab.graphs import BitDigraph, UGraph
from transversal_lab.ramsey import circulant_digraph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out.strip()
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def stripped(report):
    report = dict(report)
    report.pop("timing", None)
    return report


class TestDrCommand:
    def test_compute_3_2(self, capsys, tmp_path):
        code, rep = run_json(
            capsys, "dr", "compute", "--n", "3", "--m", "2",
            "--cache-dir", str(tmp_path),
        )
        assert code == 0
        assert rep["result"]["exact"] is True
        assert rep["result"]["value"] == 4

    def test_compute_2_5(self, capsys, tmp_path):
        code, rep = run_json(
            capsys, "dr", "compute", "--n", "2", "--m", "5",
            "--cache-dir", str(tmp_path),
        )
        assert code == 0
        assert rep["result"] == {
            **rep["result"],
            "exact": True,
            "value": 5,
        }

    def test_compute_3_3(self, capsys, tmp_path):
        code, rep = run_json(
            capsys, "dr", "compute", "--n", "3", "--m", "3",
            "--cache-dir", str(tmp_path),
        )
        assert code == 0
        assert rep["result"]["exact"] is True
        assert rep["result"]["value"] == 9
        assert rep["result"]["certificate_order"] == 8

    def test_determinism_and_cache(self, capsys, tmp_path):
        args = ("dr", "compute", "--n", "3", "--m", "2", "--cache-dir", str(tmp_path))
        code1, rep1 = run_json(capsys, *args)
        code2, rep2 = run_json(capsys, *args)
        assert code1 == code2 == 0
        r1, r2 = stripped(rep1), stripped(rep2)
        r1.pop("nodes", None)
        r2.pop("nodes", None)
        assert r1 == r2
        assert (tmp_path / "dr-3-2-3.cert").exists()

    def test_tampered_cache_fails_verification(self, capsys, tmp_path):
        args = ("dr", "compute", "--n", "3", "--m", "2", "--cache-dir", str(tmp_path))
        run_json(capsys, *args)
        reports = list((tmp_path / "reports").iterdir())
        assert len(reports) == 1
        data = json.loads(reports[0].read_text())
        tt3 = BitDigraph.from_arcs(3, [(0, 1), (0, 2), (1, 2)])
        data["result"]["certificate"] = encode_digraph6(tt3)
        reports[0].write_text(json.dumps(data))
        code, _ = run(capsys, *args)
        assert code == 4

    def test_bounds(self, capsys):
        code, rep = run_json(capsys, "dr", "bounds", "--n", "3", "--m", "4")
        assert code == 0
        assert rep["result"]["lower"] == 9
        assert rep["result"]["upper"] == 16


class TestGenCommands:
    def test_half(self, capsys):
        code, out = run(capsys, "gen", "half", "--k", "4")
        assert code == 0
        g6, classes = out.splitlines()
        assert decode_graph6(g6) == half_graph(4).graph
        assert json.loads(classes) == {"classes": [[0, 1, 2, 3], [4, 5, 6, 7]]}

    def test_layered_from_file(self, capsys, tmp_path):
        d6 = tmp_path / "c3.d6"
        d6.write_text(encode_digraph6(circulant_digraph(3, [1])) + "\n")
        code, out = run(
            capsys, "gen", "layered", "--digraph", str(d6), "--depth", "5"
        )
        assert code == 0
        g6, classes = out.splitlines()
        assert decode_graph6(g6).order == 15
        assert len(json.loads(classes)["classes"]) == 3

    def test_tensor(self, capsys, tmp_path):
        ga = tmp_path / "k3.g6"
        gb = tmp_path / "e4.g6"
        ga.write_text(encode_graph6(UGraph.complete(3)) + "\n")
        gb.write_text(encode_graph6(UGraph.empty(4)) + "\n")
        code, out = run(capsys, "gen", "tensor", "--g", str(ga), "--h", str(gb))
        assert code == 0
        assert decode_graph6(out).order == 12

    def test_out_files(self, capsys, tmp_path):
        base = str(tmp_path / "rado")
        code, _ = run(capsys, "gen", "rado", "--depth", "6", "--out", base)
        assert code == 0
        assert (tmp_path / "rado.g6").exists()
        assert (tmp_path / "rado.classes.json").exists()

    def test_shift_and_henson(self, capsys):
        code, out = run(capsys, "gen", "shift", "--n", "2", "--N", "4")
        assert code == 0
        assert decode_graph6(out).order == 6
        code, out = run(capsys, "gen", "henson", "--n", "3", "--rounds", "1")
        assert code == 0
        g = decode_graph6(out)
        assert g.order == 6

    def test_partition_witness(self, capsys, tmp_path):
        gpath = tmp_path / "e2.g6"
        gpath.write_text(encode_graph6(UGraph.empty(2)) + "\n")
        code, out = run(
            capsys, "gen", "partition-witness", "--graph", str(gpath),
            "--a", "0", "--b", "1", "--n", "3", "--pair-budget", "10",
        )
        assert code == 0
        g6, classes = out.splitlines()
        data = json.loads(classes)
        assert 0 in data["classes"][0] and data["classes"][1] == [1]

    def test_missing_file_is_io_error(self, capsys, tmp_path):
        code, _ = run(
            capsys, "gen", "layered", "--digraph", str(tmp_path / "nope.d6"),
            "--depth", "2",
        )
        assert code == 3


class TestSolverCommands:
    def test_transversal_solve(self, capsys, tmp_path):
        t = tensor(UGraph.complete(3), UGraph.empty(4))
        classes = [[4 * f + 2 * h, 4 * f + 2 * h + 1] for f in range(3) for h in range(2)]
        gpath = tmp_path / "t.g6"
        cpath = tmp_path / "t.json"
        gpath.write_text(encode_graph6(t) + "\n")
        cpath.write_text(json.dumps({"classes": classes}))
        code, rep = run_json(
            capsys, "transversal", "solve", "--graph", str(gpath),
            "--classes", str(cpath), "--m", "3", "--ell", "1",
        )
        assert code == 0
        assert rep["result"]["status"] == "none"
        code, rep = run_json(
            capsys, "transversal", "solve", "--graph", str(gpath),
            "--classes", str(cpath), "--m", "2", "--ell", "2",
        )
        assert rep["result"]["status"] == "found"

    def test_embed_halforder_on_half_graph(self, capsys, tmp_path):
        pg = half_graph(5)
        gpath = tmp_path / "h.g6"
        cpath = tmp_path / "h.json"
        gpath.write_text(encode_graph6(pg.graph) + "\n")
        cpath.write_text(pg.classes_json())
        code, rep = run_json(
            capsys, "embed", "halforder", "--graph", str(gpath),
            "--classes", str(cpath),
        )
        assert code == 0
        assert rep["result"]["order"] == 5
        assert rep["result"]["exact"] is True

    def test_embed_balanced(self, capsys, tmp_path):
        pg = half_graph(3)
        gpath = tmp_path / "h.g6"
        cpath = tmp_path / "h.json"
        ppath = tmp_path / "p.json"
        gpath.write_text(encode_graph6(pg.graph) + "\n")
        cpath.write_text(pg.classes_json())
        ppath.write_text(json.dumps({"left": 1, "right": 1, "edges": [[0, 0]]}))
        code, rep = run_json(
            capsys, "embed", "balanced", "--graph", str(gpath),
            "--classes", str(cpath), "--pattern", str(ppath),
        )
        assert code == 0
        assert rep["result"]["found"] is True

    def test_ortho_check(self, capsys, tmp_path):
        fpath = tmp_path / "fam.json"
        fpath.write_text(json.dumps([[1, 0], [0, 1], [1, 1], [1, -1]]))
        code, rep = run_json(
            capsys, "ortho", "check", "--family", str(fpath), "--dim", "2", "--m", "2"
        )
        assert code == 0
        assert rep["result"]["ok"] is True

    def test_ortho_search(self, capsys):
        code, rep = run_json(
            capsys, "ortho", "search", "--dim", "2", "--m", "2", "--pool-height", "3"
        )
        assert code == 0
        assert rep["result"]["alpha_lower"] == 4
        assert rep["result"]["exact_over_pool"] is True


class TestExitCodes:
    def test_argparse_error_is_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["dr", "compute", "--n", "3"])  # missing --m
        assert exc.value.code == 2

    def test_bad_value_is_2(self, capsys, tmp_path):
        code, _ = run(
            capsys, "dr", "compute", "--n", "0", "--m", "2",
            "--cache-dir", str(tmp_path),
        )
        assert code == 2

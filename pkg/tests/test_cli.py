import json

import pytest

from sepgamma import Graph, parse_graph
from sepgamma.cli import main


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


@pytest.fixture
def c3_file(tmp_path):
    return write(tmp_path, "c3.txt", "1 2\n2 3\n3 1\n")


@pytest.fixture
def c4_file(tmp_path):
    return write(tmp_path, "c4.txt", "1 2\n2 3\n3 4\n4 1\n")


@pytest.fixture
def k4_file(tmp_path):
    return write(tmp_path, "k4.txt", "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n")


class TestGammaA:
    def test_c3_auto(self, c3_file, capsys):
        assert main(["gamma-a", c3_file]) == 0
        out = capsys.readouterr().out
        assert "gamma: [1, 6]" in out
        assert "hstar: [1, 9, 9, 1]" in out
        assert "volume: 20" in out
        assert "method: formula" in out

    def test_k4_formula_precondition(self, k4_file, capsys):
        assert main(["gamma-a", k4_file, "--method", "formula"]) == 2

    def test_k4_cuts_succeeds(self, k4_file, capsys):
        assert main(["gamma-a", k4_file, "--method", "cuts"]) == 0
        out = capsys.readouterr().out
        assert "method: cut_sum" in out
        assert "volume: 70" in out

    def test_ehrhart_method(self, c3_file, capsys):
        assert main(["gamma-a", c3_file, "--method", "ehrhart"]) == 0
        out = capsys.readouterr().out
        assert "volume: 20" in out and "method: ehrhart" in out

    def test_structured_format(self, c3_file, capsys):
        assert main(["gamma-a", c3_file, "--format", "structured"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["gamma"] == [1, 6] and doc["volume"] == 20

    def test_deterministic_stdout(self, c4_file, capsys):
        assert main(["gamma-a", c4_file]) == 0
        first = capsys.readouterr().out
        assert main(["gamma-a", c4_file]) == 0
        assert capsys.readouterr().out == first

    def test_parse_failure_exit_1(self, tmp_path, capsys):
        bad = write(tmp_path, "bad.txt", "1 1\n")
        assert main(["gamma-a", bad]) == 1
        assert main(["gamma-a", str(tmp_path / "missing.txt")]) == 1

    def test_bound_exceeded_exit_4(self, c4_file, capsys):
        assert main(["gamma-a", c4_file, "--method", "cuts",
                     "--bound-override", "cut-sum=2"]) == 4

    def test_bad_bound_override(self, c4_file):
        assert main(["gamma-a", c4_file, "--bound-override", "nope=3"]) == 1
        assert main(["gamma-a", c4_file, "--bound-override", "cut-sum=x"]) == 1


class TestGammaB:
    def test_c4(self, c4_file, capsys):
        assert main(["gamma-b", c4_file]) == 0
        out = capsys.readouterr().out
        assert "gamma: [1, 16, 16]" in out and "volume: 96" in out

    def test_non_bipartite_auto_exit_2(self, c3_file):
        assert main(["gamma-b", c3_file]) == 2

    def test_non_bipartite_ehrhart_ok(self, c3_file, capsys):
        assert main(["gamma-b", c3_file, "--method", "ehrhart"]) == 0
        out = capsys.readouterr().out
        assert "gamma: n/a" in out


class TestCheck:
    def test_c5_direct_a_polytope(self, tmp_path, capsys):
        c5 = write(tmp_path, "c5.txt", "1 2\n2 3\n3 4\n4 5\n5 1\n")
        assert main(["check", c5]) == 0
        out = capsys.readouterr().out
        assert "gamma: [1, 2, 6]" in out
        assert "palindromic: yes" in out
        assert "gamma-positive: yes" in out
        assert "real-rooted: NO" in out

    def test_suspension_polytope(self, c3_file, capsys):
        assert main(["check", c3_file, "--polytope", "ahat"]) == 0
        out = capsys.readouterr().out
        assert "real-rooted: yes" in out

    def test_b_polytope(self, c4_file, capsys):
        assert main(["check", c4_file, "--polytope", "b"]) == 0
        assert "volume: 96" in capsys.readouterr().out


class TestWitness:
    def test_type_a_export_parses_back(self, c3_file, capsys):
        assert main(["witness", c3_file, "--type", "a"]) == 0
        out = capsys.readouterr().out
        assert "f-poly: [1, 6]" in out and "verdict: ok" in out
        edge_text = out.split("witness-edge-list:\n", 1)[1]
        assert parse_graph(edge_text) == Graph(6, frozenset())

    def test_type_b_forest_only(self, c4_file):
        assert main(["witness", c4_file, "--type", "b"]) == 2


class TestAnalyze:
    def test_c4(self, c4_file, capsys):
        assert main(["analyze", c4_file]) == 0
        out = capsys.readouterr().out
        assert "bipartite: yes" in out
        assert "cactus: yes" in out
        assert "simple-cycle-count: 1" in out


class TestVerify:
    def test_quick_pass(self, c4_file, capsys):
        assert main(["verify", c4_file]) == 0
        out = capsys.readouterr().out
        assert "a-formula-vs-cuts: pass" in out

    def test_full_pass(self, c4_file, capsys):
        assert main(["verify", c4_file, "--level", "full"]) == 0
        out = capsys.readouterr().out
        for name in ("a-vs-ehrhart", "b-vs-ehrhart", "mu-bridge"):
            assert f"{name}: pass" in out

    def test_skips_reported(self, k4_file, capsys):
        assert main(["verify", k4_file]) == 0
        out = capsys.readouterr().out
        assert "a-formula-vs-cuts: skipped (even-cycle condition fails)" in out

    def test_mismatch_exit_3(self, c4_file, capsys, monkeypatch):
        from sepgamma import engine
        from sepgamma.polynomials import Poly

        real = engine.gamma_a_cut_sum

        def broken(g, max_n=20):
            res = real(g, max_n=max_n)
            return engine.SepResult(res.gamma + Poly([1]), res.hstar,
                                    res.volume, res.dim, res.method)

        monkeypatch.setattr(engine, "gamma_a_cut_sum", broken)
        assert main(["verify", c4_file]) == 3
        assert "FAIL" in capsys.readouterr().out

    def test_structured(self, c4_file, capsys):
        assert main(["verify", c4_file, "--format", "structured"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert all(c["status"] in ("pass", "skipped") for c in doc["checks"])


class TestBatch:
    def test_cycle_corpus(self, tmp_path, capsys):
        d = tmp_path / "corpus"
        d.mkdir()
        (d / "c3.txt").write_text("1 2\n2 3\n3 1\n")
        (d / "c4.txt").write_text("1 2\n2 3\n3 4\n4 1\n")
        (d / "c5.txt").write_text("1 2\n2 3\n3 4\n4 5\n5 1\n")
        assert main(["batch", str(d)]) == 0
        out = capsys.readouterr().out
        lines = out.strip().splitlines()
        assert lines[0] == "name,n,edges,class,gamma,hstar,volume,real_rooted,agreement"
        assert len(lines) == 4
        volumes = [line.split(",")[-3] for line in lines[1:]]
        assert volumes == ["20", "54", "152"]
        assert all(line.split(",")[-1] == "yes" for line in lines[1:])

    def test_empty_dir(self, tmp_path, capsys):
        d = tmp_path / "empty"
        d.mkdir()
        assert main(["batch", str(d)]) == 0
        out = capsys.readouterr().out
        assert out.strip() == "name,n,edges,class,gamma,hstar,volume,real_rooted,agreement"

    def test_partial_failure(self, tmp_path, capsys):
        d = tmp_path / "mixed"
        d.mkdir()
        (d / "a_bad.txt").write_text("1 1\n")
        (d / "c3.txt").write_text("1 2\n2 3\n3 1\n")
        assert main(["batch", str(d)]) == 1
        captured = capsys.readouterr()
        assert "c3.txt" in captured.out
        assert "a_bad.txt" in captured.err

    def test_structured(self, tmp_path, capsys):
        d = tmp_path / "one"
        d.mkdir()
        (d / "c3.txt").write_text("1 2\n2 3\n3 1\n")
        assert main(["batch", str(d), "--out-format", "structured"]) == 0
        rows = json.loads(capsys.readouterr().out)
        assert rows[0]["volume"] == 20 and rows[0]["real_rooted"] == "yes"


class TestJson:
    def test_json_graph_input(self, tmp_path, capsys):
        p = write(tmp_path, "g.json", '{"n": 3, "edges": [[1,2],[2,3],[3,1]]}')
        assert main(["gamma-a", p]) == 0
        assert "volume: 20" in capsys.readouterr().out

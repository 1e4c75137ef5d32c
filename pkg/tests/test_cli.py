import io
import json
import subprocess
import sys

import pytest

from diam2cycles import extractor
from diam2cycles.cli import main
from diam2cycles.fixtures import fixture
from diam2cycles.graph import format_edge_list, from_edge_list
from diam2cycles.graph6 import encode_graph6, parse_graph6
from diam2cycles.harness import Options, run

PETERSEN_G6 = encode_graph6(fixture("petersen")).decode()
K4_G6 = "C~"


def feed(monkeypatch, text: str):
    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(text.encode())))


def json_lines(out: str):
    lines = [json.loads(line) for line in out.splitlines()]
    return lines[:-1], lines[-1]["summary"]


class TestVerify:
    def test_petersen(self, monkeypatch, capsys):
        feed(monkeypatch, PETERSEN_G6 + "\n")
        assert main(["verify"]) == 0
        recs, summary = json_lines(capsys.readouterr().out)
        assert len(recs) == 1
        r = recs[0]
        assert r["branch"] == "Case2-C8" and r["oracle_agrees"] is True
        assert (r["n"], r["m"], r["graph_id"]) == (10, 15, PETERSEN_G6)
        assert summary["counterexample_count"] == 0

    def test_k4_skipped(self, monkeypatch, capsys):
        feed(monkeypatch, ">>graph6<<\n" + K4_G6 + "\n" + PETERSEN_G6 + "\n")
        assert main(["verify"]) == 0
        recs, summary = json_lines(capsys.readouterr().out)
        assert [r["graph_index"] for r in recs] == [0, 1]
        assert recs[0]["precondition"]["satisfied"] is False
        assert recs[0]["branch"] == "skipped" and recs[0]["witness"] is None
        assert summary["statuses"] == {"skipped": 1, "verified": 1}

    def test_parse_errors_continue(self, monkeypatch, capsys):
        feed(monkeypatch, "C~~\n" + PETERSEN_G6 + "\n")
        assert main(["verify"]) == 0
        recs, _ = json_lines(capsys.readouterr().out)
        assert recs[0]["status"] == "parse-error" and "offset" in recs[0]["error"]
        assert recs[1]["status"] == "verified"

    def test_strict_aborts(self, monkeypatch, capsys):
        feed(monkeypatch, "C~~\n" + PETERSEN_G6 + "\n")
        assert main(["verify", "--strict"]) == 1

    def test_edgelist_input(self, tmp_path, capsys):
        path = tmp_path / "graphs.txt"
        path.write_text(format_edge_list(fixture("petersen")) + format_edge_list(fixture("k33")))
        assert main(["verify", "--format", "edgelist", str(path)]) == 0
        recs, _ = json_lines(capsys.readouterr().out)
        assert [r["branch"] for r in recs] == ["Case2-C8", "Case2-Contradiction-C4"]

    def test_tsv(self, tmp_path, capsys):
        out = tmp_path / "r.tsv"
        assert main(["verify", "--fixture", "k33", "--report", "tsv", "-o", str(out)]) == 0
        header, row, tail = out.read_text().splitlines()
        assert header.split("\t")[:3] == ["graph_index", "graph_id", "n"]
        cells = dict(zip(header.split("\t"), row.split("\t")))
        assert cells["branch"] == "Case2-Contradiction-C4"
        assert cells["witness"] == "4,1,3,0"
        assert tail.startswith("# summary ")

    def test_jobs_do_not_change_bytes(self, tmp_path):
        a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
        common = ["verify", "--random", "--n", "9", "--n-max", "14", "--p", "0.5", "--seed", "3",
                  "--count", "60", "--chunk-size", "7"]
        assert main(common + ["--jobs", "1", "-o", str(a)]) == 0
        assert main(common + ["--jobs", "3", "-o", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_counterexample_exit_status(self, monkeypatch):
        def boom(g, report=None):
            raise extractor.CounterexampleError(g)

        monkeypatch.setattr(extractor, "extract_with_fallback", boom)
        out = io.StringIO()
        summary = run("verify", [PETERSEN_G6.encode()], out, opts=Options())
        assert summary.counterexample_count == 1 and summary.exit_code == 2
        first = json.loads(out.getvalue().splitlines()[0])
        assert first["status"] == "counterexample"

    def test_oracle_auto_off_for_large(self, monkeypatch, capsys):
        monkeypatch.setattr("diam2cycles.cli.ORACLE_AUTO_LIMIT", 1)
        feed(monkeypatch, PETERSEN_G6 + "\n" + PETERSEN_G6 + "\n")
        main(["verify"])
        recs, _ = json_lines(capsys.readouterr().out)
        assert all(r["oracle_agrees"] is None for r in recs)

    def test_timings_opt_in(self, capsys):
        main(["verify", "--fixture", "petersen"])
        recs, summary = json_lines(capsys.readouterr().out)
        assert recs[0]["elapsed_micros"] is None and summary["wall_time"] is None
        main(["verify", "--fixture", "petersen", "--timings"])
        recs, summary = json_lines(capsys.readouterr().out)
        assert isinstance(recs[0]["elapsed_micros"], int) and summary["wall_time"] is not None


class TestScan:
    def test_petersen_and_k4(self, monkeypatch, capsys):
        feed(monkeypatch, PETERSEN_G6 + "\n" + K4_G6 + "\n")
        assert main(["scan-eg", "--max-exp", "3"]) == 0
        recs, summary = json_lines(capsys.readouterr().out)
        assert [r["exponent"] for r in recs] == [3, 2]
        assert recs[0]["cycle_length"] == 8 and len(recs[0]["witness"]) == 8
        assert summary["flagged_count"] == 0

    def test_flagged_carries_cap(self, capsys):
        assert main(["scan-eg", "--fixture", "petersen", "--max-exp", "2"]) == 0
        recs, summary = json_lines(capsys.readouterr().out)
        assert recs[0]["status"] == "flagged" and recs[0]["cap_exponent"] == 2
        assert summary["flagged_count"] == 1

    def test_low_degree_skipped(self, monkeypatch, capsys):
        feed(monkeypatch, encode_graph6(from_edge_list(3, [(0, 1), (1, 2)])).decode() + "\n")
        main(["scan-eg"])
        recs, _ = json_lines(capsys.readouterr().out)
        assert recs[0]["status"] == "skipped"

    def test_bad_cap(self, capsys):
        assert main(["scan-eg", "--fixture", "k4", "--max-exp", "1"]) == 1


class TestExtract:
    def test_k33(self, capsys):
        assert main(["extract", "--fixture", "k33", "--json", "--check"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["branch"] == "Case2-Contradiction-C4" and out["length"] == 4
        assert out["oracle_agrees"] is True

    def test_figure5_roles(self, capsys):
        assert main(["extract", "--fixture", "figure5-case1"]) == 0
        text = capsys.readouterr().out
        assert text.splitlines()[0] == "C8: 9 -> 7 -> 5 -> 4 -> 1 -> 0 -> 3 -> 6"
        for role in ("w4", "w2", "v6", "d", "v2", "v1", "b", "w1"):
            assert f" {role} = " in text

    def test_path_graph(self, capsys):
        path = encode_graph6(from_edge_list(4, [(0, 1), (1, 2), (2, 3)])).decode()
        assert main(["extract", "--graph6", path]) == 1
        err = capsys.readouterr().err
        assert "minimum degree" in err

    def test_edgelist_file(self, tmp_path, capsys):
        p = tmp_path / "g.txt"
        p.write_text(format_edge_list(fixture("petersen")))
        assert main(["extract", "--format", "edgelist", str(p), "--json"]) == 0
        assert json.loads(capsys.readouterr().out)["branch"] == "Case2-C8"


class TestGen:
    def test_fixture(self, capsysbinary):
        assert main(["gen", "--fixture", "petersen"]) == 0
        lines = capsysbinary.readouterr().out.splitlines()
        assert len(lines) == 1 and parse_graph6(lines[0]) == fixture("petersen")

    def test_exhaustive(self, capsysbinary):
        assert main(["gen", "--exhaustive", "--n", "3"]) == 0
        assert len(capsysbinary.readouterr().out.splitlines()) == 8

    def test_random_is_reproducible_across_processes(self):
        cmd = [sys.executable, "-m", "diam2cycles", "gen", "--random", "--n", "12", "--p", "0.6",
               "--seed", "7", "--count", "3"]
        a = subprocess.run(cmd, capture_output=True, check=True).stdout
        b = subprocess.run(cmd, capture_output=True, check=True).stdout
        assert a == b and len(a.splitlines()) == 3

    @pytest.mark.parametrize("argv", [
        ["gen"],
        ["gen", "--exhaustive", "--n", "9"],
        ["gen", "--random", "--n", "5", "--p", "1.5"],
        ["gen", "--random"],
        ["gen", "--exhaustive", "--random", "--n", "3"],
        ["bogus"],
    ])
    def test_usage_errors(self, argv, capsys):
        assert main(argv) == 1

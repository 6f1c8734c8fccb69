import csv
import json
import subprocess
import sys

import pytest

from contagion import gen_cycle, gen_disjoint_cliques, serialize_edge_list
from contagion.cli import main


def write_graph(tmp_path, g, name="graph.txt"):
    path = tmp_path / name
    path.write_text(serialize_edge_list(g))
    return str(path)


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestGen:
    def test_disjoint_cliques_file(self, tmp_path):
        out = tmp_path / "cliques.txt"
        assert main(["gen", "--family", "disjoint-cliques", "--q", "3", "--l", "4",
                     "--output", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 18

    def test_cycle_five_lines(self, tmp_path):
        out = tmp_path / "c5.txt"
        assert main(["gen", "--family", "cycle", "--n", "5", "-o", str(out)]) == 0
        assert len(out.read_text().splitlines()) == 5

    def test_gnp_p_zero_empty(self, tmp_path):
        out = tmp_path / "empty.txt"
        assert main(["gen", "--family", "gnp", "--n", "10", "--p", "0", "--seed", "1",
                     "-o", str(out)]) == 0
        assert out.read_text() == ""

    def test_missing_param(self, tmp_path, capsys):
        assert main(["gen", "--family", "cycle"]) == 2
        assert "needs" in capsys.readouterr().err

    def test_reports_sizes_on_stderr(self, tmp_path, capsys):
        main(["gen", "--family", "cycle", "--n", "6", "-o", str(tmp_path / "g.txt")])
        assert "n=6 m=6" in capsys.readouterr().err


class TestBound:
    def test_c6(self, tmp_path, capsys):
        path = write_graph(tmp_path, gen_cycle(6))
        code, rep = run_json(capsys, ["bound", path, "--k", "2"])
        assert code == 0
        assert rep["w"] == {"numerator": 4, "denominator": 1, "decimal": 4.0}
        assert rep["w_floor"] == 4
        assert rep["graph"] == {"n": 6, "m": 6, "min_degree": 2, "max_degree": 2}

    def test_k5(self, tmp_path, capsys):
        path = write_graph(tmp_path, gen_disjoint_cliques(1, 5))
        code, rep = run_json(capsys, ["bound", path, "--k", "2"])
        assert code == 0 and rep["w"]["numerator"] == 2

    def test_isolated_with_override(self, tmp_path, capsys):
        path = tmp_path / "iso.txt"
        path.write_text("")
        code, rep = run_json(
            capsys, ["bound", str(path), "--k", "3", "--num-vertices", "5"]
        )
        assert code == 0 and rep["w"]["numerator"] == 5

    def test_invalid_k(self, tmp_path, capsys):
        path = write_graph(tmp_path, gen_cycle(6))
        assert main(["bound", path, "--k", "0"]) == 2

    def test_parse_error_line_number(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("0 1\nbroken\n")
        assert main(["bound", str(path), "--k", "2"]) == 2
        assert "line 2" in capsys.readouterr().err


class TestFind:
    def test_greedy_k5(self, tmp_path, capsys):
        path = write_graph(tmp_path, gen_disjoint_cliques(1, 5))
        code, rep = run_json(capsys, ["find", path, "--k", "2", "--algo", "greedy"])
        assert code == 0
        assert rep["size"] == 2 and rep["verified"]
        assert rep["certificate"]["deletion_order"] == [0, 1, 2]

    def test_exact_c5(self, tmp_path, capsys):
        path = write_graph(tmp_path, gen_cycle(5))
        code, rep = run_json(capsys, ["find", path, "--k", "2", "--algo", "exact",
                                      "--cap", "3"])
        assert code == 0 and rep["size"] == 3
        assert rep["subsets_tested"] > 0

    def test_exact_cap_exceeded_exit3(self, tmp_path, capsys):
        path = write_graph(tmp_path, gen_cycle(5))
        code = main(["find", path, "--k", "2", "--algo", "exact", "--cap", "2"])
        rep = json.loads(capsys.readouterr().out)
        assert code == 3
        assert rep["cap_exceeded"] and rep["set"] is None

    def test_random_three_k5(self, tmp_path, capsys):
        path = write_graph(tmp_path, gen_disjoint_cliques(3, 5))
        code, rep = run_json(capsys, ["find", path, "--k", "2", "--algo", "random",
                                      "--seed", "7", "--max-trials", "1000"])
        assert code == 0
        assert rep["size"] <= 6 and rep["certificate"]["accepted"]

    def test_random_replay_identical(self, tmp_path, capsys):
        path = write_graph(tmp_path, gen_disjoint_cliques(2, 6))
        _, rep1 = run_json(capsys, ["find", path, "--k", "2", "--algo", "random",
                                    "--seed", "42"])
        _, rep2 = run_json(capsys, ["find", path, "--k", "2", "--algo", "random",
                                    "--seed", "42"])
        assert rep1["set"] == rep2["set"]

    def test_k2base_requires_k2(self, tmp_path, capsys):
        path = write_graph(tmp_path, gen_disjoint_cliques(1, 6))
        assert main(["find", path, "--k", "3", "--algo", "k2base", "--seed", "1"]) == 2

    def test_k2base_low_degree_precondition(self, tmp_path, capsys):
        path = tmp_path / "path.txt"
        path.write_text("0 1\n1 2\n2 3\n")  # endpoints have degree 1
        code = main(["find", str(path), "--k", "2", "--algo", "k2base", "--seed", "1"])
        assert code == 2
        assert "greedy" in capsys.readouterr().err

    def test_k2base_min_degree_two_succeeds(self, tmp_path, capsys):
        path = write_graph(tmp_path, gen_cycle(6))
        code, rep = run_json(capsys, ["find", path, "--k", "2", "--algo", "k2base",
                                      "--seed", "1"])
        assert code == 0 and rep["verified"]

    def test_k2iter(self, tmp_path, capsys):
        path = write_graph(tmp_path, gen_disjoint_cliques(1, 30))
        code, rep = run_json(capsys, ["find", path, "--k", "2", "--algo", "k2iter",
                                      "--seed", "3"])
        assert code == 0 and rep["verified"]
        assert "rounds" in rep["certificate"]

    def test_seed_echoed_when_generated(self, tmp_path, capsys):
        path = write_graph(tmp_path, gen_disjoint_cliques(1, 6))
        code, rep = run_json(capsys, ["find", path, "--k", "2", "--algo", "random"])
        assert code == 0 and isinstance(rep["seed"], int)


class TestCheck:
    def test_c5_not_contagious(self, tmp_path, capsys):
        gpath = write_graph(tmp_path, gen_cycle(5))
        spath = tmp_path / "seeds.txt"
        spath.write_text("0\n2\n")
        code, rep = run_json(capsys, ["check", gpath, "--k", "2", "--seeds", str(spath)])
        assert code == 0
        assert rep["contagious"] is False and rep["activated_count"] == 3

    def test_c5_contagious(self, tmp_path, capsys):
        gpath = write_graph(tmp_path, gen_cycle(5))
        spath = tmp_path / "seeds.txt"
        spath.write_text("0\n2\n4\n")
        code, rep = run_json(capsys, ["check", gpath, "--k", "2", "--seeds", str(spath)])
        assert rep["contagious"] is True
        assert max(rep["rounds"]) <= 1

    def test_all_seeded(self, tmp_path, capsys):
        gpath = write_graph(tmp_path, gen_cycle(4))
        spath = tmp_path / "seeds.txt"
        spath.write_text("".join(f"{v}\n" for v in range(4)))
        code, rep = run_json(capsys, ["check", gpath, "--k", "2", "--seeds", str(spath)])
        assert rep["contagious"] is True

    def test_out_of_range_seed(self, tmp_path, capsys):
        gpath = write_graph(tmp_path, gen_cycle(4))
        spath = tmp_path / "seeds.txt"
        spath.write_text("9\n")
        assert main(["check", gpath, "--k", "2", "--seeds", str(spath)]) == 2

    def test_find_result_recheck_roundtrip(self, tmp_path, capsys):
        gpath = write_graph(tmp_path, gen_disjoint_cliques(2, 5))
        code, rep = run_json(capsys, ["find", gpath, "--k", "2", "--algo", "greedy"])
        spath = tmp_path / "seeds.txt"
        spath.write_text("".join(f"{v}\n" for v in rep["set"]))
        code, chk = run_json(capsys, ["check", gpath, "--k", "2", "--seeds", str(spath)])
        assert chk["contagious"] is True


class TestFormats:
    def test_csv_single_row(self, tmp_path, capsys):
        path = write_graph(tmp_path, gen_cycle(6))
        assert main(["bound", path, "--k", "2", "--format", "csv"]) == 0
        rows = list(csv.reader(capsys.readouterr().out.splitlines()))
        assert len(rows) == 2
        assert "w.numerator" in rows[0]

    def test_report_to_file(self, tmp_path, capsys):
        path = write_graph(tmp_path, gen_cycle(6))
        out = tmp_path / "report.json"
        assert main(["bound", path, "--k", "2", "--output", str(out)]) == 0
        assert json.loads(out.read_text())["w_floor"] == 4


class TestBench:
    def suite(self, tmp_path):
        spec = {
            "master_seed": 5,
            "runs": [
                {"family": "disjoint-cliques", "params": {"q": 2, "l": 5}, "k": 2,
                 "algos": ["greedy", "random"], "repetitions": 2},
                {"family": "gnp", "params": {"n": 30, "p": 0.2}, "k": 2,
                 "algos": ["greedy"], "repetitions": 1},
                {"family": "cycle", "params": {"n": 2}, "k": 2,
                 "algos": ["greedy"], "repetitions": 1},
            ],
        }
        path = tmp_path / "suite.json"
        path.write_text(json.dumps(spec))
        return str(path)

    def read_rows(self, path):
        with open(path, newline="") as fh:
            return list(csv.DictReader(fh))

    def test_row_counts_and_errors(self, tmp_path):
        out = tmp_path / "bench.csv"
        assert main(["bench", self.suite(tmp_path), "-o", str(out)]) == 0
        rows = self.read_rows(out)
        assert len(rows) == 6  # 2 algos x 2 reps + 1 + 1 failed
        bad = [r for r in rows if r["error"]]
        assert len(bad) == 1 and "cycle" == bad[0]["family"]

    def test_greedy_rows_within_bound(self, tmp_path):
        out = tmp_path / "bench.csv"
        main(["bench", self.suite(tmp_path), "-o", str(out)])
        for row in self.read_rows(out):
            if row["algo"] == "greedy" and not row["error"]:
                assert float(row["size"]) <= float(row["w"]) + 1e-9

    def test_deterministic_modulo_timing(self, tmp_path):
        out1, out2 = tmp_path / "b1.csv", tmp_path / "b2.csv"
        main(["bench", self.suite(tmp_path), "-o", str(out1)])
        main(["bench", self.suite(tmp_path), "-o", str(out2)])
        strip = lambda p: [
            {k: v for k, v in row.items() if k != "wall_time_s"} for row in self.read_rows(p)
        ]
        assert strip(out1) == strip(out2)


def test_module_entry_point(tmp_path):
    g = tmp_path / "c6.txt"
    proc = subprocess.run(
        [sys.executable, "-m", "contagion", "gen", "--family", "cycle", "--n", "6",
         "-o", str(g)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert len(g.read_text().splitlines()) == 6

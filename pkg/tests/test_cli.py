import csv
import json
import subprocess
import sys

import pytest

from netvalue import Graph, Metric, RngSeed, WsConfig, evaluate, ws_generate
from netvalue.cli import GenerateCmd, ReproduceCmd, ValueCmd, main, parse_args


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestParse:
    def test_generate(self, tmp_path):
        cmd = parse_args(["generate", "--model", "ws", "--n", "100", "--k", "4", "--p", "0.18",
                          "--seed", "7", "--out", str(tmp_path / "g.json")])
        assert isinstance(cmd, GenerateCmd)
        assert cmd.config == WsConfig(100, 4, 0.18)
        assert cmd.seed == RngSeed(7, 0)

    def test_value(self, tmp_path):
        path = tmp_path / "g.json"
        path.write_text(Graph(3).to_json())
        cmd = parse_args(["value", "--metric", "hop:2", "--graph", str(path)])
        assert cmd == ValueCmd(path, Metric("hop", 2), False)

    def test_reproduce(self, tmp_path):
        cmd = parse_args(["reproduce", "--figure", "8", "--reps", "30", "--seed", "42", "--out", str(tmp_path)])
        assert cmd == ReproduceCmd("figure", 8, tmp_path, 30, 42)

    @pytest.mark.parametrize("argv", [
        ["generate", "--model", "ws", "--n", "100", "--k", "5"],
        ["generate", "--model", "ws", "--n", "100", "--p", "1.5"],
        ["generate", "--model", "ws", "--n", "abc"],
        ["generate", "--model", "ws"],
        ["generate", "--model", "ws", "--n", "10", "--bogus", "1"],
        ["generate", "--model", "ba", "--n", "10", "--seed", "-1"],
        ["value", "--metric", "hop:0", "--graph", "x.json"],
        ["value", "--metric", "zipf", "--graph", "missing.json"],
        ["sweep", "--family", "ws", "--metric", "hop:2"],
        ["sweep", "--family", "ws", "--sizes", "100", "--metric", "hop:2", "--p-grid", "0.1,2"],
        ["reproduce", "--table", "4"],
        ["reproduce", "--table", "1", "--figure", "2"],
        ["reproduce", "--table", "1", "--reps", "0"],
        [],
    ])
    def test_usage_errors(self, argv, capsys):
        with pytest.raises(SystemExit) as exc:
            parse_args(argv)
        assert exc.value.code != 0


class TestExecute:
    def test_generate_value_round_trip(self, tmp_path, capsys):
        out = tmp_path / "g.json"
        code, _, _ = run(["generate", "--model", "ws", "--n", "100", "--k", "4", "--p", "0.18",
                          "--seed", "7", "--out", str(out)], capsys)
        assert code == 0
        g = ws_generate(WsConfig(100, 4, 0.18), RngSeed(7))
        assert out.read_text() == g.to_json() + "\n"
        code, text, _ = run(["value", "--metric", "hop:2", "--graph", str(out)], capsys)
        assert code == 0 and float(text) == evaluate(g, Metric("hop", 2)).value
        code, text, _ = run(["value", "--metric", "metcalfe", "--graph", str(out)], capsys)
        assert text.strip() == "10000"
        code, text, _ = run(["value", "--metric", "zipf", "--graph", str(out), "--json"], capsys)
        assert json.loads(text) == {"metric": "zipf", "n": 100, "value": 200.0}

    def test_generate_stdout(self, capsys):
        code, text, _ = run(["generate", "--model", "ba", "--n", "10", "--m", "1"], capsys)
        assert code == 0 and Graph.from_json(text).num_edges == 10

    def test_malformed_graph(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{"n": 2, "edges": [[0, 0]]}')
        code, text, err = run(["value", "--metric", "zipf", "--graph", str(bad)], capsys)
        assert code == 1 and text == "" and "self-loop" in err

    def test_reproduce_table3(self, tmp_path, capsys):
        code, _, _ = run(["reproduce", "--table", "3", "--out", str(tmp_path)], capsys)
        assert code == 0
        rows = list(csv.DictReader(open(tmp_path / "table3.csv")))
        assert [int(r["key"]) for r in rows] == list(range(30, 101, 10))
        assert all(float(r["mean_value"]) == 2 * int(r["key"]) and float(r["std_dev"]) == 0 for r in rows)

    def test_reproduce_banner(self, tmp_path, capsys):
        code, _, err = run(["reproduce", "--table", "1", "--reps", "2", "--out", str(tmp_path)], capsys)
        assert code == 0 and "hop:2" in err
        assert (tmp_path / "table1.csv").exists()

    def test_sweep_plan_file(self, tmp_path, capsys):
        plan = {"family": "ws", "sizes": [60], "p_grid": [0.0, 0.1, 0.2, 0.3], "k": 4, "m": 1,
                "metric": "hop:2", "repetitions": 3, "master_seed": 5}
        (tmp_path / "plan.json").write_text(json.dumps(plan))
        out = tmp_path / "s.csv"
        code, _, _ = run(["sweep", "--plan", str(tmp_path / "plan.json"), "--out", str(out), "--json"], capsys)
        assert code == 0
        assert out.read_text().startswith("key,mean_value,std_dev,zipf,metcalfe,ratio\n0.0,")
        assert json.loads((tmp_path / "s.json").read_text())["key"] == "p"
        assert set(json.loads((tmp_path / "s_fit.json").read_text())) == {"a", "b", "c", "r_squared"}

    def test_sweep_inline_flags_override(self, capsys):
        code, text, _ = run(["sweep", "--family", "ba", "--sizes", "30,40", "--m", "1",
                             "--metric", "degree-sum", "--reps", "2", "--seed", "1"], capsys)
        assert code == 0
        assert text.splitlines()[1].startswith("30,60.0,0.0,")

    def test_fit_quadratic_csv(self, tmp_path, capsys):
        path = tmp_path / "xy.csv"
        path.write_text("".join(f"{x},{3 * x * x + 1}\n" for x in (0, 1, 2, 3)))
        code, text, _ = run(["fit", "--input", str(path), "--model", "quadratic"], capsys)
        fit = json.loads(text)
        assert code == 0 and fit["a"] == pytest.approx(3) and fit["c"] == pytest.approx(1)
        assert set(fit) == {"a", "b", "c", "r_squared"}

    def test_fit_power_law_csv(self, tmp_path, capsys):
        path = tmp_path / "hist.csv"
        path.write_text("degree,count\n1,100\n2,25\n4,6.25\n".replace("6.25", "6"))
        code, text, _ = run(["fit", "--input", str(path), "--model", "power-law"], capsys)
        assert code == 0 and set(json.loads(text)) == {"exponent", "log_coefficient", "r_squared"}

    def test_fit_degenerate(self, tmp_path, capsys):
        path = tmp_path / "xy.csv"
        path.write_text("0,1\n1,2\n")
        code, text, err = run(["fit", "--input", str(path), "--model", "quadratic"], capsys)
        assert code == 1 and text == "" and "distinct" in err

    def test_no_partial_output(self, tmp_path, capsys, monkeypatch):

        def boom(*a, **k):
            raise ValueError("render failed")

        monkeypatch.setattr("netvalue.plotting.sweep_svg", boom)
        code, _, _ = run(["reproduce", "--table", "3", "--svg", "--out", str(tmp_path)], capsys)
        assert code == 1
        assert list(tmp_path.iterdir()) == []


def test_module_entry_point(tmp_path):
    out = tmp_path / "g.json"
    proc = subprocess.run([sys.executable, "-m", "netvalue", "generate", "--model", "random",
                           "--n", "12", "--prob", "0.5", "--seed", "3", "--out", str(out)],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert Graph.from_json(out.read_text()).n == 12

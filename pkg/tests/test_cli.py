import json
import subprocess
import sys

import pytest

from starb.cli import main, parse_graph_spec, run, InputError
from starb.graph import complete_bipartite, cycle, path, star


def strip_time(report):
    return {k: v for k, v in report.items() if k != "timestamp"}


def test_graph_specs():
    assert parse_graph_spec("path:8") == path(8)
    assert parse_graph_spec("kbipartite:3,5") == complete_bipartite(3, 5)
    assert parse_graph_spec("edges:3:0-1,1-2") == path(3)
    assert parse_graph_spec("star:3") == star(3)
    with pytest.raises(InputError):
        parse_graph_spec("blob:3")


def test_exact_sb(capsys):
    status, report = run(["exact", "sb", "--graph", "path:8"])
    assert status == 0
    assert report["results"]["value"] == 4
    assert "4" in capsys.readouterr().out


def test_check_star_exit_codes():
    assert run(["check-star", "--graph", "cycle:4", "--coloring", "1-2-1-2"])[0] == 1
    assert run(["check-star", "--graph", "cycle:5", "--coloring", "1-4-2-3-4"])[0] == 0


def test_input_errors_exit_two(tmp_path):
    assert run(["exact", "sb", "--graph", "nonsense"])[0] == 2
    assert run(["check-star", "--graph", "path:3", "--coloring", "1-2"])[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n0 0\n")
    assert run(["exact", "sb", "--input", str(bad)])[0] == 2
    assert run(["degree", "--graph", "cycle:5", "--method", "matching", "--vertex", "0"])[0] == 2


def test_budget_exhaustion_exit_one(capsys):
    status, report = run(["exact", "sb", "--graph", "cycle:12", "--budget", "100"])
    assert status == 1
    assert report["results"]["unknown"] is True
    assert "bounds:" in capsys.readouterr().out


def test_file_input(tmp_path):
    f = tmp_path / "c5.col"
    f.write_text("p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n")
    status, report = run(["exact", "sb", "--input", str(f)])
    assert status == 0 and report["results"]["value"] == 4


def test_json_is_deterministic(tmp_path):
    out = tmp_path / "r.json"
    reports = []
    for _ in range(2):
        assert run(["exact", "chain", "--graph", "cycle:5", "--json", str(out)])[0] == 0
        reports.append(strip_time(json.loads(out.read_text())))
    assert reports[0] == reports[1]
    assert reports[0]["input_digest"]
    assert reports[0]["results"]["holds"] is True


@pytest.mark.parametrize("argv", [
    ["blocked", "--graph", "cycle:5", "--coloring", "1-4-2-3-4"],
    ["eliminate", "--graph", "cycle:5", "--coloring", "1-4-2-3-4"],
    ["heuristic", "--graph", "cycle:9", "--policy", "random", "--seed", "2"],
    ["exact", "join", "--graph", "complete:1", "--with-graph", "cycle:4", "--cross-check"],
    ["degree", "--graph", "path:7"],
    ["msdeg", "--graph", "tgap:2"],
    ["family", "cycle", "--n", "9", "--emit-witness", "--verify"],
    ["verify-paper", "--only", "1,5"],
])
def test_commands_succeed(argv):
    assert run(argv)[0] == 0


def test_eliminate_reports_minimality():
    status, report = run(["eliminate", "--graph", "path:3", "--coloring", "1-2-3"])
    assert status == 0 and report["results"]["minimal"] is False
    status, report = run(["eliminate", "--graph", "cycle:5", "--coloring", "1-4-2-3-4"])
    assert status == 0 and report["results"]["minimal"] is True


def test_main_and_module_entry():
    assert main(["family", "path", "--n", "23"]) == 0
    proc = subprocess.run(
        [sys.executable, "-m", "starb", "exact", "s", "--graph", "path:4"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and "3" in proc.stdout

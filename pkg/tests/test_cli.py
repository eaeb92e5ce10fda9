import json
import subprocess
import sys

import pytest

from conndom.cli import main
from conndom.families import gen_path
from conndom.graph import parse_graph6, write_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def p8_file(tmp_path):
    f = tmp_path / "p8.g6"
    f.write_text(write_graph6(gen_path(8)) + "\n")
    return str(f)


def test_solve_p8(capsys, p8_file):
    code, out, err = run(capsys, "solve", "--input", p8_file, "--what", "both")
    assert code == 0 and out.strip() == "gamma=3 gamma_c=6" and err == ""


def test_solve_json_and_stdin(capsys, monkeypatch, p8_file):
    code, out, _ = run(capsys, "solve", "--input", p8_file, "--format", "json")
    d = json.loads(out)
    assert d["gamma"] == 3 and d["gamma_c_witness"] == [1, 2, 3, 4, 5, 6]
    monkeypatch.setattr(sys, "stdin", open(p8_file))
    code, out, _ = run(capsys, "solve", "--input", "-", "--what", "gamma")
    assert code == 0 and out.strip() == "gamma=3"


def test_solve_edge_list_input(capsys, tmp_path):
    f = tmp_path / "c4.txt"
    f.write_text("4 4\n0 1\n1 2\n2 3\n3 0\n")
    code, out, _ = run(capsys, "solve", "--input", str(f))
    assert code == 0 and out.strip() == "gamma=2 gamma_c=2"


def test_gen_g4(capsys):
    code, out, _ = run(capsys, "gen", "--family", "G:4", "--format", "graph6")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 1 and parse_graph6(lines[0]).n == 16


def test_free(capsys):
    code, out, _ = run(capsys, "free", "--family", "path:9", "--pattern", "P9,C9,H")
    assert code == 0 and out.strip() == "member=false witness=P9:0,1,2,3,4,5,6,7,8"
    code, out, _ = run(capsys, "free", "--family", "F:3", "--pattern", "P6,C6", "--format", "json")
    assert json.loads(out)["member"] is True


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "--family", "H:3", "--theorem", "p8c8")
    assert code == 0 and out.strip().endswith("size=6 bound=6")
    code, out, _ = run(capsys, "construct", "--family", "F:2", "--theorem", "p6c6", "--trace")
    d = json.loads(out)
    assert d["theorem"] == "p6c6" and d["satisfied"] and len(d["final"]) == 4


def test_construct_outside_class(capsys):
    code, out, err = run(capsys, "construct", "--family", "path:6", "--theorem", "p6c6")
    assert code == 2 and out == "" and "P6" in err


def test_verify_observation1(capsys):
    code, out, _ = run(capsys, "verify", "--check", "observation1", "--enumerate", "6", "--workers", "1")
    assert code == 0 and out.startswith("observation1: PASS examined=26704")


def test_verify_csv_and_input(capsys, tmp_path):
    f = tmp_path / "corpus.g6"
    f.write_text("\n".join(write_graph6(gen_path(n)) for n in range(1, 9)) + "\n")
    code, out, _ = run(capsys, "verify", "--check", "theorem3", "--input", str(f), "--format", "csv",
                       "--workers", "1")
    assert code == 0
    assert out.splitlines()[-1].startswith("#summary,,,,,check=theorem3;examined=8;skipped=0;members=7")


def test_verify_violation_exit_code(capsys, monkeypatch, tmp_path):
    import conndom.harness as H
    monkeypatch.setitem(H.CLASS_OF_CHECK, "conjecture1", None)
    f = tmp_path / "p9.g6"
    f.write_text(write_graph6(gen_path(9)) + "\n")
    code, out, _ = run(capsys, "verify", "--check", "conjecture1", "--input", str(f), "--workers", "1")
    assert code == 1 and write_graph6(gen_path(9)) in out


def test_report(capsys):
    code, out, _ = run(capsys, "report", "--max-k", "2", "--format", "csv")
    header = out.splitlines()[0].split(",")
    assert code == 0 and header[:6] == ["family", "param", "n", "gamma", "gamma_c", "ratio"]


@pytest.mark.parametrize("argv", [
    [],
    ["solve"],
    ["solve", "--input", "/nonexistent"],
    ["gen", "--family", "Q:1"],
    ["verify", "--check", "nope", "--enumerate", "3"],
    ["verify", "--check", "observation1", "--enumerate", "12"],
    ["verify", "--check", "observation1"],
    ["free", "--family", "path:3", "--pattern", "Z9"],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err


def test_bad_graph6_reports_line(capsys, tmp_path):
    f = tmp_path / "bad.g6"
    f.write_text("A_\nA?\nAb\n")
    code, _, err = run(capsys, "solve", "--input", str(f))
    assert code == 2 and "line 3" in err


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "conndom", "gen", "--family", "cycle:5"],
                       capture_output=True, text=True, check=False)
    assert r.returncode == 0 and r.stdout.strip() == "Dhc"


def test_verify_all_reads_stdin_once(capsys, monkeypatch):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO("A_\nBw\n"))
    code, out, _ = run(capsys, "verify", "--check", "all", "--input", "-", "--workers", "1", "--starts", "5")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 6 and all("examined=2" in ln for ln in lines)

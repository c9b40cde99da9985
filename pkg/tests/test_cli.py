import json

import pytest

from satpatterns.cli import main
from satpatterns.frontend.dimacs import parse_dimacs
from satpatterns.symmetry import canonical_form


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def test_verify_paper(capsys):
    assert main(["verify-paper"]) == 0
    out = capsys.readouterr().out
    assert "reproduced" in out and "FAIL" not in out


def test_check_exit_codes(write, capsys):
    assert main(["check", write("sat.cnf", "p cnf 2 1\n1 2 0\n")]) == 0
    assert "s SATISFIABLE" in capsys.readouterr().out
    assert main(["check", "--brute-force", write("unsat.cnf", "p cnf 1 2\n1 0\n-1 0\n")]) == 20
    assert "s UNSATISFIABLE" in capsys.readouterr().out
    assert main(["check", "--formula", write("f.txt", "~a & ~b & ~c & (a|b) & (a|c) & (b|c)")]) == 20


def test_check_errors(write, capsys):
    assert main(["check", write("bad.cnf", "p cnf 4 1\n1 2 3 4 0\n")]) == 2
    assert "error" in capsys.readouterr().err
    assert main(["check", "/nonexistent/file.cnf"]) == 2
    assert main(["check"]) == 2
    assert main(["frobnicate"]) == 2


def test_patterns(write, capsys):
    p1 = write("p1.cnf", "p cnf 1 2\n1 0\n-1 0\n")
    assert main(["patterns", p1]) == 0
    assert "Pattern1" in capsys.readouterr().out
    assert main(["patterns", "--json", p1]) == 0
    assert json.loads(capsys.readouterr().out) == {"matched": True, "witnesses": [{"kind": "Pattern1", "variables": [1]}]}
    assert main(["patterns", write("none.cnf", "p cnf 2 1\n1 2 0\n")]) == 1
    assert capsys.readouterr().out == "no pattern\n"
    assert main(["patterns", "--json", "--formula", write("f.txt", "q & ~q")]) == 0
    assert json.loads(capsys.readouterr().out)["witnesses"][0]["names"] == ["q"]


def test_classify_multiple_files_in_order(write, capsys):
    a = write("a.cnf", "p cnf 1 1\n1 0\n")
    b = write("b.cnf", "p cnf 3 6\n-1 0\n-2 0\n-3 0\n1 2 0\n1 3 0\n2 3 0\n")
    assert main(["classify", a, b]) == 0
    lines = [json.loads(l) for l in capsys.readouterr().out.splitlines()]
    assert [l["source"] for l in lines] == [a, b]
    assert [l["quadrant"] for l in lines] == ["SatPatternFree", "UnsatPatternFree"]


def test_classify_reports_bad_file_and_continues(write, capsys):
    good = write("g.cnf", "p cnf 1 1\n1 0\n")
    assert main(["classify", write("bad.cnf", "garbage"), good]) == 2
    captured = capsys.readouterr()
    assert len(captured.out.splitlines()) == 1 and "bad.cnf" in captured.err


def test_mine_one_variable_is_empty(capsys):
    assert main(["mine", "--max-vars", "1", "--max-clauses", "2", "--quadrant", "unsat-pattern-free"]) == 0
    assert capsys.readouterr().out == ""


def test_mine_emits_dimacs(capsys):
    assert main(["mine", "--max-vars", "2", "--max-clauses", "4", "--quadrant", "unsat-pattern-free"]) == 0
    lines = [json.loads(l) for l in capsys.readouterr().out.splitlines()]
    assert len(lines) == 5
    for line in lines:
        inst = parse_dimacs(line["dimacs"])
        assert canonical_form(inst) == inst
        assert line["quadrant"] == "UnsatPatternFree"


def test_mine_bounds_guard(capsys):
    assert main(["mine", "--max-vars", "9", "--max-clauses", "2"]) == 2
    assert "max_vars" in capsys.readouterr().err


def test_gen(capsys):
    assert main(["gen", "--vars", "5", "--clauses", "8", "--seed", "3"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "--vars", "5", "--clauses", "8", "--seed", "3"]) == 0
    assert capsys.readouterr().out == first
    assert parse_dimacs(first).num_variables == 5


def test_brute_cap_env(write, monkeypatch, capsys):
    monkeypatch.setenv("PATTERN_SAT_BRUTE_CAP", "2")
    assert main(["check", "--brute-force", write("w.cnf", "p cnf 3 1\n1 2 3 0\n")]) == 2
    assert "PATTERN_SAT_BRUTE_CAP" in capsys.readouterr().err

import csv
import json
import subprocess
import sys

import pytest

from posbraid.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariants_json(capsys):
    code, out, _ = run(capsys, "invariants", "s1^4 s2 s1^3 s2^2", "--json")
    d = json.loads(out)
    assert code == 0
    assert (d["genus"], d["abs_signature"], d["components"]) == (4, 6, 1)
    assert d["alexander"]["coeffs"] == [1, -1, 0, 2, -3, 2, 0, -1, 1]


def test_invariants_text(capsys):
    code, out, _ = run(capsys, "invariants", "s1^3")
    assert code == 0
    assert "genus: 1" in out and "alexander: 1 -1 1" in out


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "s1^3 s2^3 s1^3 s2^3", "--json")
    d = json.loads(out)
    assert code == 0
    assert d["g4"] == {"exact": 4} and d["method"] == "sigma_gap_one"
    assert d["certificate_verified"] is True


def test_classify_composite(capsys):
    code, out, _ = run(capsys, "classify", "s1^4 s2 s1^3 s2^2 s3 s4^3", "--json")
    d = json.loads(out)
    assert code == 0
    assert d["g"] == 5 and d["summands"] == ["s1^4 s2 s1^3 s2^2", "s1^3"]
    assert d["certificate_verified"] is True


@pytest.mark.parametrize("argv", [["classify", "s1^2"], ["invariants", "s0"],
                                  ["invariants", "s1^2 s3^2"], ["bogus"], ["census"],
                                  ["tree", "(()"], ["search-trivial", "s1^3", "--bound", "9"],
                                  ["census", "--strands", "9", "--crossings", "4"]])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_minors(capsys):
    code, out, _ = run(capsys, "minors", "s1^2 s2^3 s1^2 s2^2", "--json")
    d = json.loads(out)
    assert code == 0 and d["verified"] is True
    assert d["certificate"]["pattern"] == "Xtilde"
    code, out, _ = run(capsys, "minors", "s1^5", "--json")
    assert code == 0 and json.loads(out)["certificate"] is None


def test_tree(capsys):
    code, out, _ = run(capsys, "tree", "(())", "--json")
    d = json.loads(out)
    assert code == 0 and d["genus"] == 1 and d["classification"]["g4"] == {"exact": 1}
    code, out, _ = run(capsys, "tree", "((()))", "--json")
    assert code == 0 and json.loads(out)["classification"] is None


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "s1^2 s2 s1 s2", "--json")
    d = json.loads(out)
    assert code == 0 and d["reduced"] == "s1^4"
    code, out, _ = run(capsys, "reduce", "s1 s2^2 s1 s2^2", "--json")
    assert json.loads(out)["reduced"] is None


def test_search_trivial(capsys):
    code, out, _ = run(capsys, "search-trivial", "s1^2 s2^2 s1 s3 s2^2 s3", "--bound", "2",
                       "--json")
    d = json.loads(out)
    assert code == 0 and len(d["basis"]) == 6 and len(d["basis"][0]) == 2
    code, out, _ = run(capsys, "search-trivial", "s1^3", "--bound", "3", "--json")
    assert code == 0 and json.loads(out)["basis"] is None


def test_census_csv_to_file(capsys, tmp_path):
    target = tmp_path / "c.csv"
    code, _, err = run(capsys, "census", "--strands", "3", "--crossings", "8", "--knots",
                       "--prime", "--format", "csv", "--out", str(target))
    assert code == 0 and "records written" in err
    rows = list(csv.DictReader(target.open()))
    assert rows and all(r["b"] == "1" for r in rows)


def test_census_json_stdout(capsys):
    code, out, _ = run(capsys, "census", "--strands", "2", "--crossings", "5")
    assert code == 0
    assert [r["word"] for r in json.loads(out)["records"]] == ["s1^2", "s1^3", "s1^4", "s1^5"]


def test_verify_paper_small(capsys):
    code, out, _ = run(capsys, "verify-paper", "--strands", "3", "--crossings", "10")
    lines = out.splitlines()
    assert sum(l.startswith("PASS table") for l in lines) == 10
    assert sum(l.startswith("PASS example") for l in lines) == 4
    assert any(l.startswith("PASS T(5,6)") for l in lines)
    assert "PASS maximal classes: 6 classes" in out
    assert code == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "posbraid.cli", "invariants", "s1^3", "--json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["genus"] == 1

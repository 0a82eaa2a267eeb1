import csv
import io
import json

import pytest

from circperm import formulas
from circperm.cli import main
from circperm.model import Pattern


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestCount:
    def test_all_methods_match(self):
        code, out, _ = run("count", "--pattern", "1324", "--n", "5", "--method", "all")
        assert code == 0
        assert out.splitlines() == ["formula: 13", "recurrence: 13", "brute: 13", "match"]

    def test_n1(self):
        code, out, _ = run("count", "--pattern", "1342", "--n", "1")
        assert (code, out) == (0, "formula: 1\n")

    def test_long_pattern_brute_only(self):
        code, out, _ = run("count", "--pattern", "12345", "--method", "brute", "--n", "7")
        assert code == 0 and out.startswith("brute: ")

    def test_long_pattern_formula_refused(self):
        code, _, err = run("count", "--pattern", "12345", "--n", "7")
        assert code == 2 and "unsupported" in err

    def test_brute_cap(self):
        code, _, err = run("count", "--pattern", "1234", "--n", "10", "--method", "brute")
        assert code == 3 and "--max-brute-n" in err
        code, _, _ = run("count", "--pattern", "1234", "--n", "10", "--method", "brute", "--max-brute-n", "12")
        assert code == 3

    def test_raised_cap(self):
        code, out, _ = run("count", "--pattern", "1234", "--n", "10", "--method", "brute", "--max-brute-n", "10")
        assert (code, out) == (0, "brute: 885\n")

    def test_bad_pattern(self):
        code, _, _ = run("count", "--pattern", "1335", "--n", "4")
        assert code == 2

    def test_mismatch_exit(self, monkeypatch):
        closed, rec, strat = formulas.FAMILIES[Pattern("1324")]
        monkeypatch.setitem(formulas.FAMILIES, Pattern("1324"), (lambda n: closed(n) + 1, rec, strat))
        code, out, _ = run("count", "--pattern", "1324", "--n", "5", "--method", "all")
        assert code == 1 and "MISMATCH" in out


class TestTable:
    def test_csv(self):
        code, out, _ = run("table", "--patterns", "1234,1324,1342", "--n-max", "6", "--format", "csv")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 18
        assert list(rows[0]) == ["n", "pattern", "formula", "brute", "match"]
        row = next(r for r in rows if r["pattern"] == "1324" and r["n"] == "6")
        assert row["formula"] == row["brute"] == "34" and row["match"] == "true"

    def test_b_file(self):
        code, out, _ = run("table", "--patterns", "1342", "--n-max", "4", "--format", "b-file")
        assert code == 0
        assert out.splitlines() == ["1 1", "2 1", "3 2", "4 5"]

    def test_single_row(self):
        code, out, _ = run("table", "--patterns", "1234", "--n-max", "1", "--format", "json")
        assert json.loads(out) == [{"n": 1, "pattern": "1234", "formula": 1, "brute": 1, "match": True}]

    def test_csv_json_agree(self):
        _, c, _ = run("table", "--patterns", "1234,1342", "--n-max", "7", "--format", "csv")
        _, j, _ = run("table", "--patterns", "1234,1342", "--n-max", "7", "--format", "json")
        from_csv = [(int(r["n"]), r["pattern"], int(r["formula"]), int(r["brute"]), r["match"] == "true")
                    for r in csv.DictReader(io.StringIO(c))]
        from_json = [(r["n"], r["pattern"], r["formula"], r["brute"], r["match"]) for r in json.loads(j)]
        assert from_csv == from_json

    def test_brute_beyond_cap_left_blank(self):
        _, out, _ = run("table", "--patterns", "1324", "--n-max", "10", "--format", "json")
        rows = json.loads(out)
        assert rows[-1]["brute"] is None and rows[-1]["match"] is False
        assert rows[-1]["formula"] == formulas.fib(17)

    def test_deterministic(self):
        a = run("table", "--patterns", "1234,1324", "--n-max", "7", "--format", "json")
        b = run("table", "--patterns", "1234,1324", "--n-max", "7", "--format", "json")
        assert a == b

    def test_output_file(self, tmp_path):
        path = tmp_path / "t.b"
        code, out, _ = run("table", "--patterns", "1342", "--n-max", "4", "--format", "b-file",
                           "--output", str(path))
        assert code == 0 and out == ""
        assert path.read_text() == "1 1\n2 1\n3 2\n4 5\n"

    def test_unwritable(self, tmp_path):
        code, _, _ = run("table", "--patterns", "1342", "--n-max", "3", "--output",
                         str(tmp_path / "missing" / "x.csv"))
        assert code == 4

    def test_b_file_single_pattern(self):
        code, _, _ = run("table", "--patterns", "1234,1342", "--n-max", "3", "--format", "b-file")
        assert code == 2


class TestVerify:
    def test_small(self):
        code, out, _ = run("verify", "--n-max", "4")
        assert code == 0
        assert out.splitlines()[-1].startswith("all suites passed")

    def test_corrupted_formula(self, monkeypatch):
        closed, rec, strat = formulas.FAMILIES[Pattern("1342")]
        monkeypatch.setitem(formulas.FAMILIES, Pattern("1342"), (lambda n: closed(n) + (n == 4), rec, strat))
        code, out, _ = run("verify", "--n-max", "5")
        assert code == 1
        assert "FAIL formula-vs-oracle" in out

    def test_refuses_above_cap(self):
        code, _, _ = run("verify", "--n-max", "10")
        assert code == 3


class TestBijection:
    def test_prop1(self):
        code, out, _ = run("bijection", "prop1", "forward", "0111010")
        assert code == 0
        assert out.splitlines()[0] == "1 8 7 6 2 5 3 4"
        code, out, _ = run("bijection", "prop1", "inverse", "1 8 7 6 2 5 3 4")
        assert out.strip() == "0111010"

    def test_thm2(self):
        code, out, _ = run("bijection", "thm2", "forward", "110")
        assert code == 0 and out.splitlines()[0] == "2 3 1 4"
        assert "avoids 1342: yes" in out
        code, out, _ = run("bijection", "thm2", "inverse", "2314")
        assert out.strip() == "110"

    def test_thm2_rejects_single_one(self):
        code, _, err = run("bijection", "thm2", "forward", "100")
        assert code == 2 and "exactly one 1" in err

    def test_thm1(self):
        code, out, _ = run("bijection", "thm1", "forward", "0010")
        assert code == 0 and out.splitlines()[0] == "2 3 1 4"
        code, out, _ = run("bijection", "thm1", "inverse", "2 3 1 4")
        assert out.strip() == "0010"

    def test_inverse_rejects_containing(self):
        code, _, _ = run("bijection", "prop1", "inverse", "213")
        assert code == 2


class TestClasses:
    def test_k4(self):
        code, out, _ = run("classes", "--k", "4")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("6 rotation orbits")
        assert "3 classes up to rotation and reversal" in lines
        labels = [ln.split("[")[1].rstrip("]") for ln in lines if ln.startswith("class")]
        assert sorted(labels) == ["1234", "1324", "1342"]

    def test_k3(self):
        _, out, _ = run("classes", "--k", "3")
        assert out.startswith("2 rotation orbits")

    def test_k1(self):
        _, out, _ = run("classes", "--k", "1")
        assert out.startswith("1 rotation orbits")

    def test_out_of_range(self):
        assert run("classes", "--k", "7")[0] == 2


def test_occurrences():
    code, out, _ = run("occurrences", "--word", "5642317", "--pattern", "1234", "--witnesses")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "1"
    assert lines[1].endswith("letters 2 3 5 6")


def test_occurrences_noncanonical_input():
    code, out, _ = run("occurrences", "--word", "7564231", "--pattern", "1234")
    assert (code, out) == (0, "1\n")


def test_list():
    code, out, _ = run("list", "--pattern", "123", "--n", "3")
    assert (code, out) == (0, "2 1 3\n")


@pytest.mark.parametrize("argv", [["count", "--n", "3"], ["nope"]])
def test_argparse_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv, out=io.StringIO(), err=io.StringIO())
    assert exc.value.code == 2

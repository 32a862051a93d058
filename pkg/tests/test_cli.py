import json
import subprocess
import sys

import pytest

from cominrule.cli import main
from cominrule.schubert import CoeffTable, full_table


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def test_coeff(capsys):
    assert run(capsys, "coeff", "--space", "Gr:4,7", "--lam", "3,1", "--mu", "2,1", "--nu", "4,2,1")[:2] == (0, "2\n")
    rc, out, _ = run(capsys, "coeff", "--space", "E7", "--lam", "1,1,1,2,5,3", "--mu", "1,1,1,2,1",
                     "--nu", "1,1,1,2,5,5,2,1,1", "--json")
    assert rc == 0 and json.loads(out)["c"] == 4


def test_coeff_naive_agrees(capsys):
    args = ["coeff", "--space", "LG:4", "--lam", "2,1", "--mu", "2,1", "--nu", "4,2"]
    assert run(capsys, *args)[1] == run(capsys, *args, "--naive")[1] == "4\n"


def test_structural_zero(capsys):
    args = ["coeff", "--space", "E6", "--lam", "1", "--mu", "1", "--nu", "1,1,1"]
    rc, out, _ = run(capsys, *args, "--json")
    assert rc == 0 and json.loads(out) == {**json.loads(out), "c": 0, "structural_zero": True}
    rc, _, err = run(capsys, *args, "--strict")
    assert rc == 1 and "structural zero" in err


@pytest.mark.parametrize("argv,code", [
    (["coeff", "--space", "LG:4", "--lam", "5", "--mu", "1", "--nu", "1"], 1),
    (["coeff", "--space", "G2", "--lam", "1", "--mu", "1", "--nu", "1"], 2),
    (["coeff", "--space", "Gr:5,3", "--lam", "1", "--mu", "1", "--nu", "1"], 2),
    (["coeff", "--space", "E6"], 2),
    (["frobnicate"], 2),
    (["shapes", "--space", "E6", "--threads", "0"], 2),
    (["syt", "--space", "E6", "--outer", "1", "--inner", "1,1"], 1),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_shapes_feed_coeff(capsys):
    rc, out, _ = run(capsys, "shapes", "--space", "QD:5", "--size", "4")
    shapes = out.split()
    assert rc == 0 and sorted(shapes) == ["(1,1,1,1)", "(1,1,2)"]
    for s in shapes:
        assert run(capsys, "coeff", "--space", "QD:5", "--lam", s, "--mu", "()", "--nu", s)[1] == "1\n"
    rc, out, _ = run(capsys, "shapes", "--space", "E7", "--json")
    assert len(json.loads(out)) == 56


def test_expand(capsys):
    rc, out, _ = run(capsys, "expand", "--space", "QD:5", "--lam", "1,1,2", "--mu", "1,1,2")
    assert json.loads(out) == {"(1,1,2,2,1,1)": 1}
    rc, out, _ = run(capsys, "expand", "--space", "QD:5", "--lam", "1,1,2", "--mu", "1,1,1,1")
    assert json.loads(out) == {}


def test_syt(capsys):
    assert run(capsys, "syt", "--space", "Gr:4,7", "--outer", "4,2,1", "--inner", "3,1", "--count")[1] == "6\n"
    rc, out, _ = run(capsys, "syt", "--space", "LG:4", "--outer", "4,2", "--inner", "2,1", "--json")
    assert len(json.loads(out)) == 2
    rc, out, _ = run(capsys, "syt", "--space", "E6", "--outer", "full", "--limit", "1")
    assert rc == 0 and out.strip()


def test_rectify_file(capsys, tmp_path):
    f = tmp_path / "t.json"
    f.write_text(json.dumps({"space": "Gr:3,7", "inner": "(2,1)", "outer": "(3,3,2)",
                             "labels": [[3, 1, 1], [2, 2, 2], [3, 2, 3], [1, 3, 4], [2, 3, 5]]}))
    for order in ("max", "min", "random"):
        rc, out, _ = run(capsys, "rectify", str(f), "--json", "--order", order)
        d = json.loads(out)
        assert rc == 0 and d["outer"] == "(3,2)" and d["inner"] == "()"
        assert sorted(d["labels"]) == [[1, 1, 1], [1, 2, 2], [1, 3, 4], [2, 1, 3], [2, 2, 5]]


def test_rectify_bad_files(capsys, tmp_path):
    f = tmp_path / "bad.json"
    f.write_text(json.dumps({"space": "Gr:3,7", "labels": [[1, 2, 1], [1, 1, 2]]}))
    assert run(capsys, "rectify", str(f))[0] == 1
    f.write_text("{not json")
    assert run(capsys, "rectify", str(f))[0] == 2
    assert run(capsys, "rectify", str(tmp_path / "missing.json"))[0] == 2
    f.write_text(json.dumps({"space": "Gr:3,7", "outer": "(3)", "labels": [[1, 1, 1]]}))
    assert run(capsys, "rectify", str(f))[0] == 1


def test_verify(capsys):
    rc, out, _ = run(capsys, "verify", "--space", "LG:3", "--suite", "axioms")
    assert rc == 0 and "PASS" in out
    rc, out, _ = run(capsys, "verify", "--space", "LG:3", "--suite", "axioms", "--corrupt", "--json")
    assert rc == 3 and json.loads(out)["violations"]
    assert run(capsys, "verify", "--space", "E6", "--suite", "oracle")[0] == 1
    assert run(capsys, "verify", "--suite", "axioms")[0] == 2
    rc, out, _ = run(capsys, "verify", "--space", "Gr:2,4", "--suite", "all", "--trials", "20")
    assert rc == 0 and "oracle on Gr:2,4: PASS" in out
    rc, out, _ = run(capsys, "verify", "--suite", "isomorphism")
    assert rc == 0


def test_table_round_trip(capsys, tmp_path):
    out_file = tmp_path / "e6.csv"
    assert run(capsys, "table", "--space", "E6", "--format", "csv", "--output", str(out_file))[0] == 0
    assert CoeffTable.from_csv("E6", out_file.read_text()) == full_table("E6")
    rc, out, _ = run(capsys, "table", "--space", "QB:4", "--threads", "1")
    assert CoeffTable.from_json("QB:4", out) == full_table("QB:4")
    assert run(capsys, "table", "--space", "E7", "--bound", "10")[0] == 1


def test_poset(capsys):
    rc, out, _ = run(capsys, "poset", "--space", "LG:3")
    assert rc == 0 and "*" in out and "6 boxes" in out
    rc, out, _ = run(capsys, "poset", "--space", "E7", "--json")
    d = json.loads(out)
    assert len(d["boxes"]) == 27 and d["node"] == 7


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "cominrule", "coeff", "--space", "QB:4", "--lam", "1,1",
                        "--mu", "1,1", "--nu", "1,1,1,1"], capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout == "2\n"

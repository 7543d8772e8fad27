import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from youngrmt import cli
from youngrmt.experiments import dhw_distance


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("shape, value", [("2,2", 2), ("5", 1), ("3,1", 3)])
def test_count(capsys, shape, value):
    code, out, _ = run(capsys, "count", shape)
    assert code == 0
    lines = dict(line.split(" ", 1) for line in out.splitlines())
    assert lines["hook_count"] == lines["det_count"] == lines["path_count"] == str(value)


def test_count_large_shape_skips_brute_force(capsys):
    code, out, _ = run(capsys, "count", "10,9,8")
    assert code == 0
    assert "path_count" not in out


def test_count_disagreement_is_an_error(capsys, monkeypatch):
    monkeypatch.setattr(cli, "det_count", lambda shape, d: 999)
    code, _, err = run(capsys, "count", "2,1")
    assert code == 1 and "disagree" in err


@pytest.mark.parametrize("argv", [["count", "1,2"], ["count", "a"], ["dist", "--n", "4"], ["dist", "--n", "0", "--d", "2"]])
def test_bad_arguments_exit_2(capsys, argv):
    try:
        code = cli.main(argv)
    except SystemExit as exc:
        code = exc.code
    capsys.readouterr()
    assert code == 2


def test_io_error_exit_3(capsys, tmp_path):
    code, _, err = run(capsys, "dist", "--n", "4", "--d", "2", "--out", str(tmp_path / "missing" / "t.csv"))
    assert code == 3


def test_dist_csv(capsys, tmp_path):
    out_file = tmp_path / "t.csv"
    assert cli.main(["dist", "--n", "4", "--d", "2", "--out", str(out_file)]) == 0
    first = out_file.read_bytes()
    rows = list(csv.DictReader(io.StringIO(first.decode())))
    assert len(rows) == 3
    assert sum(Fraction(r["prob_exact"]) for r in rows) == 1
    assert cli.main(["dist", "--n", "4", "--d", "2", "--out", str(out_file)]) == 0
    assert out_file.read_bytes() == first
    code, out, _ = run(capsys, "dist", "--n", "6", "--d", "1")
    assert out.splitlines()[1:] == ["6,1,1,1"]


def test_compare_report_shape(capsys):
    code, out, _ = run(capsys, "compare", "--n", "60", "--d", "3", "--samples", "3000", "--seed", "4")
    assert code == 0
    report = json.loads(out)
    assert set(report) == {"config", "version", "ks", "moments", "runtime_seconds"}
    assert set(report["ks"]) == {"x1", "x2", "x3"}
    assert report["runtime_seconds"] is None
    for side in ("diagram", "gue0"):
        means = [row["mean"] for row in report["moments"][side]]
        assert abs(sum(means)) <= 1e-9


def test_compare_timing_flag(capsys):
    code, out, _ = run(capsys, "compare", "--n", "10", "--d", "2", "--samples", "10", "--timing")
    assert json.loads(out)["runtime_seconds"] >= 0


def test_compare_d2_n1000_ks(capsys):
    code, out, _ = run(capsys, "compare", "--n", "1000", "--d", "2", "--samples", "20000", "--seed", "0")
    ks = json.loads(out)["ks"]["x1"]
    print(f"compare d=2 n=1000 M=2e4 seed=0: KS(x1) = {ks:.4f}")
    assert ks <= 0.05


def test_dhw(capsys):
    code, out, _ = run(capsys, "dhw", "--n", "1000")
    report = json.loads(out)
    assert code == 0
    assert report["support_min"] >= 0
    assert report["sup_distance"] == dhw_distance(1000)
    assert dhw_distance(1000) < dhw_distance(100)


def test_lemma_csv(capsys):
    code, out, _ = run(capsys, "lemma", "--c", "100,1000,10000", "--alpha", "0,1,2")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["alpha"] for r in rows[:3]] == ["0", "1", "2"]
    assert all(r["dominance_ok"] == "true" for r in rows)
    for alpha in "012":
        errs = [float(r["sup_error"]) for r in rows if r["alpha"] == alpha]
        assert errs[0] > errs[1] > errs[2]
    assert float(rows[6]["sup_error"]) <= 5e-3


def test_sample_diagram_d1(capsys):
    code, out, _ = run(capsys, "sample", "diagram", "--n", "7", "--d", "1", "--samples", "20")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 20 and {r["shape"] for r in rows} == {"7"}


def test_sample_gue0_traceless_and_reproducible(capsys):
    code, out, _ = run(capsys, "sample", "gue0", "--d", "4", "--samples", "50", "--seed", "3")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["draw_index", "x1", "x2", "x3", "x4"]
    for r in rows:
        assert abs(sum(float(r[f"x{i}"]) for i in range(1, 5))) <= 1e-9
    _, again, _ = run(capsys, "sample", "gue0", "--d", "4", "--samples", "50", "--seed", "3")
    assert again == out


def test_sample_perm(capsys):
    code, out, _ = run(capsys, "sample", "perm", "--n", "8", "--d", "2", "--samples", "30", "--seed", "1")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 30
    for r in rows:
        assert sorted(map(int, r["permutation"].split())) == list(range(1, 9))
    code, _, err = run(capsys, "sample", "perm", "--d", "2")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "youngrmt", "count", "2,2"], capture_output=True, text=True)
    assert proc.returncode == 0 and "det_count 2" in proc.stdout

import subprocess
import sys

import pytest

from gfcodes.cli import main
from gfcodes.code import read_code_file, weight_distribution
from gfcodes.constructions import paper_example


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def test_analyze_prints_the_sswd_rows(capsys):
    rc, out, _ = run(capsys, "analyze", "ex9_5_3", "--sswd")
    assert rc == 0
    assert "[9,5,3]_2" in out
    assert "A^2: 5:6 6:60 7:36 8:39 9:14" in out
    assert "A^4: 8:9 9:22" in out


def test_analyze_table_puts_next_weight_beside_max(capsys):
    rc, out, _ = run(capsys, "analyze", "golay12_3", "--smax", "2")
    rows = [ln.split() for ln in out.splitlines()[2:]]
    assert rc == 0
    assert rows == [["1", "6", "12", "8", "no", "neither"], ["2", "8", "12", "9", "no", "neither"]]


def test_analyze_csv(capsys, tmp_path):
    p = tmp_path / "c.txt"
    p.write_text("# tiny\n2 2 3\n1 0 1\n0 1 1\n")
    rc, out, _ = run(capsys, "analyze", str(p), "--format", "csv")
    assert rc == 0
    assert out.splitlines()[0] == "s,d_s1,D_s,verdict,condition"


@pytest.mark.parametrize("text", ["2 0 4\n", "", "2 2 3\n1 0 1\n", "2 1 3\n1 x 1\n", "2 1 3\n1 2 1\n"])
def test_bad_code_files_exit_2(capsys, tmp_path, text):
    p = tmp_path / "bad.txt"
    p.write_text(text)
    rc, _, err = run(capsys, "analyze", str(p))
    assert rc == 2 and err.startswith("error:")


def test_unknown_code_reference_exits_2(capsys):
    assert run(capsys, "analyze", "no_such_code")[0] == 2


def test_budget_exceeded_exits_3_with_partial_output(capsys, monkeypatch):
    monkeypatch.setenv("GFCODES_BUDGET", "300")
    rc, out, err = run(capsys, "analyze", "ex12_5_5")
    assert rc == 3
    assert "budget exceeded" in err
    assert out.startswith("code ex12_5_5")


def test_output_does_not_depend_on_workers(capsys):
    one = run(capsys, "analyze", "ex12_5_5", "--sswd", "--smax", "2")
    three = run(capsys, "analyze", "ex12_5_5", "--sswd", "--smax", "2", "--workers", "3")
    assert one == three


def test_construct_ternary_solomon_stiffler(capsys, tmp_path):
    out = tmp_path / "ss.txt"
    assert run(capsys, "construct", "ss", "--q", "3", "--k", "5", "--u", "1,2", "-o", str(out))[0] == 0
    c = read_code_file(out)
    assert (c.n, c.k, c.q) == (116, 5, 3)
    assert min(w for w in weight_distribution(c) if w) == 77
    assert out.read_text().startswith("# ")


def test_construct_ab_violating_extension(capsys, tmp_path):
    out = tmp_path / "abx.txt"
    rc, _, _ = run(capsys, "construct", "abx", "--example", "ss28_5_2", "--s", "2", "--verify", "-o", str(out))
    assert rc == 0
    c = read_code_file(out)
    assert (c.n, c.k) == (37, 5)
    assert min(w for w in weight_distribution(c) if w) == 14


def test_construct_cyclic(capsys):
    rc, out, _ = run(capsys, "construct", "cyclic", "--q", "2", "--n", "85", "--exclude", "37", "--emit", "report")
    assert rc == 0
    assert "[85,8,40]_2" in out


def test_construct_writes_canonical_file(capsys):
    rc, out, _ = run(capsys, "construct", "example", "--name", "ex9_5_3")
    assert rc == 0
    body = [ln for ln in out.splitlines() if not ln.startswith("#")]
    assert body[0] == "2 5 9"
    assert body[1:] == [" ".join(map(str, r)) for r in paper_example("ex9_5_3").source.entries.tolist()]


def test_construct_missing_parameters_exit_2(capsys):
    rc, _, err = run(capsys, "construct", "ss", "--q", "3", "--k", "5")
    assert rc == 2 and "--u" in err
    assert run(capsys, "construct", "abx", "--s", "2")[0] == 2


def test_construct_surfaces_failed_hypothesis(capsys):
    rc, _, err = run(capsys, "construct", "ss", "--q", "2", "--k", "4", "--u", "2,3")
    assert rc == 2 and "exceeds k" in err


def _fano_minus_line(tmp_path):
    p = tmp_path / "fano_minus_line.pts"
    p.write_text("2 3 4\n0 0 1\n1 0 1\n0 1 1\n1 1 1\n")
    return p


def test_blocking_verify_reports_a_witness(capsys, tmp_path):
    rc, out, _ = run(capsys, "blocking", "verify", "--points", str(_fano_minus_line(tmp_path)), "--t", "1", "--s", "1")
    assert rc == 0
    assert "1-fold 1-blocking: false" in out
    assert "witness" in out and "points of B inside: 0" in out


@pytest.mark.parametrize("t", [1, 2, 3, 4])
def test_whole_ternary_plane_blocks_lines(capsys, tmp_path, t):
    pts = [(a, b, 1) for a in range(3) for b in range(3)] + [(a, 1, 0) for a in range(3)] + [(1, 0, 0)]
    p = tmp_path / "pg23.pts"
    p.write_text("3 3 13\n" + "".join(f"{a} {b} {c}\n" for a, b, c in pts))
    rc, out, _ = run(capsys, "blocking", "verify", "--points", str(p), "--t", str(t), "--s", "1")
    assert rc == 0 and out.rstrip().endswith(": true")


def test_blocking_verify_cutting(capsys, tmp_path):
    rc, out, _ = run(capsys, "blocking", "verify", "--points", str(_fano_minus_line(tmp_path)), "--cutting")
    assert rc == 0 and "cutting 1-blocking: false" in out


def test_blocking_bounds(capsys):
    rc, out, _ = run(capsys, "blocking", "bounds", "--t", "3", "--s", "2", "--k", "5", "--q", "2")
    assert rc == 0
    assert "93/7 (>= 14)" in out
    assert "lower bound (t-fold): 15" in out


def test_blocking_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.pts"
    bad.write_text("2 3 2\n1 0 0\n")
    assert run(capsys, "blocking", "verify", "--points", str(bad))[0] == 2
    assert run(capsys, "blocking", "verify")[0] == 2
    assert run(capsys, "blocking", "bounds", "--t", "1")[0] == 2
    assert run(capsys, "blocking", "bounds", "--t", "1", "--s", "3", "--k", "3", "--q", "2")[0] == 2


def test_reproduce_first_table(capsys):
    rc, out, _ = run(capsys, "reproduce", "t1")
    assert rc == 0
    assert out.rstrip().splitlines()[-1].startswith("t1: PASS")


def test_entry_point_runs_as_module():
    r = subprocess.run([sys.executable, "-m", "gfcodes.cli", "blocking", "bounds", "--t", "1", "--s", "1",
                        "--k", "3", "--q", "2"], capture_output=True, text=True)
    assert r.returncode == 0
    assert "lower bound (t-fold): 3" in r.stdout

import csv
import json
import subprocess
import sys

import pytest

from queens_spectra import cli, harness
from queens_spectra.exact import CertStatus, SizeGuardError
from queens_spectra.harness import (
    ConjectureReport,
    check_conjecture,
    claimed_multiplicity,
    integer_spectrum_exact,
    known_eigenvectors,
    run_range,
    verify_families,
)


def labels(report, pred):
    return [m.label for m in report.members if pred(m)]


def test_verify_families_n11():
    report = verify_families(11)
    assert report.ok, report.failures()
    checked_e = {m.eigenvalue for m in report.members if m.label.startswith("E[") and m.nonzero}
    assert checked_e == {-3, -2, -1, 0, 3, 4, 5, 6, 7}
    assert {f.name: f.size for f in report.families} == {"basis_minus4": 64, "n_minus_4": 6}


def test_verify_families_n4_skips_e():
    report = verify_families(4)
    assert report.ok
    assert not labels(report, lambda m: m.label.startswith("E["))
    assert {f.name: f.size for f in report.families} == {"basis_minus4": 1, "n_minus_4": 1}


def test_verify_families_n9_reports_zero_members():
    report = verify_families(9)
    assert report.ok
    assert labels(report, lambda m: not m.nonzero) == ["E[9,0]", "E[9,1]"]


def test_verify_families_n3():
    report = verify_families(3)
    assert report.ok
    assert [f.size for f in report.families] == [2]


def test_verify_families_flags_failures(monkeypatch):
    monkeypatch.setattr(harness, "is_eigenvector", lambda g, v, lam: False)
    report = verify_families(5)
    assert not report.ok
    assert "X_BLOCK[5,1,1]" in report.failures()


def test_known_eigenvectors():
    assert len(known_eigenvectors(6, -4)) == 9
    assert len(known_eigenvectors(6, 2)) == 2
    assert len(known_eigenvectors(7, 1)) == 1
    assert known_eigenvectors(7, 0) == []
    assert known_eigenvectors(2, -2) == []


@pytest.mark.parametrize("n, expected", [
    (1, {0: 1}),
    (4, {-4: 1, 0: 1}),
    (5, {-4: 4, -3: 1, 0: 1, 1: 3}),
])
def test_integer_spectrum_exact(n, expected):
    found = integer_spectrum_exact(n)
    assert {lam: c.upper for lam, c in found} == expected
    if n >= 4:
        assert all(c.status is CertStatus.CERTIFIED for _, c in found)


def test_integer_spectrum_guard():
    with pytest.raises(SizeGuardError):
        integer_spectrum_exact(33)
    with pytest.raises(ValueError):
        integer_spectrum_exact(0)


def test_integer_spectrum_parallel_matches_serial():
    assert integer_spectrum_exact(5, jobs=2) == integer_spectrum_exact(5)


def test_claimed_multiplicity():
    assert claimed_multiplicity(11, -4) == 64
    assert claimed_multiplicity(11, 7) == 6
    assert claimed_multiplicity(10, 6) == 4
    assert claimed_multiplicity(11, 3) == 1


def test_check_conjecture_n10():
    r = check_conjecture(10)
    assert r.predicted == [-4, 6]
    assert r.containment_ok and r.multiplicity_ok and r.no_extra_integers_ok


def test_check_conjecture_n11():
    r = check_conjecture(11)
    assert len(r.predicted) == 10
    mult = {lam: c.upper for lam, c in r.found}
    assert mult[-4] == 64 and mult[7] == 6
    assert all(mult[lam] == 1 for lam in r.predicted if lam not in (-4, 7))
    assert r.containment_ok and r.multiplicity_ok and r.no_extra_integers_ok


def test_check_conjecture_n3_special():
    r = check_conjecture(3)
    assert r.special_case and r.predicted == [-1]
    assert r.containment_ok
    assert r.multiplicity_ok is None and r.no_extra_integers_ok is None
    assert dict(r.found)[-1].lower == 2


def test_report_keeps_bounded_distinct_from_certified():
    r = check_conjecture(3)
    d = r.to_dict()
    statuses = {c["lambda"]: c["status"] for c in d["found"]}
    assert statuses == {-1: "CERTIFIED", 1: "BOUNDED"}


def test_report_does_not_count_bounded_as_certified(monkeypatch):
    real = harness.known_eigenvectors

    def partial(n, lam):
        vecs = real(n, lam)
        return vecs[:1] if lam == -4 else vecs

    monkeypatch.setattr(harness, "known_eigenvectors", partial)
    r = check_conjecture(5)
    cert = dict(r.found)[-4]
    assert cert.status is CertStatus.BOUNDED and cert.upper == 4
    assert r.containment_ok and r.no_extra_integers_ok
    assert r.multiplicity_ok is False


def test_run_range_writes_sorted_reports(tmp_path):
    out = tmp_path / "reports.jsonl"
    summary = run_range(4, 8, out)
    lines = out.read_text().splitlines()
    assert len(lines) == 5
    assert [json.loads(ln)["n"] for ln in lines] == [4, 5, 6, 7, 8]
    assert summary["all_ok"] and not summary["containment_failures"]
    rows = list(csv.DictReader(open(out.with_suffix(".csv"))))
    assert [int(r["n"]) for r in rows] == [4, 5, 6, 7, 8]
    assert {r["all_flags"] for r in rows} == {"True"}


def test_run_range_n3(tmp_path):
    out = tmp_path / "r.jsonl"
    run_range(3, 3, out)
    (line,) = out.read_text().splitlines()
    assert json.loads(line)["special_case"] is True


def test_run_range_deterministic_and_order_independent(tmp_path):
    a, b, c = tmp_path / "a.jsonl", tmp_path / "b.jsonl", tmp_path / "c.jsonl"
    run_range(3, 6, a, jobs=1, seed=5)
    run_range(3, 6, b, jobs=2, seed=5)
    run_range(3, 6, c, jobs=1, seed=6)
    assert a.read_bytes() == b.read_bytes()
    assert a.read_bytes() != c.read_bytes()  # different primes recorded


@pytest.mark.parametrize("lo, hi", [(2, 5), (6, 5), (4, 33)])
def test_run_range_bounds(lo, hi):
    with pytest.raises(ValueError):
        run_range(lo, hi)


def test_run_range_unwritable_path_fails_before_work(tmp_path, monkeypatch):
    calls = []
    monkeypatch.setattr(harness, "check_conjecture", lambda *a, **k: calls.append(a))
    with pytest.raises(OSError):
        run_range(4, 5, tmp_path / "missing" / "r.jsonl")
    assert calls == []


def test_run_range_alternating_integer_counts():
    summary = run_range(4, 14, cross_check=False)
    counts = [len(r.distinct_integers) for r in summary["reports"]]
    assert counts == [2 if n % 2 == 0 else n - 1 for n in range(4, 15)]


# -- CLI --------------------------------------------------------------------

def test_cli_graph(capsys):
    assert cli.main(["graph", "--n", "4"]) == 0
    assert json.loads(capsys.readouterr().out) == {"n": 4, "vertices": 16, "edges": 76}


def test_cli_graph_export(capsys):
    assert cli.main(["graph", "--n", "2", "--export", "mm"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("%%MatrixMarket") and len([ln for ln in out if not ln.startswith("%")]) == 7


def test_cli_families(capsys):
    assert cli.main(["families", "--n", "9"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["ok"] and d["failures"] == []


def test_cli_int_spectrum(capsys):
    assert cli.main(["int-spectrum", "--n", "4"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert [(c["lambda"], c["upper"], c["status"]) for c in d] == [(-4, 1, "CERTIFIED"), (0, 1, "CERTIFIED")]


def test_cli_spectrum(capsys):
    assert cli.main(["spectrum", "--n", "2", "--tol", "1e-12"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["n"] == 2 and d["tol"] == 1e-12 and len(d["eigenvalues"]) == 4


def test_cli_conjecture_stdout(capsys):
    assert cli.main(["conjecture", "--from", "4", "--to", "5", "--seed", "3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert [json.loads(ln)["n"] for ln in lines] == [4, 5]


def test_cli_conjecture_files(tmp_path):
    out = tmp_path / "r.jsonl"
    assert cli.main(["conjecture", "--from", "3", "--to", "4", "--out", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 2
    assert out.with_suffix(".csv").exists()


@pytest.mark.parametrize("argv", [
    ["graph", "--n", "0"],
    ["int-spectrum", "--n", "33"],
    ["spectrum", "--n", "40"],
    ["conjecture", "--from", "2", "--to", "4"],
    ["families", "--n", "2"],
])
def test_cli_input_errors_exit_2(argv, capsys):
    assert cli.main(argv) == 2
    assert "error:" in capsys.readouterr().err


def test_cli_unwritable_out_exit_2(tmp_path):
    assert cli.main(["conjecture", "--from", "3", "--to", "32", "--out", str(tmp_path / "no" / "x.jsonl")]) == 2


def test_cli_containment_failure_exit_1(monkeypatch, capsys):
    def broken(n, seed, jobs=1, cross_check=True):
        return ConjectureReport(n, [-4], [], False, False, True, (-5, 5))
    monkeypatch.setattr(harness, "check_conjecture", broken)
    assert cli.main(["conjecture", "--from", "4", "--to", "4"]) == 1


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "queens_spectra", "graph", "--n", "3"],
                         capture_output=True, text=True, check=True)
    assert json.loads(res.stdout)["edges"] == 28

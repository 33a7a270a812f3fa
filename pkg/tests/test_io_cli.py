"""End-to-end tests for the file formats and the command line."""

import json
import subprocess
import sys

import numpy as np
import pytest

from circbeta.cli import main
from circbeta.ensembles import EnsembleSpec, sample_circular, sample_jacobi
from circbeta.io import (
    batch_statistic,
    histogram_rows,
    read_batch,
    write_batch_csv,
    write_batch_jsonl,
)
from circbeta.rng import RngStream


def test_csv_round_trip(tmp_path):
    batch = sample_jacobi(EnsembleSpec(3, 2.0, a=0.5, b=0.0, seed=RngStream(1)), 20)
    path = tmp_path / "j.csv"
    write_batch_csv(batch, str(path))
    back = read_batch(str(path))
    assert back.kind == "jacobi"
    assert np.array_equal(back.eigenvalues, batch.eigenvalues)


def test_jsonl_round_trip(tmp_path):
    batch = sample_circular(EnsembleSpec(2, 1.0, seed=RngStream(2)), 10)
    path = tmp_path / "c.jsonl"
    write_batch_jsonl(batch, str(path))
    back = read_batch(str(path))
    assert back.kind == "circular"
    assert np.array_equal(back.eigenvalues, batch.eigenvalues)
    assert np.array_equal(back.weights, batch.weights)
    assert np.array_equal(back.alphas, batch.alphas)
    rec = json.loads(path.read_text().splitlines()[0])
    assert rec["schema_version"] == 1
    assert rec["seed"] == 2 and rec["n"] == 2


def test_histogram_rows_density_normalized():
    g = RngStream(3).generator()
    rows = histogram_rows(g.random(5000), 40, 0.0, 1.0)
    total = sum(r[3] * (r[1] - r[0]) for r in rows)
    assert total == pytest.approx(1.0, abs=1e-12)
    assert sum(r[2] for r in rows) == 5000


def test_cli_sample_deterministic(tmp_path):
    out1, out2 = str(tmp_path / "a.csv"), str(tmp_path / "b.csv")
    argv = ["sample", "circular", "--n", "3", "--beta", "2", "--count", "50", "--seed", "7"]
    assert main(argv + ["--out", out1]) == 0
    assert main(argv + ["--out", out2]) == 0
    assert open(out1, "rb").read() == open(out2, "rb").read()


def test_cli_sample_jacobi_range(tmp_path):
    out = str(tmp_path / "j.csv")
    assert main(["sample", "jacobi", "--n", "2", "--beta", "2", "--a", "0", "--b", "0",
                 "--count", "500", "--seed", "1", "--out", out]) == 0
    vals = np.loadtxt(out, delimiter=",", skiprows=1)
    assert np.max(np.abs(vals)) <= 2.0 + 1e-10


def test_cli_sample_circular_n1_uniform(tmp_path):
    from scipy.stats import kstest

    out = str(tmp_path / "c.csv")
    assert main(["sample", "circular", "--n", "1", "--beta", "2", "--count", "4000",
                 "--seed", "3", "--out", out]) == 0
    vals = np.loadtxt(out, delimiter=",", skiprows=1)
    assert kstest(vals / (2 * np.pi), "uniform").pvalue > 1e-3


def test_cli_usage_errors():
    with pytest.raises(SystemExit) as exc:
        main(["sample", "circular", "--n", "2"])  # missing required flags
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["validate", "nosuchsuite"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["sample", "circular", "--n", "2", "--beta", "1", "--count", "1",
              "--seed", "0", "--out", "x.csv", "--unknown-flag"])
    assert exc.value.code == 2
    # parameter-domain error surfaces as exit 2 with the flag named
    assert main(["sample", "circular", "--n", "0", "--beta", "2", "--count", "1",
                 "--seed", "0", "--out", "/tmp/never.csv"]) == 2


def test_cli_io_error(tmp_path):
    code = main(["sample", "circular", "--n", "1", "--beta", "1", "--count", "1",
                 "--seed", "0", "--out", str(tmp_path / "no" / "dir" / "x.csv")])
    assert code == 3


def test_cli_eval_values(capsys):
    assert main(["eval", "partition", "--n", "2", "--beta", "2"]) == 0
    assert capsys.readouterr().out.strip() == "2"
    assert main(["eval", "charpoly", "--n", "1", "--beta", "2", "--a", "0", "--b", "1"]) == 0
    assert capsys.readouterr().out.strip() == "x - 0.666666666666667"
    assert main(["eval", "selberg", "--n", "1", "--x", "2", "--y", "3", "--z", "0"]) == 0
    assert float(capsys.readouterr().out) == pytest.approx(1 / 12)
    assert main(["eval", "dirichlet", "--p", "1,0"]) == 0
    assert float(capsys.readouterr().out) == pytest.approx(0.5)
    assert main(["eval", "selberg", "--n", "1", "--x", "-2", "--y", "3", "--z", "0"]) == 2


def test_cli_hist(tmp_path, capsys):
    batch_path = str(tmp_path / "c.csv")
    main(["sample", "circular", "--n", "20", "--beta", "2", "--count", "200",
          "--seed", "5", "--out", batch_path])
    capsys.readouterr()
    hist_path = str(tmp_path / "h.csv")
    assert main(["hist", "--input", batch_path, "--stat", "gap", "--bins", "25",
                 "--out", hist_path]) == 0
    rows = np.loadtxt(hist_path, delimiter=",", skiprows=1)
    total = np.sum(rows[:, 3] * (rows[:, 1] - rows[:, 0]))
    assert total == pytest.approx(1.0, abs=1e-12)
    assert (tmp_path / "h.png").exists()  # figure rendered alongside the CSV
    # angle statistic on a jacobi batch is a usage error
    jb = str(tmp_path / "j.csv")
    main(["sample", "jacobi", "--n", "2", "--beta", "1", "--count", "10", "--seed", "1",
          "--out", jb])
    capsys.readouterr()
    assert main(["hist", "--input", jb, "--stat", "angle", "--out", str(tmp_path / "x.csv")]) == 2


def test_cli_hist_no_fig_and_malformed(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("nonsense,header\n1,2\n")
    assert main(["hist", "--input", str(bad), "--stat", "gap", "--out", str(tmp_path / "h.csv")]) == 3
    missing = str(tmp_path / "missing.csv")
    assert main(["hist", "--input", missing, "--stat", "gap", "--out", str(tmp_path / "h.csv")]) == 3


def test_cli_validate_fast_subset(tmp_path, capsys):
    report_path = str(tmp_path / "report.json")
    code = main(["validate", "jacobians", "--seed", "2", "--out", report_path, "--fig"])
    assert code == 0
    report = json.loads(open(report_path).read())
    assert report["passed"] is True
    assert report["schema_version"] == 1
    assert {c["name"] for c in report["checks"]} == {"jacobian_unitary", "jacobian_orthogonal"}
    for c in report["checks"]:
        assert c["anchor"] and c["tolerance"] > 0
    assert (tmp_path / "report.png").exists()
    # config/report round-trips through json
    assert json.loads(json.dumps(report)) == report
    err = capsys.readouterr().err
    assert "PASS" in err


def test_cli_validate_tolerance_override(tmp_path):
    report_path = str(tmp_path / "report.json")
    code = main(["validate", "jacobians", "--seed", "2", "--out", report_path,
                 "--tol", "jacobian_unitary=1e-30"])
    assert code == 1  # forced failure via impossible tolerance
    report = json.loads(open(report_path).read())
    assert report["passed"] is False
    assert report["tolerance_overrides"] == {"jacobian_unitary": 1e-30}


def test_cli_matrix_dump(tmp_path):
    out = str(tmp_path / "m.json")
    assert main(["matrix", "cmv-lm", "--alphas", "0j,0j,1+0j", "--out", out]) == 0
    data = json.loads(open(out).read())
    assert data["matrix"]["shape"] == [3, 3]
    entries = np.array(data["matrix"]["entries"])
    lm = (entries[:, 0] + 1j * entries[:, 1]).reshape(3, 3)
    assert np.max(np.abs(lm @ lm.conj().T - np.eye(3))) < 1e-12
    out2 = str(tmp_path / "J.json")
    assert main(["matrix", "jacobi", "--expected", "--n", "3", "--beta", "2",
                 "--a", "0", "--b", "0", "--out", out2]) == 0
    data = json.loads(open(out2).read())
    assert len(data["matrix"]["b"]) == 3 and len(data["matrix"]["a"]) == 2


def test_cli_outdir_env(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("CIRCBETA_OUTDIR", str(tmp_path))
    assert main(["sample", "circular", "--n", "1", "--beta", "1", "--count", "5",
                 "--seed", "1", "--out", "rel.csv"]) == 0
    assert (tmp_path / "rel.csv").exists()


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "circbeta.cli", "eval", "partition", "--n", "2", "--beta", "4"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert float(proc.stdout) == pytest.approx(6.0)

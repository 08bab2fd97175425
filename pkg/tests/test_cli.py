"""End-to-end CLI runs in a subprocess, plus the JSON report layer."""

import json
import os
import subprocess
import sys

import numpy as np
import pytest

from eigenmotif import double_motif, induced_motif, report
from eigenmotif.families import complete_graph


def run_cli(*args, env_extra=None, cwd=None):
    env = os.environ.copy()
    env.pop("SPECTRA_TOL", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "eigenmotif", *map(str, args)],
        capture_output=True, text=True, env=env, cwd=cwd)


@pytest.fixture()
def k5_file(tmp_path):
    path = tmp_path / "k5.txt"
    proc = run_cli("generate", "--family", "complete", "--n", 5, "-o", path)
    assert proc.returncode == 0, proc.stderr
    return path


def test_generate_writes_edge_list_and_expected(tmp_path):
    out = tmp_path / "k4.txt"
    expected = tmp_path / "k4.json"
    proc = run_cli("generate", "--family", "complete", "--n", 4,
                   "-o", out, "--expected-out", expected)
    assert proc.returncode == 0
    assert out.read_text().splitlines()[0] == "4 6"
    data = json.loads(expected.read_text())
    assert data["coverage"] == "full"
    assert data["entries"][1] == {
        "eigenvalue": 4 / 3, "eigenvalue_exact": "4/3", "multiplicity": 3}


def test_generate_stdout():
    proc = run_cli("generate", "--family", "star", "--n", 3)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "4 3"


def test_spectrum_formats(k5_file):
    plain = run_cli("spectrum", "--graph", k5_file)
    assert plain.returncode == 0
    assert plain.stdout.strip() == "0 ×1; 1.25 ×4"

    csv = run_cli("spectrum", "--graph", k5_file, "--format", "csv")
    rows = csv.stdout.strip().splitlines()
    assert len(rows) == 2  # one row per eigenvalue group
    value, count = rows[1].split(",")
    assert float(value) == pytest.approx(1.25, abs=1e-12)
    assert count == "4"

    js = run_cli("spectrum", "--graph", k5_file, "--format", "json")
    data = json.loads(js.stdout)
    assert data["schema_version"] == 1
    assert len(data["eigenvalues"]) == 5
    assert data["groups"][1]["multiplicity"] == 4


def test_apply_and_verify_round_trip(tmp_path, k5_file):
    rep = tmp_path / "rep.json"
    evolved = tmp_path / "evolved.txt"
    proc = run_cli("apply", "double-vertex", "--graph", k5_file, "--vertex", 2,
                   "-o", evolved, "--report", rep)
    assert proc.returncode == 0
    assert "VERTEX_DOUBLING" in proc.stdout

    result = report.report_to_result(json.loads(rep.read_text()))
    assert result.graph.n == 6
    (claim,) = result.claims
    assert claim.eigenvalue == 1.0

    check = run_cli("verify", "--result", rep, "--invariants")
    assert check.returncode == 0
    assert "verification PASSED" in check.stdout


def test_verify_fails_on_tampered_report(tmp_path, k5_file):
    rep = tmp_path / "rep.json"
    run_cli("apply", "double-vertex", "--graph", k5_file, "--vertex", 0,
            "--report", rep)
    data = json.loads(rep.read_text())
    data["claims"][0]["eigenvalue"] = 1.7
    data["claims"][0]["eigenvalue_exact"] = None
    rep.write_text(json.dumps(data))
    proc = run_cli("verify", "--result", rep)
    assert proc.returncode == 1
    assert "FAIL" in proc.stdout


def test_verify_output_report(tmp_path, k5_file):
    rep = tmp_path / "rep.json"
    out = tmp_path / "verified.json"
    run_cli("apply", "double-vertex", "--graph", k5_file, "--vertex", 0,
            "--report", rep)
    proc = run_cli("verify", "--result", rep, "--output", out)
    assert proc.returncode == 0
    data = json.loads(out.read_text())
    assert data["verification"][0]["passed"] is True


def test_couple_requires_eigenvalue_one(tmp_path):
    # C_5 has no eigenvalue 1, so auto-derivation must fail cleanly
    c5 = tmp_path / "c5.txt"
    k1 = tmp_path / "k1.txt"
    run_cli("generate", "--family", "cycle", "--n", 5, "-o", c5)
    run_cli("generate", "--family", "complete", "--n", 1, "-o", k1)
    proc = run_cli("apply", "couple", "--graph", k1, "--attachment", c5,
                   "--host-vertex", 0, "--attach-vertex", 0)
    assert proc.returncode == 2
    assert "no eigenvalue-1" in proc.stderr


def test_attach_multi_assign_parsing(tmp_path, k5_file):
    k2 = tmp_path / "k2.txt"
    run_cli("generate", "--family", "complete", "--n", 2, "-o", k2)
    ok = run_cli("apply", "attach-multi", "--graph", k5_file, "--sigma", k2,
                 "--assign", "all@0", "--assign", "all@1")
    assert ok.returncode == 0
    bad = run_cli("apply", "attach-multi", "--graph", k5_file, "--sigma", k2,
                  "--assign", "0,1")
    assert bad.returncode == 2
    assert "contacts@anchor" in bad.stderr


def test_exit_code_2_on_bad_input(tmp_path):
    missing = run_cli("spectrum", "--graph", tmp_path / "nope.txt")
    assert missing.returncode == 2

    garbled = tmp_path / "bad.txt"
    garbled.write_text("3 1\n0 1\n1 2\n")
    proc = run_cli("spectrum", "--graph", garbled)
    assert proc.returncode == 2


def test_exit_code_3_on_precondition(tmp_path):
    two = tmp_path / "two.txt"
    two.write_text("2 0\n")
    proc = run_cli("apply", "double-vertex", "--graph", two, "--vertex", 0)
    assert proc.returncode == 3
    assert "--force" in proc.stderr

    forced = run_cli("apply", "double-vertex", "--graph", two, "--vertex", 0,
                     "--force")
    assert forced.returncode == 0
    assert "claims suppressed" in forced.stdout


def test_spectra_tol_env(tmp_path):
    # a path's end edge has degree product 2, so the doubling eigenvalues
    # 1 +- 1/sqrt(2) are irrational and the witness residual is tiny but
    # nonzero -- unlike the exact integer twin witnesses
    p4 = tmp_path / "p4.txt"
    run_cli("generate", "--family", "path", "--n", 4, "-o", p4)
    rep = tmp_path / "rep.json"
    run_cli("apply", "double-motif", "--graph", p4, "--motif", "0,1",
            "--report", rep)
    tight = run_cli("verify", "--result", rep, env_extra={"SPECTRA_TOL": "1e-300"})
    assert tight.returncode == 1
    junk = run_cli("verify", "--result", rep, env_extra={"SPECTRA_TOL": "wide"})
    assert junk.returncode == 2
    loose = run_cli("verify", "--result", rep, env_extra={"SPECTRA_TOL": "0.5"})
    assert loose.returncode == 0


def test_demo_runs_catalog():
    proc = run_cli("demo", "--only", "edge_tripling")
    assert proc.returncode == 0
    assert proc.stdout.startswith("PASS")
    missing = run_cli("demo", "--only", "not_a_fixture")
    assert missing.returncode == 2


# ------------------------------------------------------------ report layer


def test_report_round_trip_preserves_everything():
    g = complete_graph(3)
    result = double_motif(g, induced_motif(g, (1, 2)))
    data = report.result_to_report(result, {"name": "double-motif",
                                            "parameters": {"motif": [1, 2]}})
    text = report.dumps(data)
    back = report.report_to_result(json.loads(text))
    assert back.graph == result.graph
    assert back.vertex_map == result.vertex_map
    assert len(back.claims) == len(result.claims)
    for a, b in zip(back.claims, result.claims):
        assert a.eigenvalue == b.eigenvalue
        assert a.provenance == b.provenance
        assert a.eigenvalue_exact == b.eigenvalue_exact
        for fa, fb in zip(a.eigenfunctions, b.eigenfunctions):
            np.testing.assert_array_equal(fa, fb)


def test_report_rejects_wrong_schema():
    g = complete_graph(3)
    result = double_motif(g, induced_motif(g, (1, 2)))
    data = report.result_to_report(result, {"name": "double-motif", "parameters": {}})
    data["schema_version"] = 99
    with pytest.raises(ValueError):
        report.report_to_result(data)


def test_report_file_io(tmp_path):
    payload = {"schema_version": report.SCHEMA_VERSION, "x": [1, 2]}
    path = tmp_path / "r.json"
    report.write_report(path, payload)
    assert report.read_report(path) == payload
    assert path.read_text().endswith("\n")

import json
import math

import numpy as np
import pytest

from nonstatic import cli


def run_cli(args, capsys=None):
    code = cli.main(args)
    err = capsys.readouterr().err if capsys is not None else ""
    return code, err


def read_manifest(out_path):
    return json.loads((out_path.parent / (out_path.stem + ".manifest.json")).read_text())


def test_defaults_static_scenario(tmp_path, capsys):
    out = tmp_path / "base.csv"
    code, _ = run_cli(["nonstaticity", "--out", str(out)], capsys)
    assert code == 0
    manifest = read_manifest(out)
    assert manifest["schema_version"] == 1
    assert manifest["nonstaticity_measure"] == 0.0
    assert manifest["resolved_c3"] == 0.0
    assert manifest["scenario"]["c1"] == 1.0
    assert manifest["scenario"]["omega"] == 1.0
    header = out.read_text().splitlines()[0]
    assert header == "t,f,fdot,zeta,T"


def test_measure_reported_in_manifest(tmp_path, capsys):
    out = tmp_path / "wide.csv"
    code, _ = run_cli(["nonstaticity", "--c1", "1", "--c2", "100", "--out", str(out)], capsys)
    assert code == 0
    assert abs(read_manifest(out)["nonstaticity_measure"] - 35.70) <= 0.005


def test_constraint_violation_is_usage_error(tmp_path, capsys):
    code, err = run_cli(["density-q", "--c1", "0.5", "--c2", "1",
                         "--out", str(tmp_path / "x.csv")], capsys)
    assert code == 2
    payload = json.loads(err)
    assert payload["flag"] == "--c1"
    assert "c1*c2" in payload["error"]


def test_unknown_flag_is_usage_error(tmp_path, capsys):
    code, err = run_cli(["energies", "--no-such-flag", "1"], capsys)
    assert code == 2
    payload = json.loads(err)
    assert "--no-such-flag" in payload["error"]


def test_bad_subject_is_usage_error(capsys):
    code, err = run_cli(["not-a-subject"], capsys)
    assert code == 2
    assert json.loads(err)["error"]


def test_density_q_figure_scenario(tmp_path, capsys):
    out = tmp_path / "fig1b.csv"
    code, _ = run_cli(["density-q", "--c1", "5", "--c2", "2", "--nt", "6",
                       "--nq", "41", "--qmin", "-12", "--qmax", "12",
                       "--out", str(out)], capsys)
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "t,q,density"
    assert len(lines) == 1 + 6 * 41
    manifest = read_manifest(out)
    assert manifest["resolved_c3"] == 3.0
    assert manifest["subject"] == "density-q"
    # density column is finite and nonnegative
    dens = np.array([float(line.split(",")[2]) for line in lines[1:]])
    assert np.all(np.isfinite(dens)) and dens.min() >= 0.0


def test_energies_sweep_structure(tmp_path, capsys):
    for c1 in ("1", "2", "4", "10", "20"):
        out = tmp_path / f"energies_c1_{c1}.csv"
        code, _ = run_cli(["energies", "--c1", c1, "--c2", "1", "--nt", "50",
                           "--out", str(out)], capsys)
        assert code == 0
        rows = [line.split(",") for line in out.read_text().splitlines()[1:]]
        etot = np.array([float(r[3]) for r in rows])
        assert np.abs(etot - etot[0]).max() <= 1e-10 * abs(etot[0])


def test_deterministic_bytes(tmp_path, capsys):
    args = ["fluctuations", "--c1", "5", "--c2", "2", "--nt", "20"]
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    assert run_cli(args + ["--out", str(out1)], capsys)[0] == 0
    assert run_cli(args + ["--out", str(out2)], capsys)[0] == 0
    assert out1.read_bytes() == out2.read_bytes()
    m1 = (tmp_path / "a.manifest.json").read_text()
    m2 = (tmp_path / "b.manifest.json").read_text()
    assert m1.replace('"a.csv"', '"X"') == m2.replace('"b.csv"', '"X"')


def test_manifest_round_trip(tmp_path, capsys):
    out1 = tmp_path / "first.csv"
    code, _ = run_cli(["mandel-q", "--c1", "3", "--c2", "2", "--a0", "0.8",
                       "--theta", "0.1", "--nt", "17", "--out", str(out1)], capsys)
    assert code == 0
    manifest_file = tmp_path / "first.manifest.json"
    out2 = tmp_path / "second.csv"
    code, _ = run_cli(["mandel-q", "--config", str(manifest_file),
                       "--out", str(out2)], capsys)
    assert code == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_flags_override_config(tmp_path, capsys):
    config = tmp_path / "conf.json"
    config.write_text(json.dumps({"c1": 5.0, "c2": 2.0, "nt": 5}))
    out = tmp_path / "o.csv"
    code, _ = run_cli(["nonstaticity", "--config", str(config), "--c1", "4",
                       "--out", str(out)], capsys)
    assert code == 0
    scenario = read_manifest(out)["scenario"]
    assert scenario["c1"] == 4.0
    assert scenario["c2"] == 2.0
    assert scenario["nt"] == 5


def test_unknown_config_key_rejected(tmp_path, capsys):
    config = tmp_path / "conf.json"
    config.write_text(json.dumps({"c9": 1.0}))
    code, err = run_cli(["energies", "--config", str(config)], capsys)
    assert code == 2
    assert "c9" in json.loads(err)["error"]


def test_json_format_output(tmp_path, capsys):
    out = tmp_path / "dens.json"
    code, _ = run_cli(["density-q", "--nt", "3", "--nq", "11", "--qmin", "-5",
                       "--qmax", "5", "--format", "json", "--out", str(out)], capsys)
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["schema_version"] == 1
    assert payload["columns"] == ["t", "q", "density"]
    assert len(payload["rows"]) == 33


def test_validate_static_passes(tmp_path, capsys):
    out = tmp_path / "validate.json"
    code, _ = run_cli(["validate", "--out", str(out)], capsys)
    assert code == 0
    report = json.loads(out.read_text())
    assert report["passed"] is True
    assert report["nonstaticity_measure"] == 0.0
    assert all(c["passed"] for c in report["checks"])


def test_validate_failure_exit_code(tmp_path, capsys):
    out = tmp_path / "validate.json"
    code, _ = run_cli(["validate", "--c1", "5", "--c2", "2",
                       "--tol-scale", "1e-12", "--out", str(out)], capsys)
    assert code == 3
    report = json.loads(out.read_text())
    assert report["passed"] is False


def test_fock_cap_is_usage_error(tmp_path, capsys):
    code, err = run_cli(["fock-density", "--fock-n", "60", "--nt", "2",
                         "--out", str(tmp_path / "f.csv")], capsys)
    assert code == 2
    assert json.loads(err)["flag"] == "--fock-n"


def test_mandel_static_vacuum_is_usage_error(tmp_path, capsys):
    code, err = run_cli(["mandel-q", "--a0", "0", "--nt", "3",
                         "--out", str(tmp_path / "m.csv")], capsys)
    assert code == 2
    assert json.loads(err)["flag"] == "--a0"


def test_wigner_and_ellipse_subjects(tmp_path, capsys):
    out = tmp_path / "w.csv"
    code, _ = run_cli(["wigner", "--c1", "5", "--c2", "2", "--nt", "2",
                       "--nq", "21", "--np", "21", "--out", str(out)], capsys)
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "t,q,p,W"
    assert len(lines) == 1 + 2 * 21 * 21
    out2 = tmp_path / "e.csv"
    code, _ = run_cli(["ellipse", "--c1", "5", "--c2", "2", "--nt", "9",
                       "--out", str(out2)], capsys)
    assert code == 0
    lines = out2.read_text().splitlines()
    assert lines[0] == "t,center_q,center_p,angle,r_major,r_minor"
    # static ellipse reports the not-applicable marker as an empty cell
    out3 = tmp_path / "estatic.csv"
    code, _ = run_cli(["ellipse", "--nt", "4", "--out", str(out3)], capsys)
    assert code == 0
    row = out3.read_text().splitlines()[1].split(",")
    assert row[3] == ""


def test_time_window_validation(tmp_path, capsys):
    code, err = run_cli(["energies", "--t-from", "2", "--t-to", "1",
                         "--out", str(tmp_path / "x.csv")], capsys)
    assert code == 2
    assert json.loads(err)["flag"] == "--t-to"


def test_grid_auto_widening(tmp_path, capsys):
    # c2 = 100 has a very wide envelope; default bounds must stretch past 12
    out = tmp_path / "wide.csv"
    code, _ = run_cli(["density-q", "--c1", "1", "--c2", "100", "--nt", "2",
                       "--nq", "11", "--out", str(out)], capsys)
    assert code == 0
    scenario = read_manifest(out)["scenario"]
    fmax = 0.5 * 101 + math.sqrt((0.5 * 101) ** 2 - 1.0)
    needed = math.sqrt(2.0 * fmax) + 8.0 * math.sqrt(fmax / 2.0)
    assert scenario["qmax"] >= needed - 1e-9
    assert scenario["qmin"] == -scenario["qmax"]

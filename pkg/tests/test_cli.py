import json
import subprocess
import sys

import pytest

from qcheeger.cli import main
from qcheeger.serialization import dumps
from qcheeger.shapes2d import Disc


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_unit_disc(tmp_path, capsys):
    path = tmp_path / "disc.json"
    path.write_text(dumps(Disc(1.0)))
    code, out, _ = run(capsys, "compute", "--shape", str(path))
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert row["area"] == pytest.approx(3.141592653589793, abs=1e-12)
    assert (row["h_lower"], row["h_upper"]) == (pytest.approx(2.0), pytest.approx(2.0))
    assert row["alpha"] <= 1e-6 and abs(row["zeta"]) <= 1e-9 and abs(row["beta_sq"]) <= 1e-9


def test_compute_interval_family(capsys):
    code, out, _ = run(capsys, "compute", "--family", "omega-T", "--T", "4")
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert row["minimizer"] == [["-inf", "-1.0"]]


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert all(r["check_holds"] for r in json.loads(out)["rows"])


def test_verify_reports_failures(capsys):
    code, _, err = run(capsys, "verify", "--tol", "fd_identity=1e-30")
    assert code == 1
    assert "FAILED" in err


def test_gauss_sharpness_minimizers(capsys):
    code, out, _ = run(capsys, "reproduce", "gauss-sharpness", "--T", "3,4,5,6,7,8")
    assert code == 0
    doc = json.loads(out)
    assert [r["param"] for r in doc["rows"]] == [3.0, 4.0, 5.0, 6.0, 7.0, 8.0]
    for r in doc["rows"]:
        assert (r["minimizer_left"], r["minimizer_right"]) == ("-inf", -1.0)


def test_tolerances_are_echoed(capsys):
    code, out, _ = run(capsys, "reproduce", "annulus", "--j", "4", "--tol-root", "1e-13")
    assert code == 0
    assert json.loads(out)["tolerances"]["root"] == 1e-13


def test_csv_output_to_file(tmp_path, capsys):
    out = tmp_path / "a.csv"
    code, stdout, _ = run(capsys, "reproduce", "annulus", "--j", "4,10", "--format", "csv", "--out", str(out))
    assert code == 0 and stdout == ""
    lines = out.read_text().splitlines()
    assert lines[0] == "# schema_version=1 experiment=annulus"
    assert lines[1].startswith("family,param,")
    assert len(lines) == 4


def test_sweep_output_repeatable(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["sweep", "zeta", "--seed", "2", "--samples", "50", "--out", str(a)]) == 0
    assert main(["sweep", "zeta", "--seed", "2", "--samples", "50", "--workers", "2", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize("argv", [
    ["sweep", "zeta"],
    ["compute"],
    ["reproduce", "flower", "--j", "five"],
    ["verify", "--tol", "nonsense"],
])
def test_argument_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


@pytest.mark.parametrize("argv", [
    ["compute", "--shape", "/nonexistent/shape.json"],
    ["verify", "--tol", "unknown=1e-3"],
    ["verify", "--tol-quad", "-1"],
    ["sweep", "zeta", "--seed", "1", "--samples", "0"],
    ["reproduce", "flower", "--eps", "2"],
])
def test_runtime_usage_errors_exit_2(argv, capsys):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("qcheeger: error:")


def test_bad_shape_document_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"schema_version": 1, "kind": "disc", "radius": "-1"}')
    code, _, _ = run(capsys, "compute", "--shape", str(path))
    assert code == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "qcheeger", "reproduce", "annulus", "--j", "4"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert json.loads(res.stdout)["experiment"] == "annulus"

"""Command line front end: configuration, reports, exports, exit codes."""

import json
import os

import pytest

from uqsl2.cli import (RunConfig, SCHEMA, export_tables, main, run)


def test_config_validation():
    RunConfig(p=2, suites=("hopf",))
    with pytest.raises(ValueError):
        RunConfig(p=1, suites=("hopf",))
    with pytest.raises(ValueError):
        RunConfig(p=6, suites=("hopf",))
    with pytest.raises(ValueError):
        RunConfig(p=2, suites=())
    with pytest.raises(ValueError):
        RunConfig(p=2, suites=("hopf", "nosuch"))
    with pytest.raises(ValueError):
        RunConfig(p=2, suites=("hopf",), genus=3)
    with pytest.raises(ValueError):
        RunConfig(p=2, suites=("hopf",), tol=0.0)


def test_run_report_shape():
    code, report = run(RunConfig(p=2, suites=("hopf", "center")))
    assert code == 0
    assert report["schema"] == SCHEMA
    assert report["p"] == 2
    assert set(report["suites"]) == {"hopf", "center"}
    for result in report["suites"].values():
        assert result["checks"]
        assert all(isinstance(v, bool) for v in result["checks"].values())


def test_verify_exit_codes(capsys):
    assert main(["verify", "--p", "2", "--suite", "hopf"]) == 0
    out = capsys.readouterr().out
    assert "PASS  hopf.coproduct_closed_formula" in out
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--p", "2", "--suite", "nosuch"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--p", "9", "--suite", "hopf"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["nosuchcommand"])
    assert exc.value.code == 2


def test_bad_loop_word_is_usage_error(capsys):
    assert main(["wilson", "--p", "2", "--word", "zz"]) == 2
    assert "error" in capsys.readouterr().err


def test_wilson_payload_matches_character_multiplication(capsys, tmp_path):
    path = tmp_path / "w.json"
    assert main(["wilson", "--p", "2", "--word", "b1^-1 a1",
                 "--export", str(path)]) == 0
    data = json.loads(path.read_text())
    assert data["schema"] == SCHEMA
    assert data["word"] == "b1^-1 a1"
    assert data["basis"] == ["chi+1", "chi+2", "chi-1", "chi-2", "G1"]
    from uqsl2.uq_algebra import algebra
    from uqsl2.center_slf import gta_basis
    from uqsl2.linalg import ExactMatrix
    alg = algebra(2)
    gta = gta_basis(alg)
    n = len(gta.labels)
    cols = [gta.product(gta["chi+2"], f).coords for f in gta.forms]
    mult = ExactMatrix.from_rows(alg.field,
                                 [[cols[j][i] for j in range(n)]
                                  for i in range(n)])
    assert data["matrix"] == mult.to_json()


def test_sl2z_export_diagonal(tmp_path, capsys):
    path = tmp_path / "m.json"
    assert main(["sl2z", "--p", "3", "--export", str(path)]) == 0
    data = json.loads(path.read_text())
    from uqsl2.uq_algebra import algebra
    from uqsl2.ribbon import ribbon_value
    alg = algebra(3)
    labs = data["basis"]
    entries = data["tau_a"]["entries"]
    for i, lab in enumerate(labs):
        if lab.startswith("chi"):
            eps, s = (1 if lab[3] == "+" else -1), int(lab[4:])
        else:
            eps, s = 1, int(lab[1:])
        v_inv = ribbon_value(alg, s if eps == 1
                             else (3 - s if s < 3 else 0)).inverse()
        assert entries[i][i] == v_inv.to_json()


def test_exports_are_deterministic(tmp_path):
    d1 = tmp_path / "one"
    d2 = tmp_path / "two"
    d1.mkdir()
    d2.mkdir()
    paths1 = export_tables(2, str(d1))
    paths2 = export_tables(2, str(d2))
    assert [os.path.basename(a) for a in paths1] \
        == [os.path.basename(b) for b in paths2]
    for a, b in zip(paths1, paths2):
        with open(a, "rb") as fa, open(b, "rb") as fb:
            assert fa.read() == fb.read()


def test_gta_csv_header_names_basis(tmp_path):
    export_tables(2, str(tmp_path))
    lines = (tmp_path / "gta_table_p2.csv").read_text().splitlines()
    assert lines[0] == "left,right,chi+1,chi+2,chi-1,chi-2,G1"
    # (chi-1, G1) -> -G1: a single coordinate -1 in the G1 column
    row = [ln for ln in lines if ln.startswith("chi-1,G1,")]
    assert row == ["chi-1,G1,0,0,0,0,-1"]


def test_report_export_no_timestamps(tmp_path):
    path = tmp_path / "report.json"
    code = main(["verify", "--p", "2", "--suite", "center",
                 "--export", str(path)])
    assert code == 0
    data = json.loads(path.read_text())
    assert data["schema"] == SCHEMA
    text = path.read_text()
    assert "time" not in text and "date" not in text

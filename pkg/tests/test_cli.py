import json

import pytest

from ptgauge.cli import _parse_complex, _parse_range, main
from ptgauge.cli import UsageError


class TestParsers:
    def test_complex_forms(self):
        assert _parse_complex("1", "k") == 1
        assert _parse_complex("0.5-2i", "k") == 0.5 - 2j
        assert _parse_complex("3i", "k") == 3j
        assert _parse_complex("-1i", "k") == -1j

    def test_complex_malformed(self):
        with pytest.raises(UsageError, match="t12"):
            _parse_complex("one", "t12")

    def test_range(self):
        r = _parse_range("-1:1:5", "k")
        assert list(r) == [-1.0, -0.5, 0.0, 0.5, 1.0]

    def test_range_malformed(self):
        with pytest.raises(UsageError):
            _parse_range("-1:1", "k")
        with pytest.raises(UsageError):
            _parse_range("a:b:3", "k")
        with pytest.raises(UsageError):
            _parse_range("0:1:0", "k")


class TestExitCodes:
    def test_passing_command_exits_zero(self, tmp_path, capsys):
        code = main(["point-angle", "--out-dir", str(tmp_path)])
        assert code == 0
        out = capsys.readouterr().out
        assert "[PASS]" in out
        assert "point-angle: PASS" in out

    def test_check_failure_exits_one(self, tmp_path, capsys):
        # an unattainable tolerance turns the r1 check red
        code = main(["gauge-scalar", "--h", "0.1", "--box", "6.0",
                     "--tol", "1e-30", "--out-dir", str(tmp_path)])
        assert code == 1
        assert "[FAIL]" in capsys.readouterr().out

    def test_malformed_flag_value_exits_two(self, tmp_path, capsys):
        code = main(["point-angle", "--t12", "oops",
                     "--out-dir", str(tmp_path)])
        assert code == 2
        assert "usage error" in capsys.readouterr().err

    def test_non_pt_coupling_exits_two(self, tmp_path, capsys):
        code = main(["point-angle", "--t11", "1i",
                     "--out-dir", str(tmp_path)])
        assert code == 2
        assert "PT-symmetric" in capsys.readouterr().err

    def test_unknown_subcommand_exits_two(self, capsys):
        assert main(["no-such-command"]) == 2

    def test_bad_grid_exits_two(self, tmp_path, capsys):
        code = main(["gauge-scalar", "--h", "-0.1",
                     "--out-dir", str(tmp_path)])
        assert code == 2


class TestConfigFile:
    def test_values_applied(self, tmp_path, capsys):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("t11 = -2\nt12 = 0i\n# comment line\nt21 = 0i\n")
        code = main(["point-spectrum", "--config", str(cfg),
                     "--out-dir", str(tmp_path)])
        assert code == 0
        payload = json.loads((tmp_path / "point-spectrum.json").read_text())
        assert payload["config"]["t11"] == "-2"
        assert payload["config"]["n_bound"] == 1

    def test_explicit_flag_wins(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("t11 = -2\n")
        main(["point-spectrum", "--config", str(cfg), "--t11", "-4",
              "--out-dir", str(tmp_path)])
        payload = json.loads((tmp_path / "point-spectrum.json").read_text())
        assert payload["config"]["t11"] == "-4"

    def test_unknown_key_named_in_error(self, tmp_path, capsys):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("bogus_knob = 3\n")
        code = main(["point-angle", "--config", str(cfg),
                     "--out-dir", str(tmp_path)])
        assert code == 2
        err = capsys.readouterr().err
        assert "bogus_knob" in err

    def test_malformed_line_rejected(self, tmp_path, capsys):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("just a line without equals\n")
        assert main(["point-angle", "--config", str(cfg)]) == 2

    def test_malformed_typed_value_rejected(self, tmp_path, capsys):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("samples = many\n")
        assert main(["lts-check", "--config", str(cfg)]) == 2

    def test_missing_file_rejected(self, tmp_path, capsys):
        assert main(["point-angle",
                     "--config", str(tmp_path / "absent.cfg")]) == 2


class TestOutputs:
    def test_report_dir_env_fallback(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("PTGAUGE_REPORT_DIR", str(tmp_path / "envdir"))
        code = main(["point-angle"])
        assert code == 0
        assert (tmp_path / "envdir" / "point-angle.json").exists()

    def test_out_dir_flag_beats_env(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("PTGAUGE_REPORT_DIR", str(tmp_path / "envdir"))
        main(["point-angle", "--out-dir", str(tmp_path / "flagdir")])
        assert (tmp_path / "flagdir" / "point-angle.json").exists()
        assert not (tmp_path / "envdir").exists()

    def test_phase_diagram_csv_schema(self, tmp_path, capsys):
        # values starting with '-' need the --flag=value spelling
        code = main(["phase-diagram", "--t11-range=-2:0:2",
                     "--t22-range=0:0:1", "--im-t12-range=-1:1:2",
                     "--im-t21-range=-1:1:2",
                     "--out-dir", str(tmp_path)])
        assert code == 0
        lines = ((tmp_path / "phase-diagram_phase_diagram.csv")
                 .read_text().splitlines())
        assert lines[0] == ("t11,t22,im_t12,im_t21,phi,degenerate,n_bound,"
                            "e1_re,e1_im,e2_re,e2_im,classification")
        assert len(lines) == 1 + 2 * 1 * 2 * 2

    def test_phase_diagram_byte_reproducible(self, tmp_path, capsys):
        args = ["phase-diagram", "--t11-range=-2:1:3",
                "--t22-range=-1:1:2", "--im-t12-range=-1:1:2",
                "--im-t21-range=-1:1:2"]
        main(args + ["--out-dir", str(tmp_path / "a")])
        main(args + ["--out-dir", str(tmp_path / "b")])
        name = "phase-diagram_phase_diagram.csv"
        assert ((tmp_path / "a" / name).read_bytes()
                == (tmp_path / "b" / name).read_bytes())

    def test_lts_json_report(self, tmp_path, capsys):
        code = main(["lts-check", "--samples", "20", "--seed", "5",
                     "--out-dir", str(tmp_path)])
        assert code == 0
        payload = json.loads((tmp_path / "lts-check.json").read_text())
        assert payload["seed"] == 5
        assert payload["pass"] is True
        names = [r["name"] for r in payload["records"]]
        assert "lts/ternary_closure" in names

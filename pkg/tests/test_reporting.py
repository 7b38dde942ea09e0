import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ptgauge.reporting import CheckRecord, Report, Table, emit


def _report():
    rep = Report(command="demo", config={"b": 2, "a": 1}, seed=11)
    rep.add("fine", 1e-12, 1e-10)
    rep.add("coarse", 0.5, 1e-3)
    rep.tables.append(Table(
        name="values",
        columns=["index", "value", "flag"],
        rows=[[0, 0.1, True], [1, float("nan"), False]],
    ))
    return rep


class TestRecords:
    def test_passed_logic(self):
        assert CheckRecord("x", 1e-12, 1e-10).passed
        assert not CheckRecord("x", 2e-10, 1e-10).passed
        assert CheckRecord("edge", 1e-10, 1e-10).passed

    def test_report_passed_requires_all(self):
        rep = _report()
        assert not rep.passed
        rep.records = [r for r in rep.records if r.name == "fine"]
        assert rep.passed

    def test_add_coerces_to_float(self):
        rep = Report(command="c", config={})
        rec = rep.add("r", np.float64(0.25), np.float64(1.0))
        assert isinstance(rec.residual, float)
        assert isinstance(rec.tolerance, float)


class TestJson:
    def test_layout(self, tmp_path):
        paths = emit(_report(), "json", str(tmp_path))
        assert paths == [str(tmp_path / "demo.json")]
        payload = json.loads((tmp_path / "demo.json").read_text())
        assert list(payload["config"]) == ["a", "b"]
        assert payload["records"][0]["pass"] is True
        assert payload["records"][1]["pass"] is False
        assert payload["pass"] is False

    def test_float_formatting(self, tmp_path):
        emit(_report(), "json", str(tmp_path))
        payload = json.loads((tmp_path / "demo.json").read_text())
        res = payload["records"][0]["residual"]
        assert res == format(1e-12, ".17e")
        assert float(res) == 1e-12

    @given(st.floats(allow_nan=False, allow_infinity=False),
           st.floats(min_value=0, max_value=1))
    @settings(max_examples=50)
    def test_seventeen_digits_round_trip(self, residual, tolerance):
        rep = Report(command="c", config={})
        rep.add("r", residual, tolerance)
        # 17 significant digits reproduce any double exactly
        payload_res = format(rep.records[0].residual, ".17e")
        assert float(payload_res) == residual

    def test_wall_time_not_serialized(self, tmp_path):
        rep = _report()
        rep.wall_time = 12.5
        emit(rep, "json", str(tmp_path))
        text = (tmp_path / "demo.json").read_text()
        assert "wall_time" not in text
        assert "12.5" not in text

    def test_byte_reproducible(self, tmp_path):
        d1, d2 = tmp_path / "a", tmp_path / "b"
        emit(_report(), "json", str(d1))
        emit(_report(), "json", str(d2))
        assert (d1 / "demo.json").read_bytes() == (d2 / "demo.json").read_bytes()


class TestCsv:
    def test_layout_and_bool_encoding(self, tmp_path):
        paths = emit(_report(), "csv", str(tmp_path))
        assert paths == [str(tmp_path / "demo_values.csv")]
        lines = (tmp_path / "demo_values.csv").read_text().splitlines()
        assert lines[0] == "index,value,flag"
        assert lines[1].split(",")[0] == "0"
        assert lines[1].split(",")[2] == "1"
        assert lines[2].split(",")[2] == "0"

    def test_nan_serializes(self, tmp_path):
        emit(_report(), "csv", str(tmp_path))
        lines = (tmp_path / "demo_values.csv").read_text().splitlines()
        assert "nan" in lines[2].split(",")[1]

    def test_no_tables_writes_nothing(self, tmp_path):
        rep = Report(command="bare", config={})
        rep.add("only", 0.0, 1.0)
        assert emit(rep, "csv", str(tmp_path)) == []

    def test_byte_reproducible(self, tmp_path):
        d1, d2 = tmp_path / "a", tmp_path / "b"
        emit(_report(), "csv", str(d1))
        emit(_report(), "csv", str(d2))
        assert ((d1 / "demo_values.csv").read_bytes()
                == (d2 / "demo_values.csv").read_bytes())


def test_unknown_format_rejected(tmp_path):
    with pytest.raises(ValueError, match="unknown output format"):
        emit(_report(), "yaml", str(tmp_path))


def test_unwritable_directory(tmp_path):
    target = tmp_path / "file"
    target.write_text("not a directory")
    with pytest.raises(OSError):
        emit(_report(), "json", str(target))

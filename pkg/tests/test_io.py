"""Test report serialization, run configs and graph6 sources."""

import gzip
import json

import pandas as pd
import pytest

from transit_spectra.core.schemas import CheckResult, RunConfig, VerificationReport, Witness
from transit_spectra.io.config import load_run_config, write_run_config
from transit_spectra.io.files import open_graph6_source, write_text
from transit_spectra.io.report import dumps_json, format_float, render, render_reports
from transit_spectra.runners.verify import verify_theorem1


@pytest.fixture
def report():
    return VerificationReport(
        order=5,
        graph_class="connected",
        measure="tau",
        population=21,
        non_transmission_regular=18,
        minimum=0.2984378812835757,
        bound=0.2984378812835757,
        witnesses=[Witness(graph6="Dv{", canonical="Dv{", value=0.2984378812835757)],
        checks={"bound_attained": CheckResult(passed=True, detail="exact")},
        passed=True,
    )


def test_format_float():
    assert format_float(0.1) == "0.10000000000000001"
    assert format_float(2.0) == "2.0"
    assert float(format_float(1e-20)) == 1e-20


def test_json_floats_round_trip(report):
    text = dumps_json(report)
    document = json.loads(text)

    assert document["schema"] == "transit-spectra/1"
    assert document["minimum"] == report.minimum
    assert "\\u0000" not in text


def test_json_records_and_non_finite():
    document = json.loads(dumps_json([{"x": float("inf"), "y": 1.5, "ok": True}]))

    assert document["records"] == [{"x": None, "y": 1.5, "ok": True}]


def test_report_csv_has_check_columns(report, tmp_path):
    path = tmp_path / "report.csv"
    path.write_text(render(report, "csv"))
    frame = pd.read_csv(path)

    assert len(frame) == 1
    assert bool(frame.loc[0, "check:bound_attained"])
    assert frame.loc[0, "witnesses"] == "Dv{"


def test_reports_are_reproducible():
    first = render(verify_theorem1(4), "json")
    second = render(verify_theorem1(4), "json")

    assert first == second
    assert json.loads(first)["created_at"] is None


def test_render_reports_json(report):
    document = json.loads(render_reports([report, report], "json"))
    assert [r["order"] for r in document["reports"]] == [5, 5]


def test_load_run_config_with_overrides(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("subcommand: verify\nn: 7\ntolerances:\n  tie: 1.0e-9\njobs: 2\n")

    cfg = load_run_config(path, tolerances={"perron": 1e-11}, jobs=None, n=6)

    assert cfg.n == 6
    assert cfg.jobs == 2
    assert cfg.tolerances.tie == 1e-9
    assert cfg.tolerances.perron == 1e-11


def test_load_run_config_errors(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_run_config(tmp_path / "missing.yaml")

    path = tmp_path / "list.yaml"
    path.write_text("- 1\n- 2\n")
    with pytest.raises(ValueError):
        load_run_config(path)


def test_config_order_caps():
    with pytest.raises(ValueError):
        RunConfig(subcommand="verify", theorem=2, n=15)
    with pytest.raises(ValueError):
        RunConfig(subcommand="enumerate", graph_class="connected", n=10)
    assert RunConfig(subcommand="enumerate", n=10, allow_order_10=True).n == 10


def test_write_then_load_run_config(tmp_path):
    path = tmp_path / "saved.yaml"
    cfg = RunConfig(subcommand="verify", n=8, theorem=2, jobs=3)

    write_run_config(path, cfg)

    assert load_run_config(path) == cfg


def test_gzip_source(tmp_path):
    path = tmp_path / "graphs.g6.gz"
    with gzip.open(path, "wt", encoding="ascii") as f:
        f.write("Bw\nCs\n")

    with open_graph6_source(path) as source:
        assert [line.strip() for line in source] == ["Bw", "Cs"]


def test_undecodable_bytes_become_replacement_characters(tmp_path):
    path = tmp_path / "graphs.g6"
    path.write_bytes(b"Bw\n\xffA_\nA_\n")

    with open_graph6_source(path) as source:
        lines = [line.strip() for line in source]

    assert lines == ["Bw", "\ufffdA_", "A_"]


def test_undecodable_gzip_bytes(tmp_path):
    path = tmp_path / "graphs.g6.gz"
    with gzip.open(path, "wb") as f:
        f.write(b"\xfe\n")

    with open_graph6_source(path) as source:
        assert source.read() == "\ufffd\n"


def test_missing_source(tmp_path):
    with pytest.raises(FileNotFoundError):
        with open_graph6_source(tmp_path / "nope.g6"):
            pass


def test_write_text(tmp_path, capsys):
    target = tmp_path / "nested" / "out.txt"
    write_text("hello", target)
    write_text("to stdout")

    assert target.read_text() == "hello\n"
    assert capsys.readouterr().out == "to stdout\n"

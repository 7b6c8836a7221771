"""Serialization: round-trips, byte stability, integer-only payloads."""

from __future__ import annotations

import json

import pytest

from artinhol import DegreeVector, Instance, SweepPlan, check_instance, sweep_reports
from artinhol.conditions import ConditionReport
from artinhol.serialize import (
    exit_code_for_report,
    parse_report_document,
    read_sweep_records,
    render_report_human,
    render_report_json,
    render_summary_csv,
    render_summary_json,
    report_document,
    sweep_record_line,
)
from artinhol.sweep import run_sweep, summarize


def _no_floats(node) -> bool:
    if isinstance(node, float):
        return False
    if isinstance(node, dict):
        return all(_no_floats(v) for v in node.values())
    if isinstance(node, list):
        return all(_no_floats(v) for v in node)
    return True


def test_round_trip_on_small_sweep():
    reports = sweep_reports(SweepPlan(DegreeVector((1, 1)), 2))
    for rep in reports:
        text = render_report_json(rep)
        back = parse_report_document(text)
        assert back == rep


def test_round_trip_preserves_labels_and_flags():
    rep = check_instance(
        Instance.of(
            (1, 1, 2),
            (1, -1, 0),
            require_dedekind=False,
            require_trivial_nonneg=True,
            group="S3",
            s0_label="s0=1/2",
        )
    )
    assert parse_report_document(render_report_json(rep)) == rep


def test_no_floating_point_anywhere():
    rep = check_instance(Instance.of((1, 1, 2), (1, -1, 0)))
    assert _no_floats(report_document(rep))
    summary = summarize(sweep_reports(SweepPlan(DegreeVector((1, 1)), 1)))
    assert _no_floats(json.loads(render_summary_json(summary)))


def test_render_is_stable():
    rep = check_instance(Instance.of((1, 1), (1, -1)))
    assert render_report_json(rep) == render_report_json(rep)
    line = sweep_record_line(rep)
    assert line.endswith("\n")
    assert "\n" not in line[:-1]


def test_sweep_file_round_trip(tmp_path):
    out = tmp_path / "records.jsonl"
    run_sweep(SweepPlan(DegreeVector((1, 1)), 1, out_path=out))
    records = read_sweep_records(out)
    assert len(records) == 9
    direct = sweep_reports(SweepPlan(DegreeVector((1, 1)), 1))
    assert records == direct


def test_exit_code_contract():
    rep = check_instance(Instance.of((1, 1), (1, -1)))
    assert rep.equivalence_ok is True
    assert exit_code_for_report(rep) == 0

    inadmissible = check_instance(Instance.of((1, 1), (0, -1)))
    assert inadmissible.equivalence_ok is None
    assert exit_code_for_report(inadmissible) == 0

    # the pipeline never produces a failed equivalence (the four criteria
    # provably agree), so the exit-1 branch is exercised synthetically
    import dataclasses

    broken = dataclasses.replace(rep, equivalence_ok=False)
    assert isinstance(broken, ConditionReport)
    assert exit_code_for_report(broken) == 1


def test_schema_version_checked():
    rep = check_instance(Instance.of((1, 1), (0, 0)))
    doc = report_document(rep)
    doc["schema_version"] = "99"
    with pytest.raises(ValueError, match="schema"):
        parse_report_document(doc)


def test_summary_csv_shape():
    summary = summarize(sweep_reports(SweepPlan(DegreeVector((1, 1)), 1)))
    csv = render_summary_csv(summary)
    lines = csv.strip().split("\n")
    assert lines[0] == "hilbert_size,count"
    assert lines[-1] == f"total,{summary.admissible}"
    assert lines[1:-1] == [f"{s},{n}" for s, n in summary.hilbert_histogram]


def test_human_rendering_mentions_verdicts():
    rep = check_instance(Instance.of((1, 1), (1, -1)))
    text = render_report_human(rep)
    assert "factorial: True" in text
    assert "condition i   : False" in text
    assert "equivalence" in text

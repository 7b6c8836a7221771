"""Bit-stable JSON/CSV serialization of reports and sweep artifacts.

Every number is emitted as a JSON integer, vectors as arrays, and keys in
a fixed insertion order with compact separators, so the same report always
produces the same bytes on every platform.  Schema version "1".
"""

from __future__ import annotations

import json
from typing import Any

from .conditions import ConditionReport, PairWitness
from .core import DegreeVector, Instance, OrderVector
from .sweep import SweepSummary

SCHEMA_VERSION = "1"


def report_document(rep: ConditionReport) -> dict[str, Any]:
    """ConditionReport as a plain dict in canonical key order."""
    inst = rep.instance
    return {
        "schema_version": SCHEMA_VERSION,
        "instance": {
            "r": inst.rank,
            "degrees": list(inst.degrees.entries),
            "orders": list(inst.orders.entries),
            "flags": {
                "require_dedekind": inst.require_dedekind,
                "require_trivial_nonneg": inst.require_trivial_nonneg,
            },
            "labels": {"group": inst.group, "s0": inst.s0_label},
        },
        "admissible": {"ok": rep.admissible, "reasons": list(rep.admissible_reasons)},
        "hilbert": {
            "size": rep.hilbert_size,
            "elements": [list(e) for e in rep.hilbert_elements],
            "engine_agreement": rep.engine_agreement,
        },
        "conditions": {
            "i": rep.cond_i,
            "ii": {
                "ok": rep.cond_ii,
                "pairs": [
                    {
                        "k": pw.k,
                        "l": pw.l,
                        "witness": None if pw.witness is None else list(pw.witness),
                    }
                    for pw in rep.cond_ii_pairs
                ],
            },
            "iii": {"ok": rep.cond_iii, "m": rep.cond_iii_m},
            "ii_prime": {
                "ok": rep.cond_ii_prime,
                "failing_subset": (
                    None
                    if rep.cond_ii_prime_failing is None
                    else list(rep.cond_ii_prime_failing)
                ),
            },
        },
        "factorial": rep.factorial,
        "equivalence_ok": rep.equivalence_ok,
    }


def render_report_json(rep: ConditionReport) -> str:
    return json.dumps(report_document(rep), separators=(",", ":"), ensure_ascii=True)


def parse_report_document(data: str | dict[str, Any]) -> ConditionReport:
    """Rebuild a ConditionReport from its JSON text or parsed document."""
    doc = json.loads(data) if isinstance(data, str) else data
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version {doc.get('schema_version')!r}")
    di = doc["instance"]
    inst = Instance(
        rank=di["r"],
        degrees=DegreeVector(tuple(di["degrees"])),
        orders=OrderVector(tuple(di["orders"])),
        require_dedekind=di["flags"]["require_dedekind"],
        require_trivial_nonneg=di["flags"]["require_trivial_nonneg"],
        group=di["labels"]["group"],
        s0_label=di["labels"]["s0"],
    )
    dh = doc["hilbert"]
    dc = doc["conditions"]
    failing = dc["ii_prime"]["failing_subset"]
    return ConditionReport(
        instance=inst,
        admissible=doc["admissible"]["ok"],
        admissible_reasons=tuple(doc["admissible"]["reasons"]),
        hilbert_size=dh["size"],
        hilbert_elements=tuple(tuple(e) for e in dh["elements"]),
        engine_agreement=dh["engine_agreement"],
        factorial=doc["factorial"],
        cond_i=dc["i"],
        cond_ii=dc["ii"]["ok"],
        cond_ii_pairs=tuple(
            PairWitness(
                p["k"],
                p["l"],
                None if p["witness"] is None else tuple(p["witness"]),
            )
            for p in dc["ii"]["pairs"]
        ),
        cond_iii=dc["iii"]["ok"],
        cond_iii_m=dc["iii"]["m"],
        cond_ii_prime=dc["ii_prime"]["ok"],
        cond_ii_prime_failing=None if failing is None else tuple(failing),
        equivalence_ok=doc["equivalence_ok"],
    )


def sweep_record_line(rep: ConditionReport) -> str:
    """One newline-terminated JSON line for the sweep output stream."""
    return render_report_json(rep) + "\n"


def read_sweep_records(path) -> list[ConditionReport]:
    """Parse a JSON-lines sweep file back into reports."""
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(parse_report_document(line))
    return out


def exit_code_for_report(rep: ConditionReport) -> int:
    """0 when the equivalence holds or is not asserted, 1 when it fails."""
    return 1 if rep.equivalence_ok is False else 0


def render_report_human(rep: ConditionReport) -> str:
    """Tabular plain-text rendering of one report."""
    inst = rep.instance
    lines = [
        f"instance: r={inst.rank} degrees={list(inst.degrees.entries)} "
        f"orders={list(inst.orders.entries)}",
        f"flags: require_dedekind={inst.require_dedekind} "
        f"require_trivial_nonneg={inst.require_trivial_nonneg}",
    ]
    if inst.group or inst.s0_label:
        lines.append(f"labels: group={inst.group} s0={inst.s0_label}")
    if rep.admissible:
        lines.append("admissible: yes")
    else:
        lines.append(f"admissible: no ({'; '.join(rep.admissible_reasons)})")
    lines.append(
        f"hilbert basis ({rep.hilbert_size} elements): "
        + " ".join(str(list(e)) for e in rep.hilbert_elements)
    )
    lines.append(f"factorial: {rep.factorial}")
    lines.append(f"condition i   : {rep.cond_i}")
    lines.append(f"condition ii  : {rep.cond_ii}")
    for pw in rep.cond_ii_pairs:
        wit = "none" if pw.witness is None else str(list(pw.witness))
        lines.append(f"  pair (k={pw.k}, l={pw.l}): {wit}")
    m = "-" if rep.cond_iii_m is None else str(rep.cond_iii_m)
    lines.append(f"condition iii : {rep.cond_iii} (m={m})")
    if rep.cond_ii_prime is None:
        lines.append("condition ii' : not defined (r < 2)")
    else:
        fail = (
            ""
            if rep.cond_ii_prime_failing is None
            else f" (failing subset {list(rep.cond_ii_prime_failing)})"
        )
        lines.append(f"condition ii' : {rep.cond_ii_prime}{fail}")
    eq = "not asserted" if rep.equivalence_ok is None else str(rep.equivalence_ok)
    lines.append(f"equivalence i==ii==iii==ii': {eq}")
    return "\n".join(lines) + "\n"


def summary_document(summary: SweepSummary) -> dict[str, Any]:
    """SweepSummary as a plain dict; wall time is deliberately omitted."""
    return {
        "schema_version": SCHEMA_VERSION,
        "total": summary.total,
        "admissible": summary.admissible,
        "inadmissible": summary.inadmissible,
        "cond_i_true": summary.cond_i_true,
        "cond_i_false": summary.cond_i_false,
        "factorial_not_i": summary.factorial_not_i,
        "hilbert_histogram": {str(size): n for size, n in summary.hilbert_histogram},
        "counterexamples": [list(v) for v in summary.counterexamples],
    }


def render_summary_json(summary: SweepSummary) -> str:
    return json.dumps(summary_document(summary), separators=(",", ":"), ensure_ascii=True)


def render_summary_csv(summary: SweepSummary) -> str:
    """Histogram buckets one per row, then a totals row."""
    lines = ["hilbert_size,count"]
    for size, n in summary.hilbert_histogram:
        lines.append(f"{size},{n}")
    lines.append(f"total,{summary.admissible}")
    return "\n".join(lines) + "\n"


def render_summary_human(summary: SweepSummary) -> str:
    lines = [
        f"instances: {summary.total} "
        f"(admissible {summary.admissible}, inadmissible {summary.inadmissible})",
        f"condition i: true {summary.cond_i_true}, false {summary.cond_i_false}",
        f"factorial but not condition i: {summary.factorial_not_i}",
        "hilbert size histogram: "
        + (
            " ".join(f"{size}:{n}" for size, n in summary.hilbert_histogram)
            or "(empty)"
        ),
        f"counterexamples: {len(summary.counterexamples)}",
    ]
    for v in summary.counterexamples:
        lines.append(f"  equivalence failed at orders={list(v)}")
    lines.append(f"wall time: {summary.wall_time_s:.2f}s")
    return "\n".join(lines) + "\n"

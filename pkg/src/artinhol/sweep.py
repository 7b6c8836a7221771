"""Exhaustive instance sweeps over order-vector boxes, with deterministic output.

A sweep fixes a degree vector and enumerates every order vector in the box
[-B, B]^r in lexicographic order, runs the full condition report on each,
streams one JSON line per instance to the output file, and aggregates a
summary.  Inadmissible instances are recorded with their reasons but never
asserted against.  Work may be split across processes; records are always
written in enumeration order by a single writer, so output bytes do not
depend on the worker count.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field, replace
from functools import partial
from multiprocessing import Pool
from pathlib import Path
from typing import Iterable, Iterator

from .conditions import ConditionReport, check_instance
from .core import DegreeVector, Instance, OrderVector
from .errors import CapExceededError, MixedPlansError

DEFAULT_INSTANCE_CAP = 10_000_000


@dataclass(frozen=True)
class SweepPlan:
    """One sweep: degrees, box radius, flags, parallelism, output path."""

    degrees: DegreeVector
    order_bound: int
    require_dedekind: bool = True
    require_trivial_nonneg: bool = False
    worker_count: int = 1
    out_path: str | Path | None = None
    group: str | None = None
    instance_cap: int = DEFAULT_INSTANCE_CAP

    def __post_init__(self):
        if self.order_bound < 1:
            raise ValueError("order bound must be >= 1")
        if self.worker_count < 1:
            raise ValueError("worker count must be >= 1")


@dataclass(frozen=True)
class SweepSummary:
    """Aggregate counts for one sweep.

    Condition statistics and the size histogram cover admissible instances
    only; inadmissible ones are counted but not asserted against.  Wall
    time is informational and excluded from equality.
    """

    total: int
    admissible: int
    inadmissible: int
    cond_i_true: int
    cond_i_false: int
    factorial_not_i: int
    hilbert_histogram: tuple[tuple[int, int], ...]
    counterexamples: tuple[tuple[int, ...], ...]
    wall_time_s: float = field(default=0.0, compare=False)


def enumerate_order_vectors(
    r: int, bound: int, cap: int = DEFAULT_INSTANCE_CAP
) -> Iterator[OrderVector]:
    """Yield all (2B+1)^r order vectors in the box, lexicographically.

    Raises CapExceededError up front if r * (2B+1)^r exceeds the cap.
    """
    if r < 1 or bound < 1:
        raise ValueError("need r >= 1 and bound >= 1")
    size = (2 * bound + 1) ** r
    if r * size > cap:
        raise CapExceededError(f"sweep of r*{size} entries exceeds cap {cap}")
    for entries in itertools.product(range(-bound, bound + 1), repeat=r):
        yield OrderVector(entries)


def _check_one(
    degree_entries: tuple[int, ...],
    require_dedekind: bool,
    require_trivial_nonneg: bool,
    group: str | None,
    v_entries: tuple[int, ...],
) -> ConditionReport:
    inst = Instance.of(
        DegreeVector(degree_entries),
        OrderVector(v_entries),
        require_dedekind=require_dedekind,
        require_trivial_nonneg=require_trivial_nonneg,
        group=group,
    )
    return check_instance(inst)


def sweep_reports(plan: SweepPlan) -> list[ConditionReport]:
    """Run the plan's instances and return reports in enumeration order."""
    r = plan.degrees.rank
    vectors = [
        v.entries for v in enumerate_order_vectors(r, plan.order_bound, plan.instance_cap)
    ]
    worker = partial(
        _check_one,
        plan.degrees.entries,
        plan.require_dedekind,
        plan.require_trivial_nonneg,
        plan.group,
    )
    if plan.worker_count == 1:
        return [worker(v) for v in vectors]
    chunk = max(1, len(vectors) // (plan.worker_count * 8))
    with Pool(plan.worker_count) as pool:
        return list(pool.imap(worker, vectors, chunksize=chunk))


def summarize(records: Iterable[ConditionReport]) -> SweepSummary:
    """Aggregate a record stream from a single plan into a SweepSummary.

    Raises MixedPlansError if records disagree on rank, degrees, or flags.
    """
    key = None
    total = admissible = 0
    ci_true = ci_false = factorial_not_i = 0
    histogram: dict[int, int] = {}
    counterexamples: list[tuple[int, ...]] = []
    for rep in records:
        inst = rep.instance
        this_key = (
            inst.rank,
            inst.degrees.entries,
            inst.require_dedekind,
            inst.require_trivial_nonneg,
        )
        if key is None:
            key = this_key
        elif key != this_key:
            raise MixedPlansError(f"record {this_key} does not match plan {key}")
        total += 1
        if rep.admissible:
            admissible += 1
            if rep.cond_i:
                ci_true += 1
            else:
                ci_false += 1
            if rep.factorial and not rep.cond_i:
                factorial_not_i += 1
            histogram[rep.hilbert_size] = histogram.get(rep.hilbert_size, 0) + 1
        if rep.equivalence_ok is False:
            counterexamples.append(inst.orders.entries)
    return SweepSummary(
        total=total,
        admissible=admissible,
        inadmissible=total - admissible,
        cond_i_true=ci_true,
        cond_i_false=ci_false,
        factorial_not_i=factorial_not_i,
        hilbert_histogram=tuple(sorted(histogram.items())),
        counterexamples=tuple(counterexamples),
    )


def run_sweep(plan: SweepPlan) -> SweepSummary:
    """Execute the plan: compute reports, write records, return the summary."""
    from .serialize import sweep_record_line

    t0 = time.perf_counter()
    reports = sweep_reports(plan)
    if plan.out_path is not None:
        path = Path(plan.out_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as fh:
            for rep in reports:
                fh.write(sweep_record_line(rep))
    summary = summarize(reports)
    return replace(summary, wall_time_s=time.perf_counter() - t0)

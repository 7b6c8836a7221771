"""Sweep machinery: enumeration, aggregation, determinism, partitioning."""

from __future__ import annotations

import pytest

from artinhol import (
    DegreeVector,
    Instance,
    SweepPlan,
    check_instance,
    enumerate_order_vectors,
    run_sweep,
    summarize,
    sweep_reports,
)
from artinhol.errors import CapExceededError, MixedPlansError


class TestEnumerate:
    def test_rank_one(self):
        got = [v.entries for v in enumerate_order_vectors(1, 1)]
        assert got == [(-1,), (0,), (1,)]

    def test_rank_two_order(self):
        got = [v.entries for v in enumerate_order_vectors(2, 1)]
        assert len(got) == 9
        assert got[0] == (-1, -1)
        assert got[-1] == (1, 1)
        assert got == sorted(got)
        assert len(set(got)) == 9

    def test_rank_three_count(self):
        assert sum(1 for _ in enumerate_order_vectors(3, 2)) == 125

    def test_cap(self):
        with pytest.raises(CapExceededError):
            list(enumerate_order_vectors(10, 3, cap=1000))


class TestRunSweep:
    def test_hand_enumerated_b1(self, tmp_path):
        out = tmp_path / "b1.jsonl"
        plan = SweepPlan(DegreeVector((1, 1)), 1, out_path=out)
        summary = run_sweep(plan)
        assert summary.total == 9
        assert summary.admissible == 6
        assert summary.inadmissible == 3
        assert summary.counterexamples == ()
        assert out.read_text().count("\n") == 9

    def test_b2_contains_factorial_not_i(self):
        summary = run_sweep(SweepPlan(DegreeVector((1, 1)), 2))
        assert summary.counterexamples == ()
        assert summary.factorial_not_i >= 1  # v=(1,-1) among others

    def test_r3_family(self):
        summary = run_sweep(SweepPlan(DegreeVector((1, 1, 2)), 2))
        assert summary.total == 125
        assert summary.counterexamples == ()

    def test_partition_soundness(self):
        reports = sweep_reports(SweepPlan(DegreeVector((1, 1)), 2))
        vs = [r.instance.orders.entries for r in reports]
        assert len(vs) == len(set(vs)) == 25
        summary = summarize(reports)
        assert summary.total == summary.admissible + summary.inadmissible

    def test_monotone_admissible_set(self):
        def admissible_set(bound):
            return {
                r.instance.orders.entries
                for r in sweep_reports(SweepPlan(DegreeVector((1, 1)), bound))
                if r.admissible
            }

        assert admissible_set(1) <= admissible_set(2)

    def test_worker_determinism(self, tmp_path):
        out1 = tmp_path / "w1.jsonl"
        out2 = tmp_path / "w2.jsonl"
        s1 = run_sweep(SweepPlan(DegreeVector((1, 1, 2)), 1, worker_count=1, out_path=out1))
        s2 = run_sweep(SweepPlan(DegreeVector((1, 1, 2)), 1, worker_count=2, out_path=out2))
        assert out1.read_bytes() == out2.read_bytes()
        assert s1 == s2  # wall time excluded from equality


class TestSummarize:
    def test_empty(self):
        s = summarize([])
        assert s.total == 0
        assert s.admissible == 0
        assert s.hilbert_histogram == ()
        assert s.counterexamples == ()

    def test_single_report(self):
        rep = check_instance(Instance.of((1, 1), (0, 0)))
        s = summarize([rep])
        assert s.total == 1
        assert s.admissible == 1
        assert s.cond_i_true == 1
        assert s.hilbert_histogram == ((2, 1),)

    def test_histogram_matches_recompute(self):
        reports = sweep_reports(SweepPlan(DegreeVector((1, 1)), 1))
        s = summarize(reports)
        expect: dict[int, int] = {}
        for r in reports:
            if r.admissible:
                expect[r.hilbert_size] = expect.get(r.hilbert_size, 0) + 1
        assert dict(s.hilbert_histogram) == expect

    def test_mixed_plans_rejected(self):
        a = check_instance(Instance.of((1, 1), (0, 0)))
        b = check_instance(Instance.of((1, 2), (0, 0)))
        with pytest.raises(MixedPlansError):
            summarize([a, b])
        c = check_instance(Instance.of((1, 1), (0, 0), require_dedekind=False))
        with pytest.raises(MixedPlansError):
            summarize([a, c])


class TestPlanValidation:
    def test_bounds(self):
        with pytest.raises(ValueError):
            SweepPlan(DegreeVector((1, 1)), 0)
        with pytest.raises(ValueError):
            SweepPlan(DegreeVector((1, 1)), 1, worker_count=0)

"""Command-line surface: check, hilbert, factorize, sweep, catalog.

Exit codes: 0 when all checked assertions hold, 1 when an equivalence
failure or counterexample is found, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import catalog_groups, get_group
from .conditions import check_instance
from .core import DegreeVector, Instance, OrderVector
from .errors import ArtinHolError
from .hilbert import (
    count_factorizations,
    hilbert_basis_frontier,
    hilbert_basis_oracle,
)
from .serialize import (
    SCHEMA_VERSION,
    exit_code_for_report,
    render_report_human,
    render_report_json,
    render_summary_csv,
    render_summary_human,
    render_summary_json,
)
from .sweep import SweepPlan, run_sweep


def _int_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="artinhol",
        description="Hilbert bases and holomorphy criteria for Artin L-function semigroups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="full condition report for one instance")
    p_check.add_argument("--degrees", type=_int_vector, required=True)
    p_check.add_argument("--orders", type=_int_vector, required=True)
    p_check.add_argument("--group", default=None, help="group label (informational)")
    p_check.add_argument("--s0", default=None, help="point label (opaque string)")
    p_check.add_argument("--no-require-dedekind", action="store_true")
    p_check.add_argument("--require-trivial-nonneg", action="store_true")
    p_check.add_argument("--json", action="store_true")

    p_hilbert = sub.add_parser("hilbert", help="Hilbert basis of Hol for one order vector")
    p_hilbert.add_argument("--orders", type=_int_vector, required=True)
    p_hilbert.add_argument(
        "--engine",
        choices=["oracle", "enum", "frontier"],
        default="oracle",
        help="enum is an alias for the box-enumeration oracle",
    )
    p_hilbert.add_argument(
        "--oracle-verify",
        action="store_true",
        help="run both engines and require identical bases",
    )
    p_hilbert.add_argument("--json", action="store_true")

    p_fact = sub.add_parser("factorize", help="count basis factorizations of an element")
    p_fact.add_argument("--orders", type=_int_vector, required=True)
    p_fact.add_argument("--element", type=_int_vector, required=True)
    p_fact.add_argument("--cap", type=int, default=2)
    p_fact.add_argument("--json", action="store_true")

    p_sweep = sub.add_parser("sweep", help="exhaustive sweep over an order-vector box")
    src = p_sweep.add_mutually_exclusive_group(required=True)
    src.add_argument("--degrees", type=_int_vector, default=None)
    src.add_argument("--group", default=None, help="catalog group supplying the degrees")
    p_sweep.add_argument("--order-bound", type=int, default=2)
    p_sweep.add_argument("--workers", type=int, default=1)
    p_sweep.add_argument("--out", default=None, help="JSON-lines record file")
    p_sweep.add_argument("--summary-json", default=None)
    p_sweep.add_argument("--csv", default=None)
    p_sweep.add_argument("--no-require-dedekind", action="store_true")
    p_sweep.add_argument("--require-trivial-nonneg", action="store_true")

    p_cat = sub.add_parser("catalog", help="list or show built-in group degree data")
    p_cat.add_argument("action", choices=["list", "show"])
    p_cat.add_argument("name", nargs="?", default=None)

    return parser


def _cmd_check(args, parser) -> int:
    if len(args.degrees) != len(args.orders):
        parser.error(
            f"degrees ({len(args.degrees)}) and orders ({len(args.orders)}) "
            "must have the same length"
        )
    inst = Instance.of(
        DegreeVector(args.degrees),
        OrderVector(args.orders),
        require_dedekind=not args.no_require_dedekind,
        require_trivial_nonneg=args.require_trivial_nonneg,
        group=args.group,
        s0_label=args.s0,
    )
    rep = check_instance(inst)
    if args.json:
        print(render_report_json(rep))
    else:
        print(render_report_human(rep), end="")
    return exit_code_for_report(rep)


def _cmd_hilbert(args) -> int:
    v = OrderVector(args.orders)
    engine = "oracle" if args.engine in ("oracle", "enum") else "frontier"
    basis = hilbert_basis_oracle(v) if engine == "oracle" else hilbert_basis_frontier(v)
    agree = None
    if args.oracle_verify:
        other = hilbert_basis_frontier(v) if engine == "oracle" else hilbert_basis_oracle(v)
        agree = basis.elements == other.elements
    doc = {
        "schema_version": SCHEMA_VERSION,
        "orders": list(v.entries),
        "engine": engine,
        "hilbert": {
            "size": len(basis.elements),
            "elements": [list(e) for e in basis.elements],
        },
        "engines_agree": agree,
    }
    if args.json:
        print(json.dumps(doc, separators=(",", ":"), ensure_ascii=True))
    else:
        print(f"orders: {list(v.entries)}")
        print(f"engine: {engine}")
        print(f"hilbert basis ({len(basis.elements)} elements):")
        for e in basis.elements:
            print(f"  {list(e)}")
        if agree is not None:
            print(f"engines agree: {agree}")
    if agree is False:
        return 1
    return 0


def _cmd_factorize(args, parser) -> int:
    if len(args.orders) != len(args.element):
        parser.error("orders and element must have the same length")
    v = OrderVector(args.orders)
    basis = hilbert_basis_oracle(v)
    fc = count_factorizations(args.element, basis, cap=args.cap)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "orders": list(v.entries),
        "element": list(fc.element),
        "basis": [list(e) for e in basis.elements],
        "count": fc.count,
        "cap": args.cap,
        "witnesses": [list(w) for w in fc.witnesses],
    }
    if args.json:
        print(json.dumps(doc, separators=(",", ":"), ensure_ascii=True))
    else:
        print(f"element {list(fc.element)} factors {fc.count} way(s) (cap {args.cap})")
        for w in fc.witnesses:
            parts = " + ".join(
                f"{c}*{list(e)}" for c, e in zip(w, basis.elements) if c
            )
            print(f"  {parts or '(empty product)'}")
    return 0


def _cmd_sweep(args, parser) -> int:
    if args.group is not None:
        try:
            degrees = get_group(args.group).degrees
        except KeyError as exc:
            parser.error(str(exc))
        group = args.group
    else:
        degrees = DegreeVector(args.degrees)
        group = None
    plan = SweepPlan(
        degrees=degrees,
        order_bound=args.order_bound,
        require_dedekind=not args.no_require_dedekind,
        require_trivial_nonneg=args.require_trivial_nonneg,
        worker_count=args.workers,
        out_path=args.out,
        group=group,
    )
    summary = run_sweep(plan)
    print(render_summary_human(summary), end="")
    if args.summary_json:
        Path(args.summary_json).write_text(
            render_summary_json(summary) + "\n", encoding="utf-8"
        )
    if args.csv:
        Path(args.csv).write_text(render_summary_csv(summary), encoding="utf-8")
    return 1 if summary.counterexamples else 0


def _cmd_catalog(args, parser) -> int:
    if args.action == "show":
        if args.name is None:
            parser.error("catalog show needs a group name")
        try:
            entries = [get_group(args.name)]
        except KeyError as exc:
            parser.error(str(exc))
    else:
        entries = list(catalog_groups())
    doc = {
        "schema_version": SCHEMA_VERSION,
        "groups": [
            {
                "name": e.name,
                "order": e.order,
                "degrees": list(e.degrees.entries),
                "class_count": e.class_count,
            }
            for e in entries
        ],
    }
    print(json.dumps(doc, separators=(",", ":"), ensure_ascii=True))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "check":
            return _cmd_check(args, parser)
        if args.command == "hilbert":
            return _cmd_hilbert(args)
        if args.command == "factorize":
            return _cmd_factorize(args, parser)
        if args.command == "sweep":
            return _cmd_sweep(args, parser)
        if args.command == "catalog":
            return _cmd_catalog(args, parser)
    except ArtinHolError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    raise SystemExit(main())

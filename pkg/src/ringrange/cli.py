"""Command line interface.

Subcommands: analyze, decide, corpus, mine-open-question, q-check.
Exit codes: 0 on success (for `corpus`, success means zero implication
violations), 1 on violations or failed checks, 2 on unusable arguments.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import CapExceededError, RingSpecError
from .harness import (
    CorpusConfig,
    generate_corpus,
    mine_open_question,
    property_vector,
    report_to_csv,
    report_to_json,
    run_corpus,
)
from .properties import DESCRIPTIONS, PropertyId, decide
from .quotient import check_q_theorems
from .rings import realize


def _property_id(text: str) -> PropertyId:
    key = text.strip().upper().replace("-", "_")
    try:
        return PropertyId(key)
    except ValueError:
        raise RingSpecError(
            f"unknown property {text!r}; choose from: "
            + ", ".join(p.value.lower() for p in PropertyId)
        )


def _print_vector(pv, as_json: bool) -> None:
    if as_json:
        print(json.dumps(pv.to_json(), indent=2, sort_keys=True))
        return
    print(f"ring {pv.spec}  (order {pv.order}, units {pv.units}, "
          f"idempotents {pv.idempotents}, regulars {pv.regulars})")
    for prop, verdict in pv.verdicts.items():
        if verdict.holds is None:
            value = verdict.status
        else:
            value = "true" if verdict.holds else "false"
        line = f"  {prop.value:<16} {value}"
        if verdict.witness:
            line += f"  {json.dumps(verdict.witness, sort_keys=True)}"
        print(line)
    if pv.q_report:
        for check in pv.q_report.get("checks", []):
            print(f"  [q] {check['id']:<38} {check['status']}")


def _cmd_analyze(args) -> int:
    ring = realize(args.ring_spec)
    cfg = CorpusConfig(sr2_cap=args.sr2_cap)
    pv = property_vector(ring, cfg)
    _print_vector(pv, args.json)
    return 0


def _cmd_decide(args) -> int:
    prop = _property_id(args.property)
    ring = realize(args.ring_spec)
    try:
        verdict = decide(prop, ring, sr2_cap=args.sr2_cap)
    except CapExceededError as exc:
        print(f"{prop.value} on {ring.label}: undecided-by-search ({exc})")
        return 0
    value = "true" if verdict.holds else "false"
    print(f"{prop.value} on {ring.label}: {value}")
    print(f"  meaning: {DESCRIPTIONS[prop]}")
    if verdict.witness:
        print(f"  witness: {json.dumps(verdict.witness, sort_keys=True)}")
    return 0


def _cmd_corpus(args) -> int:
    kwargs = {"sr2_cap": args.sr2_cap}
    if args.max_order is not None:
        kwargs["max_modular_n"] = args.max_order
        kwargs["product_order_cap"] = args.max_order
    if args.timeout is not None:
        kwargs["per_ring_timeout_s"] = args.timeout
    cfg = CorpusConfig(**kwargs)
    progress = None
    if args.verbose:
        progress = lambda i, total, label: print(f"[{i + 1}/{total}] {label}", file=sys.stderr)
    report = run_corpus(cfg, progress=progress)
    text = report_to_csv(report) if args.format == "csv" else report_to_json(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"report written to {args.out}")
    else:
        print(text)
    summary = report["summary"]
    print(
        f"rings: {summary['rings']}  implication violations: {summary['violation_count']}",
        file=sys.stderr,
    )
    return 1 if summary["violation_count"] else 0


def _cmd_mine(args) -> int:
    kwargs = {}
    if args.max_order is not None:
        kwargs["max_modular_n"] = args.max_order
        kwargs["product_order_cap"] = args.max_order
    cfg = CorpusConfig(**kwargs)
    rings = generate_corpus(cfg)
    vectors = [property_vector(r, cfg) for r in rings]
    report = mine_open_question(vectors)
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"report written to {args.out}")
    else:
        print(text)
    return 1 if report["counterexamples"] else 0


def _cmd_qcheck(args) -> int:
    ring = realize(args.ring_spec)
    report = check_q_theorems(ring)
    print(json.dumps(report, indent=2, sort_keys=True))
    failed = any(c["status"] == "fail" for c in report["checks"])
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringrange",
        description="finite commutative ring analyzer: range conditions, "
        "decompositions, quotient checks, corpus audits",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full property vector for one ring")
    p.add_argument("ring_spec", help='e.g. "Z36", "Z4 x Z9", "Z4[x]/(x^2)"')
    p.add_argument("--json", action="store_true", help="emit the vector as JSON")
    p.add_argument("--sr2-cap", type=int, default=64)
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("decide", help="decide one property for one ring")
    p.add_argument("property", help="e.g. sr1, bezout, sh-local")
    p.add_argument("ring_spec")
    p.add_argument("--sr2-cap", type=int, default=64)
    p.set_defaults(fn=_cmd_decide)

    p = sub.add_parser("corpus", help="generate the corpus and audit every implication rule")
    p.add_argument("--max-order", type=int, default=None, help="cap modular n and product order")
    p.add_argument("--out", default=None, help="write the report to this file")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--sr2-cap", type=int, default=64)
    p.add_argument("--timeout", type=float, default=None, help="per-ring budget in seconds")
    p.add_argument("--verbose", action="store_true", help="progress on stderr")
    p.set_defaults(fn=_cmd_corpus)

    p = sub.add_parser("mine-open-question", help="search for almost clean rings failing idempotent regular range 1")
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_mine)

    p = sub.add_parser("q-check", help="quotient-ring theorem report for one ring")
    p.add_argument("ring_spec")
    p.set_defaults(fn=_cmd_qcheck)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (RingSpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

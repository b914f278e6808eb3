"""Command-line interface: analyze, candidates, exclude, verify, catalog, explore.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage or parse
errors.  All output is deterministic: identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .candidates import Candidate, enumerate_candidates, integer_partitions
from .catalog import MAX_CATALOG_ORDER, catalog_search, catalog_validate
from .census import Signature, census
from .exclusion import apply_rules, revised_table
from .expressions import GroupExpressionError, parse_group
from .verify import explore, known_groups_for, property_suite, verify_all, verify_theorem

USAGE_ERROR = 2
VERIFICATION_FAILURE = 1


def _sig_str(entries: Sequence[int]) -> str:
    return "(" + ",".join(str(e) for e in entries) + ")"


def _partition_str(partition: Sequence[int]) -> str:
    return "+".join(str(p) for p in partition)


def _emit(stream, text: str) -> None:
    stream.write(text + "\n")


# ---------------------------------------------------------------------------
# analyze


def _cmd_analyze(args, out) -> int:
    try:
        table = parse_group(args.expr)
    except (GroupExpressionError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_ERROR
    report = census(table)
    if args.format == "json":
        payload = {"group": table.name, "census": report.to_json_dict()}
        _emit(out, json.dumps(payload, indent=2))
        return 0
    _emit(out, f"group: {table.name}")
    _emit(out, f"order: {report.group_order}")
    _emit(out, "n_d: " + " ".join(f"{d}:{c}" for d, c in report.n_d))
    _emit(out, f"cyclic subgroups: {report.total_cyclic}")
    _emit(out, f"delta: {report.delta}")
    _emit(out, f"sigma: {_sig_str(report.signature.entries)}")
    return 0


# ---------------------------------------------------------------------------
# candidates


def _rows_by_partition(delta: int, cands: list[Candidate]):
    by_partition: dict[tuple[int, ...], list[Signature]] = {
        p: [] for p in integer_partitions(delta)}
    for cand in cands:
        for row in cand.rows:
            by_partition[row.partition].append(cand.signature)
    return by_partition


def _cmd_candidates(args, out) -> int:
    cands = enumerate_candidates(args.delta)
    if args.format == "json":
        payload = {
            "delta": args.delta,
            "count": len(cands),
            "candidates": [
                {
                    "signature": list(c.signature.entries),
                    "rows": [{"partition": list(r.partition),
                              "factorization": [list(f) for f in r.factorization]}
                             for r in c.rows],
                }
                for c in cands
            ],
        }
        _emit(out, json.dumps(payload, indent=2))
        return 0
    by_partition = _rows_by_partition(args.delta, cands)
    if args.format == "latex":
        _emit(out, "\\begin{table}[ht]")
        _emit(out, f"\\caption{{Table for $\\Delta(G)={args.delta}$}}")
        _emit(out, "\\centering")
        _emit(out, "\\begin{tabular}{|c|c|}")
        _emit(out, "\\hline")
        _emit(out, "Partition & $\\sigma(G)$ \\\\")
        _emit(out, "\\hline")
        for partition, sigs in by_partition.items():
            body = ", ".join(_sig_str(s.entries) for s in sorted(sigs)) or "none"
            _emit(out, f"{_partition_str(partition)} & {body} \\\\")
            _emit(out, "\\hline")
        _emit(out, "\\end{tabular}")
        _emit(out, "\\end{table}")
        return 0
    _emit(out, f"candidate signatures for delta = {args.delta}: {len(cands)}")
    for partition, sigs in by_partition.items():
        body = ", ".join(_sig_str(s.entries) for s in sorted(sigs)) or "none"
        _emit(out, f"  {_partition_str(partition):<12} {body}")
    return 0


# ---------------------------------------------------------------------------
# exclude


def _cmd_exclude(args, out) -> int:
    cands = enumerate_candidates(args.delta)
    verdicts = [apply_rules(c.signature) for c in cands]
    excluded = [v for v in verdicts if v.excluded]
    survivors = [v.signature for v in verdicts if not v.excluded]
    if args.format == "json":
        payload = {
            "delta": args.delta,
            "candidates": [list(c.signature.entries) for c in cands],
            "exclusions": [
                {"signature": list(v.signature.entries),
                 "rules": list(v.fired_rules),
                 "recorded_rule": v.recorded_rule}
                for v in excluded
            ],
            "survivors": [list(s.entries) for s in survivors],
            "counts": {"candidates": len(cands), "excluded": len(excluded),
                       "survivors": len(survivors)},
        }
        _emit(out, json.dumps(payload, indent=2))
        return 0
    if args.format == "latex":
        _emit(out, "\\begin{table}[ht]")
        _emit(out, f"\\caption{{Table for $\\Delta(G)={args.delta}$}}")
        _emit(out, "\\centering")
        _emit(out, "\\begin{tabular}{|c|c|}")
        _emit(out, "\\hline")
        _emit(out, "Partition & $\\sigma(G)$ \\\\")
        _emit(out, "\\hline")
        for partition, sigs in _rows_by_partition(args.delta, cands).items():
            body = ", ".join(_sig_str(s.entries) for s in sorted(sigs)) or "none"
            _emit(out, f"{_partition_str(partition)} & {body} \\\\")
            _emit(out, "\\hline")
        _emit(out, "\\end{tabular}")
        _emit(out, "\\end{table}")
        _emit(out, "\\begin{table}[ht]")
        _emit(out, f"\\caption{{Exclusion table for $\\Delta(G)={args.delta}$}}")
        _emit(out, "\\centering")
        _emit(out, "\\begin{tabular}{|c|l|}")
        _emit(out, "\\hline")
        _emit(out, "$\\sigma(G)$ & Excluded by \\\\")
        _emit(out, "\\hline")
        for v in excluded:
            rule = (v.recorded_rule or v.fired_rules[0]).replace("_", "\\_")
            _emit(out, f"{_sig_str(v.signature.entries)} & {rule} \\\\")
        _emit(out, "\\hline")
        _emit(out, "\\end{tabular}")
        _emit(out, "\\end{table}")
        _emit(out, "\\begin{table}[ht]")
        _emit(out, f"\\caption{{Revised table for $\\Delta(G)={args.delta}$}}")
        _emit(out, "\\centering")
        _emit(out, "\\begin{tabular}{|c|c|}")
        _emit(out, "\\hline")
        _emit(out, "$\\sigma(G)$ & Groups \\\\")
        _emit(out, "\\hline")
        for sig in survivors:
            known = known_groups_for(sig)
            body = ", ".join(r.label for r in known) if known else ""
            _emit(out, f"{_sig_str(sig.entries)} & {body} \\\\")
        _emit(out, "\\hline")
        _emit(out, "\\end{tabular}")
        _emit(out, "\\end{table}")
        return 0
    _emit(out, f"delta = {args.delta}: {len(cands)} candidates,"
               f" {len(excluded)} excluded, {len(survivors)} survivors")
    _emit(out, "candidates:")
    for c in cands:
        _emit(out, f"  {_sig_str(c.signature.entries)}")
    _emit(out, "excluded:")
    for v in excluded:
        tag = v.recorded_rule or v.fired_rules[0]
        extra = ""
        others = [r for r in v.fired_rules if r != tag]
        if others:
            extra = f"  (also: {', '.join(others)})"
        _emit(out, f"  {_sig_str(v.signature.entries):<20} {tag}{extra}")
    _emit(out, "survivors:")
    for sig in survivors:
        _emit(out, f"  {_sig_str(sig.entries)}")
    return 0


# ---------------------------------------------------------------------------
# verify


def _cmd_verify(args, out) -> int:
    if args.all:
        report = verify_all()
    else:
        report = verify_theorem(args.delta)
        report.merge(catalog_validate())
    if args.format == "json":
        _emit(out, json.dumps(report.to_json_dict(), indent=2))
    else:
        for claim in report.claims:
            status = "ok" if claim.passed else "FAIL"
            _emit(out, f"claim delta={claim.delta} {claim.label:<12}"
                       f" order={claim.order:<3} delta={claim.delta_computed}"
                       f" sigma={_sig_str(claim.sigma_computed)} {status}")
        for check in report.sweep + report.properties:
            status = "ok" if check.passed else "FAIL"
            _emit(out, f"check {check.name}: {status}  {check.detail}")
        _emit(out, "PASS" if report.passed else "FAIL")
    return 0 if report.passed else VERIFICATION_FAILURE


# ---------------------------------------------------------------------------
# catalog


def _cmd_catalog(args, out) -> int:
    sigma = None
    if args.sigma:
        try:
            entries = tuple(int(tok) for tok in args.sigma.split(","))
            sigma = Signature.from_iterable(entries)
        except ValueError as err:
            print(f"error: bad --sigma: {err}", file=sys.stderr)
            return USAGE_ERROR
    try:
        hits = catalog_search(args.max_order, delta=args.delta, sigma=sigma)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_ERROR
    if args.format == "json":
        payload = [{"order": e.order, "index": e.index, "label": e.label,
                    "census": r.to_json_dict()} for e, r in hits]
        _emit(out, json.dumps(payload, indent=2))
        return 0
    for entry, report in hits:
        _emit(out, f"{entry.order:>2} {entry.index:>2} {entry.label:<14}"
                   f" delta={report.delta:<3}"
                   f" sigma={_sig_str(report.signature.entries)}")
    _emit(out, f"{len(hits)} groups")
    return 0


# ---------------------------------------------------------------------------
# explore


def _cmd_explore(args, out) -> int:
    survivors = explore(args.delta)
    if args.format == "json":
        payload = {"delta": args.delta,
                   "survivors": [s.to_json_dict() for s in survivors]}
        _emit(out, json.dumps(payload, indent=2))
        return 0
    _emit(out, f"delta = {args.delta}: {len(survivors)} surviving signatures")
    for surv in survivors:
        if surv.known is not None:
            status = "classified: " + ", ".join(surv.known)
        else:
            status = "undecided"
        _emit(out, f"  {_sig_str(surv.signature.entries):<20} {status}")
        for entry, rep in surv.witnesses:
            _emit(out, f"    witness {entry.label} (order {entry.order},"
                       f" delta {rep.delta})")
    return 0


# ---------------------------------------------------------------------------
# driver


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupcensus",
        description="Cyclic-subgroup census of small finite groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="census of one constructed group")
    p.add_argument("expr", help="group expression, e.g. 'D8 x C2'")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("candidates", help="possible signatures for a delta")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--format", choices=["table", "json", "latex"],
                   default="table")

    p = sub.add_parser("exclude", help="exclusion and revised tables")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--format", choices=["table", "json", "latex"],
                   default="table")

    p = sub.add_parser("verify", help="verify the classification")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--delta", type=int)
    group.add_argument("--all", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("catalog", help="search the bundled catalog")
    p.add_argument("--max-order", type=int, default=MAX_CATALOG_ORDER)
    p.add_argument("--delta", type=int, default=None)
    p.add_argument("--sigma", type=str, default=None,
                   help="comma-separated entries, e.g. 4,4,4")
    p.add_argument("--format", choices=["table", "json"], default="table")

    p = sub.add_parser("explore", help="survivors beyond the classified range")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--format", choices=["table", "json"], default="table")

    return parser


_COMMANDS = {
    "analyze": _cmd_analyze,
    "candidates": _cmd_candidates,
    "exclude": _cmd_exclude,
    "verify": _cmd_verify,
    "catalog": _cmd_catalog,
    "explore": _cmd_explore,
}


def run(argv: Sequence[str], out=None) -> int:
    """Parse arguments and run one subcommand; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = out if out is not None else sys.stdout
    try:
        return _COMMANDS[args.command](args, out)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_ERROR


def main() -> None:
    sys.exit(run(sys.argv[1:]))

"""Command-line interface: every number printed is an exact integer or rational."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from enum import Enum

from .admissibility import plane_status
from .bundles import NearlySplitData, sym_cohomology
from .classify import (
    Bucket,
    ClassRecord,
    EnumerationBounds,
    admissibility_label,
    enumerate_records,
    paper_table,
)
from .invariants import (
    GeneralSurfaceData,
    KappaEstimate,
    general_invariants,
    plane_invariants,
    slope,
)


class OutputFormat(Enum):
    MARKDOWN = "markdown"
    CSV = "csv"
    JSON = "json"


COLUMNS = ("kappa", "pg", "q", "K2", "d", "c1", "c2", "c3", "admissibility")

# Trailing * marks an evidence level (certified only up to the plurigenus cutoff).
_KAPPA_CELL = {
    KappaEstimate.MINUS_INFINITY_EVIDENCE: "-inf*",
    KappaEstimate.ZERO_EVIDENCE: "0*",
    KappaEstimate.ONE_EVIDENCE: "1*",
    KappaEstimate.TWO_CERTIFIED: "2",
    KappaEstimate.UNKNOWN: "?",
}

_CLI_TABLE_NAMES = {
    "table1": "table1",
    "notgeneral": "not_general_type",
    "nonminimal": "nonminimal_or_small_pg",
}

_CLI_BUCKETS = {
    "all": tuple(Bucket),
    "notgeneral": (Bucket.NOT_GENERAL_TYPE,),
    "nonminimal": (
        Bucket.GENERAL_TYPE_NON_MINIMAL,
        Bucket.MINIMAL_GENERAL_TYPE_SMALL_PG,
    ),
}


def to_json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad flags; the contract here is exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _triple(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected three comma-separated integers, e.g. 2,1,1")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer triple: {text!r}") from None


def _row_cells(rec: ClassRecord) -> tuple[str, ...]:
    inv = rec.inv
    return (
        _KAPPA_CELL[inv.kappa],
        str(inv.pg),
        str(inv.q),
        str(inv.K2),
        str(rec.data.d),
        str(rec.data.c[0]),
        str(rec.data.c[1]),
        str(rec.data.c[2]),
        admissibility_label(rec),
    )


def _record_json(rec: ClassRecord) -> dict:
    inv = rec.inv
    return {
        "d": rec.data.d,
        "c": list(rec.data.c),
        "admissibility": admissibility_label(rec),
        "status": rec.status.level.value,
        "bucket": rec.bucket.value,
        "K2": inv.K2,
        "chi": inv.chi,
        "pg": inv.pg,
        "q": inv.q,
        "chi2K": inv.chi2K,
        "kappa_estimate": inv.kappa.value,
        "general_type": rec.minimality.general_type,
        "minimal": rec.minimality.minimal,
        "plurigenera": [[p.m, p.value, p.exact] for p in inv.plurigenera],
    }


def render_records(records, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return to_json([_record_json(rec) for rec in records])
    rows = [_row_cells(rec) for rec in records]
    if fmt is OutputFormat.CSV:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(COLUMNS)
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    lines = ["| " + " | ".join(COLUMNS) + " |", "| " + " | ".join("---" for _ in COLUMNS) + " |"]
    lines.extend("| " + " | ".join(row) + " |" for row in rows)
    return "\n".join(lines)


def _cmd_cohomology(args) -> int:
    data = NearlySplitData(args.d, args.c)
    coh = sym_cohomology(data, args.sym, args.twist)
    print(to_json({"h0": coh.h0, "h1": coh.h1, "h2": coh.h2, "chi": coh.chi}))
    return 0


def _cmd_invariants(args) -> int:
    data = NearlySplitData(args.d, args.c)
    inv = plane_invariants(data, args.pluri_max)
    status = plane_status(data)
    out = {
        "K2": inv.K2,
        "chi": inv.chi,
        "pg": inv.pg,
        "q": inv.q,
        "chi2K": inv.chi2K,
        "kappa_estimate": inv.kappa.value,
        "formal": inv.formal,
        "admissibility": status.level.value,
        "plurigenera": [[p.m, p.value, p.exact] for p in inv.plurigenera],
    }
    print(to_json(out))
    return 0


def _cmd_admissible(args) -> int:
    data = NearlySplitData(args.d, args.c)
    status = plane_status(data, generic=not args.no_generic)
    print(status.level.value)
    if status.smoothness_note:
        print(f"note: {status.smoothness_note}", file=sys.stderr)
    return 0


def _cmd_classify(args) -> int:
    split_a_max = args.c_max if args.split_a_max is None else args.split_a_max
    bounds = EnumerationBounds(
        d_min=args.d_min,
        d_max=args.d_max,
        c_max=args.c_max,
        split_a_max=split_a_max,
        pluri_max=args.pluri_max,
    )
    wanted = _CLI_BUCKETS[args.bucket]
    records = [rec for rec in enumerate_records(bounds) if rec.bucket in wanted]
    fmt = OutputFormat("markdown" if args.format == "md" else args.format)
    print(render_records(records, fmt))
    return 0


def _cmd_table(args) -> int:
    diff = paper_table(_CLI_TABLE_NAMES[args.table])
    if diff.ok:
        print(f"{diff.table}: {diff.matched} rows matched")
        return 0
    for line in diff.lines:
        print(line)
    print(f"{diff.table}: {len(diff.lines)} differences", file=sys.stderr)
    return 2


def _cmd_general(args) -> int:
    with open(args.input, encoding="utf-8") as fh:
        raw = json.load(fh)
    basis = raw.get("basis")
    if basis is not None and list(basis) != ["K", "L", "C1", "C2", "C3"]:
        raise ValueError('basis must be ["K", "L", "C1", "C2", "C3"]')
    g = GeneralSurfaceData(int(raw["chi_structure"]), tuple(map(tuple, raw["pairing"])))
    k2, chi, chi2k = general_invariants(g)
    print(to_json({"K2T": k2, "chiT": chi, "chi2KT": chi2k}))
    return 0


def _cmd_slope(args) -> int:
    data = NearlySplitData(args.d, args.c)
    value = slope(data, args.mode, args.m)
    if value is None:
        print("undefined (chi = 0)")
    else:
        print(value)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="tripleplane",
        description="Exact invariants, admissibility and classification of "
        "special triple covers of the projective plane.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_data_args(p):
        p.add_argument("--d", type=int, required=True, help="degree of the twisting line bundle")
        p.add_argument("--c", type=_triple, required=True, metavar="C1,C2,C3",
                       help="the three curve degrees, e.g. 2,1,1")

    p = sub.add_parser("cohomology", help="cohomology of a symmetric-power twist")
    add_data_args(p)
    p.add_argument("--sym", type=int, default=1, help="symmetric power (default 1)")
    p.add_argument("--twist", type=int, default=0, help="twist degree (default 0)")
    p.set_defaults(func=_cmd_cohomology)

    p = sub.add_parser("invariants", help="all invariants of the associated cover")
    add_data_args(p)
    p.add_argument("--pluri-max", type=int, default=12, dest="pluri_max",
                   help="compute plurigenera up to this order (default 12)")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("admissible", help="admissibility verdict for the data")
    add_data_args(p)
    p.add_argument("--no-generic", action="store_true",
                   help="do not assume curves are generic in their linear systems")
    p.set_defaults(func=_cmd_admissible)

    p = sub.add_parser("classify", help="enumerate and bucket admissible data")
    p.add_argument("--d-min", type=int, default=0, dest="d_min")
    p.add_argument("--d-max", type=int, required=True, dest="d_max")
    p.add_argument("--c-max", type=int, required=True, dest="c_max")
    p.add_argument("--split-a-max", type=int, default=None, dest="split_a_max",
                   help="separate bound for split data (default: same as --c-max)")
    p.add_argument("--pluri-max", type=int, default=12, dest="pluri_max")
    p.add_argument("--bucket", choices=sorted(_CLI_BUCKETS), default="all",
                   help="'nonminimal' selects non-minimal general type plus "
                   "minimal with small pg, matching 'table nonminimal'")
    p.add_argument("--format", choices=("json", "csv", "md", "markdown"), default="md")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("table", help="re-derive a bundled reference table, exit 2 on a diff")
    p.add_argument("table", choices=sorted(_CLI_TABLE_NAMES))
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("general", help="closed-form invariants over an arbitrary base")
    p.add_argument("--input", required=True,
                   help="JSON file with chi_structure and a 5x5 pairing matrix")
    p.set_defaults(func=_cmd_general)

    p = sub.add_parser("slope", help="exact K2/chi after scaling the data")
    add_data_args(p)
    p.add_argument("--mode", choices=("twist", "curves"), required=True)
    p.add_argument("--m", type=int, required=True, help="nonnegative shift")
    p.set_defaults(func=_cmd_slope)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()

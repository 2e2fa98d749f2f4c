"""capitula analyze | scan | verify."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import campaigns
from .app222 import is_cl222
from .pell import PeriodCapExceeded
from .pipeline import CSV_COLUMNS, analyze_triple, csv_row
from .triple import InvalidTriple, PrimeTriple, iter_triples

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def _analyze_row(t: tuple[int, int, int]) -> dict:
    return csv_row(analyze_triple(PrimeTriple(*t)))


def cmd_analyze(args) -> int:
    try:
        t = PrimeTriple(args.p1, args.p2, args.q)
    except InvalidTriple as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = analyze_triple(t)
    sys.stdout.write(report.to_json() + "\n" if args.format == "json" else report.to_text())
    return EXIT_OK


def scan_rows(p_max: int, q_max: int, only_222: bool = False, jobs: int = 1) -> list[dict]:
    triples = [t.as_tuple() for t in iter_triples(p_max, q_max) if not only_222 or is_cl222(t)]
    if jobs > 1 and len(triples) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            rows = list(pool.map(_analyze_row, triples, chunksize=32))
    else:
        rows = [_analyze_row(t) for t in triples]
    return sorted(rows, key=lambda r: (r["p1"], r["p2"], r["q"]))


def cmd_scan(args) -> int:
    if args.pmax < 3 or args.qmax < 3:
        print("error: bounds must be >= 3", file=sys.stderr)
        return EXIT_USAGE
    rows = scan_rows(args.pmax, args.qmax, args.only_222, args.jobs)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    try:
        with open(args.out, "w", newline="") as fh:
            fh.write(buf.getvalue())
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    n222 = sum(r["cl222"] == "true" for r in rows)
    failed = sum(r["main_ok"] != "true" or r["full_cap"] == "false" for r in rows)
    flagged = sum(bool(r["flags"]) for r in rows)
    print(json.dumps({"triples": len(rows), "cl222": n222, "flagged": flagged,
                      "failed": failed, "out": args.out}, sort_keys=True))
    return EXIT_VIOLATION if failed else EXIT_OK


def cmd_verify(args) -> int:
    prop = args.property or args.property_pos
    if prop not in campaigns.PROPERTIES:
        print(f"error: unknown property {prop!r}; choose from {', '.join(campaigns.PROPERTIES)}",
              file=sys.stderr)
        return EXIT_USAGE
    if args.bound < 3:
        print("error: bound must be >= 3", file=sys.stderr)
        return EXIT_USAGE
    res = campaigns.run(prop, args.bound)
    print(json.dumps(res.as_dict(), sort_keys=True, default=str))
    return EXIT_OK if res.ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="capitula", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full report for one triple")
    a.add_argument("--p1", type=int, required=True)
    a.add_argument("--p2", type=int, required=True)
    a.add_argument("--q", type=int, required=True)
    a.add_argument("--format", choices=("json", "text"), default="json")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("scan", help="CSV over all triples p1 < p2 <= pmax, q <= qmax")
    s.add_argument("--pmax", type=int, required=True)
    s.add_argument("--qmax", type=int, required=True)
    s.add_argument("--only-222", action="store_true", dest="only_222")
    s.add_argument("--out", required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_scan)

    v = sub.add_parser("verify", help="run a verification campaign")
    v.add_argument("property_pos", nargs="?", metavar="PROPERTY")
    v.add_argument("--property")
    v.add_argument("--bound", type=int, required=True)
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except PeriodCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface: verification suites, coefficient tables,
congruence scanning, and density reports.

Exit codes are a stable contract: 0 all-pass, 1 counterexample or failed
assertion, 2 usage/configuration error.  Output is CSV (tables) or a
single JSON record; both carry identical numbers.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import partitions, quadforms, verify

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

TABLE_SERIES = ("eobar", "A", "a", "b", "r113", "r133")


def _emit(record: dict, fmt: str, out: str | None) -> int:
    if fmt == "json":
        text = json.dumps(record, indent=2, default=str) + "\n"
    else:
        buf = io.StringIO()
        rows = record["rows"]
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
            writer.writeheader()
            writer.writerows(rows)
        text = buf.getvalue()
    if out:
        try:
            with open(out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {out}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _record(args, rows: list[dict], status: str) -> dict:
    params = {
        k: v
        for k, v in vars(args).items()
        if k not in ("func", "format", "out") and v is not None
    }
    return {"command": args.command, "parameters": params, "rows": rows, "status": status}


def cmd_verify(args) -> int:
    suites = list(verify.SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in verify.SUITES:
        print(f"error: unknown suite {args.suite!r}; choose from "
              f"{', '.join(verify.SUITES)} or 'all'", file=sys.stderr)
        return EXIT_USAGE
    reports = []
    if args.suite == "all":
        reports = verify.run_all(args.limit, args.order)
    else:
        reports = verify.run_suite(args.suite, args.limit, args.order)
    rows = []
    for rep in reports:
        print(rep)
        rows.append(
            {
                "suite": rep.suite,
                "range": rep.range_checked,
                "passed": rep.passed,
                "counterexample": rep.counterexample,
                **rep.details,
            }
        )
    ok = all(r.passed for r in reports)
    if args.out or args.format == "json":
        rc = _emit(_record(args, rows, "pass" if ok else "fail"), args.format, args.out)
        if rc:
            return rc
    return EXIT_OK if ok else EXIT_FAIL


def _table_values(series: str, order: int) -> list[int]:
    if series == "eobar":
        return partitions.eobar_series(order).coeffs
    if series == "A":
        f = quadforms.f_series(order // 12 + 1)
        return [f.c((n - 2) // 12) if n % 12 == 2 else 0 for n in range(order + 1)]
    if series == "a":
        return quadforms.f_series(order).coeffs
    if series == "b":
        return quadforms.b_series(order).coeffs
    if series == "r113":
        return [quadforms.r113(n) for n in range(order + 1)]
    if series == "r133":
        return [quadforms.r133(n) for n in range(order + 1)]
    raise KeyError(series)


def cmd_table(args) -> int:
    if args.series not in TABLE_SERIES:
        print(f"error: unknown series {args.series!r}", file=sys.stderr)
        return EXIT_USAGE
    if args.order < 0:
        print("error: --order must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    if args.series == "eobar" and args.mod:
        values = [int(v) for v in partitions.eobar_series_mod(args.order, args.mod)]
    else:
        values = _table_values(args.series, args.order)
        if args.mod:
            values = [v % args.mod for v in values]
    rows = [{"n": n, "value": v} for n, v in enumerate(values)]
    return _emit(_record(args, rows, "ok"), args.format, args.out)


def cmd_scan(args) -> int:
    if args.a_max < 1 or args.n_max < 0:
        print("error: --a-max must be >= 1 and --n-max >= 0", file=sys.stderr)
        return EXIT_USAGE
    fams = verify.scan_congruences(args.a_max, args.n_max)
    rows = [
        {"A": f.modulus_A, "B": f.residue_B, "trivial": f.trivial} for f in fams
    ]
    return _emit(_record(args, rows, "ok"), args.format, args.out)


def cmd_density(args) -> int:
    try:
        checkpoints = [int(x) for x in args.checkpoints.split(",") if x]
    except ValueError:
        print("error: --checkpoints must be a comma list of integers", file=sys.stderr)
        return EXIT_USAGE
    if not checkpoints or min(checkpoints) < 2:
        print("error: checkpoints must be integers >= 2", file=sys.stderr)
        return EXIT_USAGE
    rows = verify.density_report(checkpoints)
    ok = all(r["bound_ok"] for r in rows)
    rc = _emit(_record(args, rows, "pass" if ok else "fail"), args.format, args.out)
    if rc:
        return rc
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eopart",
        description="Partition-congruence toolkit: verify, tabulate, scan, density.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default=None, help="write output to this path")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all")
    p.add_argument("--limit", type=int, default=None, help="sweep bound override")
    p.add_argument("--order", type=int, default=None, help="series truncation override")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="emit an n,value coefficient table")
    p.add_argument("--series", required=True, choices=TABLE_SERIES)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--mod", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("scan", help="scan for congruence families mod 4")
    p.add_argument("--a-max", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("density", help="residue-class density report")
    p.add_argument("--checkpoints", required=True, help="comma list, e.g. 10000,100000")
    common(p)
    p.set_defaults(func=cmd_density)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end.

Subcommands map one-to-one onto the library surface:

    triangle    rows of the a- or b-triangle along a chosen route
    seq         the central column (k = 0) as a flat sequence
    series      Taylor coefficients of the generating functions F and G
    qpoly       the edge polynomial family, rendered or evaluated
    decompose   multiplicities of one tensor power
    verify      the full cross-route consistency report
    bench       wall-clock timing of routes

Output formats: text (aligned, human), csv (stable headers), json.
All exact integers are emitted as decimal strings in JSON so arbitrary
precision survives any downstream parser.

Exit codes: 0 success (for verify: every check matched its expectation,
including the one documented expected failure), 1 computation or
verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from . import laurent, qpolys, series, verify
from .errors import (
    InexactDivision,
    InvalidRange,
    NonIntegerResult,
    TrinomError,
    UnknownRoute,
    UnsupportedK,
)

__all__ = ["main"]


def _emit_json(obj):
    print(json.dumps(obj, indent=2))


def _emit_csv(header, rows):
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _triangle_text(rows):
    widths = {}
    for row in rows:
        for k, value in enumerate(row):
            widths[k] = max(widths.get(k, 0), len(str(value)))
    for row in rows:
        print("  ".join(str(v).rjust(widths[k]) for k, v in enumerate(row)))


def _pairs_text(pairs):
    if not pairs:
        return
    w_key = max(len(str(key)) for key, _ in pairs)
    w_val = max(len(str(val)) for _, val in pairs)
    for key, val in pairs:
        print(f"{str(key).rjust(w_key)}  {str(val).rjust(w_val)}")


def _resolve_route(route_id, kind, default_prefix):
    if route_id is None:
        route_id = default_prefix + kind
    route = verify.ROUTES.get(route_id)
    if route is None:
        raise UnknownRoute(
            f"unknown route {route_id!r}; known: {', '.join(sorted(verify.ROUTES))}"
        )
    if route.kind != kind:
        raise ValueError(f"route {route_id!r} builds kind {route.kind!r}, not {kind!r}")
    return route_id


def _cmd_triangle(args):
    if args.rows < 1:
        raise ValueError("--rows must be >= 1")
    route_id = _resolve_route(args.route, args.kind, "pascal-")
    rows = verify.route_rows(route_id, args.rows - 1)
    if args.format == "text":
        _triangle_text(rows)
    elif args.format == "csv":
        _emit_csv(
            ["n", "k", "value"],
            [(n, k, v) for n, row in enumerate(rows) for k, v in enumerate(row)],
        )
    else:
        _emit_json(
            {
                "kind": args.kind,
                "route": route_id,
                "rows": [[str(v) for v in row] for row in rows],
            }
        )
    return 0


def _cmd_seq(args):
    if args.count < 1:
        raise ValueError("--count must be >= 1")
    route_id = _resolve_route(args.route, args.kind, "central-")
    values = [row[0] for row in verify.route_rows(route_id, args.count - 1)]
    if args.format == "text":
        _pairs_text(list(enumerate(values)))
    elif args.format == "csv":
        _emit_csv(["n", "value"], list(enumerate(values)))
    else:
        _emit_json(
            {"kind": args.kind, "route": route_id, "values": [str(v) for v in values]}
        )
    return 0


def _cmd_series(args):
    if args.order < 0:
        raise ValueError("--order must be >= 0")
    build = series.f_series if args.kind == "f" else series.g_series
    s = build(args.order, method=args.route)
    values = []
    for n, c in enumerate(s.coeffs):
        if c.denominator != 1:
            raise NonIntegerResult(f"coefficient of t^{n} is {c}, expected an integer")
        values.append(c.numerator)
    if args.format == "text":
        _pairs_text(list(enumerate(values)))
    elif args.format == "csv":
        _emit_csv(["n", "value"], list(enumerate(values)))
    else:
        _emit_json(
            {
                "kind": args.kind,
                "method": args.route,
                "coefficients": [str(v) for v in values],
            }
        )
    return 0


def _cmd_qpoly(args):
    if args.max_k < 0:
        raise ValueError("--max-k must be >= 0")
    family = qpolys.q_family(args.max_k)
    if args.eval_at is not None:
        point = args.eval_at
        values = []
        for q in family:
            v = q(point)
            if v.denominator != 1:
                raise NonIntegerResult(f"value {v} at n={point} is not an integer")
            values.append(v.numerator)
        if args.format == "text":
            _pairs_text([(f"Q_{k}({point})", v) for k, v in enumerate(values)])
        elif args.format == "csv":
            _emit_csv(["k", "value"], list(enumerate(values)))
        else:
            _emit_json(
                {"eval_at": str(point), "values": [str(v) for v in values]}
            )
        return 0
    rendered = [q.render("n") for q in family]
    if args.format == "text":
        for k, text in enumerate(rendered):
            print(f"Q_{k} = {text}")
    elif args.format == "csv":
        _emit_csv(["k", "polynomial"], list(enumerate(rendered)))
    else:
        _emit_json(
            {
                "max_k": str(args.max_k),
                "polynomials": [
                    {
                        "k": str(k),
                        "coefficients": [str(c) for c in q.coeffs],
                        "rendered": text,
                    }
                    for k, (q, text) in enumerate(zip(family, rendered))
                ],
            }
        )
    return 0


def _cmd_decompose(args):
    if args.n < 0:
        raise ValueError("n must be >= 0")
    b = laurent.decompose(laurent.trinomial_power(args.n))
    if args.format == "text":
        _pairs_text(list(enumerate(b)))
    elif args.format == "csv":
        _emit_csv(["k", "value"], list(enumerate(b)))
    else:
        _emit_json({"n": str(args.n), "multiplicities": [str(v) for v in b]})
    return 0


def _check_status(check):
    if check.expected_fail:
        return "XFAIL" if not check.passed else "XPASS"
    return "PASS" if check.passed else "FAIL"


def _cmd_verify(args):
    report = verify.run_all(args.max_n, max_k_edge=args.max_k_edge)
    if args.format == "json":
        _emit_json(report.to_dict())
    elif args.format == "csv":
        _emit_csv(
            ["name", "status", "n", "k", "detail"],
            [
                (
                    c.name,
                    _check_status(c),
                    "" if c.witness is None else c.witness[0],
                    "" if c.witness is None else c.witness[1],
                    c.detail,
                )
                for c in report.checks
            ],
        )
    else:
        for c in report.checks:
            line = f"{_check_status(c):<5} {c.name}"
            if c.witness is not None:
                line += f"  (n={c.witness[0]}, k={c.witness[1]})"
            if c.detail:
                line += f"  {c.detail}"
            print(line)
        for note in report.notes:
            print(f"note: {note}")
        counted = sum(1 for c in report.checks if c.ok())
        xfails = sum(1 for c in report.checks if c.expected_fail and not c.passed)
        verdict = "ok" if report.ok() else "FAIL"
        print(
            f"{verdict}: {counted}/{len(report.checks)} checks as expected "
            f"({xfails} documented expected failure), tables "
            f"{'match' if all(report.table_match.values()) else 'MISMATCH'}, "
            f"rows 0..{report.max_n}"
        )
    return 0 if report.ok() else 1


def _cmd_bench(args):
    max_ns = args.max_n or [1000]
    route_ids = args.route or ["pascal-a", "central-a"]
    for rid in route_ids:
        if rid not in verify.ROUTES:
            raise UnknownRoute(
                f"unknown route {rid!r}; known: {', '.join(sorted(verify.ROUTES))}"
            )
    results = []
    for rid in route_ids:
        for n_max in max_ns:
            if n_max < 0:
                raise ValueError("--max-n must be >= 0")
            start = time.perf_counter()
            verify.route_rows(rid, n_max)
            results.append((rid, n_max, time.perf_counter() - start))
    if args.format == "text":
        for rid, n_max, secs in results:
            print(f"{rid:<18} {n_max:>7} {secs:>10.4f}s")
    elif args.format == "csv":
        _emit_csv(
            ["route", "max_n", "seconds"],
            [(rid, n_max, f"{secs:.6f}") for rid, n_max, secs in results],
        )
    else:
        _emit_json(
            [
                {"route": rid, "max_n": str(n_max), "seconds": round(secs, 6)}
                for rid, n_max, secs in results
            ]
        )
    return 0


def _add_format(sub):
    sub.add_argument(
        "--format", choices=("text", "csv", "json"), default="text",
        help="output format (default: text)",
    )


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="trinom",
        description="Exact trinomial coefficient triangles and sl2 tensor "
        "power decompositions, with cross-validated computation routes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triangle", help="print triangle rows")
    p.add_argument("--kind", choices=("a", "b"), default="a")
    p.add_argument("--rows", type=int, default=11, help="row count, rows 0..N-1")
    p.add_argument("--route", help="route id (default: pascal-a / pascal-b)")
    _add_format(p)
    p.set_defaults(handler=_cmd_triangle)

    p = sub.add_parser("seq", help="print the central column as a sequence")
    p.add_argument("--kind", choices=("a", "b"), default="a")
    p.add_argument("--count", type=int, default=11, help="value count, n = 0..N-1")
    p.add_argument("--route", help="route id (default: central-a / central-b)")
    _add_format(p)
    p.set_defaults(handler=_cmd_seq)

    p = sub.add_parser("series", help="print generating function coefficients")
    p.add_argument("--kind", choices=("f", "g"), default="f")
    p.add_argument("--order", type=int, default=10, help="highest power of t kept")
    p.add_argument(
        "--route", choices=("direct", "newton"), default="direct",
        help="square root algorithm",
    )
    _add_format(p)
    p.set_defaults(handler=_cmd_series)

    p = sub.add_parser("qpoly", help="print or evaluate the edge polynomials")
    p.add_argument("--max-k", type=int, default=10, help="largest k in the family")
    p.add_argument("--eval-at", type=int, help="evaluate each Q_k at this integer")
    _add_format(p)
    p.set_defaults(handler=_cmd_qpoly)

    p = sub.add_parser("decompose", help="multiplicities of the n-th tensor power")
    p.add_argument("n", type=int)
    _add_format(p)
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("verify", help="run the cross-route consistency checks")
    p.add_argument("--max-n", type=int, default=50, help="largest row checked")
    p.add_argument("--max-k-edge", type=int, default=11, help="edge polynomial bound")
    _add_format(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("bench", help="time triangle routes")
    p.add_argument(
        "--max-n", type=int, action="append",
        help="largest row built, repeatable (default: 1000)",
    )
    p.add_argument(
        "--route", action="append",
        help="route id, repeatable (default: pascal-a, central-a)",
    )
    _add_format(p)
    p.set_defaults(handler=_cmd_bench)

    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.handler(args)
    except (UnknownRoute, UnsupportedK, InvalidRange, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NonIntegerResult, InexactDivision, TrinomError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

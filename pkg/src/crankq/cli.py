"""Command-line front end.

Subcommands: table, verify, identity, family, ospt, threshold,
plot-unimodal.  Exit codes: 0 all checks passed, 1 at least one violation
or mismatch, 2 usage error.  CSV output always carries a header row and
plain decimal integers; JSON output is stable (sorted keys) so runs with
the same flags are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import families, identities, statistics, theorems
from .errors import (
    InvalidK,
    InvalidParams,
    RangeError,
    UnknownIdentity,
    UnknownTheorem,
)

_FAMILY_CLI_NAMES = {
    "pk": "p",
    "ppk": "pp",
    "dk": "d",
    "tk": "t",
    "fk": "f",
    "gk": "g",
    "hk": "h",
}

DEFAULT_TABLE_N_MAX = 100
DEFAULT_VERIFY_N_MAX = 200
DEFAULT_ORDER = 200


def _emit(text: str, out_path: Optional[str]) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(str(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _json_text(obj: object) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cmd_table(args) -> int:
    if args.n_max < 0:
        print("error: --n-max must be nonnegative", file=sys.stderr)
        return 2
    if args.stat == "crank":
        table = statistics.crank_table(args.n_max)
    else:
        table = statistics.rank_table(args.n_max)
    rows = []
    for n in range(table.n_max + 1):
        for m in table.m_range(n):
            rows.append((n, m, table.get(m, n)))
    if args.format == "json":
        payload = {
            "stat": args.stat,
            "n_max": args.n_max,
            "rows": [{"n": n, "m": m, "count": c} for n, m, c in rows],
        }
        _emit(_json_text(payload), args.out)
    else:
        _emit(_csv(("n", "m", "count"), rows), args.out)
    return 0


def _verify_output(reports, fmt: str, out_path: Optional[str]) -> int:
    if fmt == "json":
        payload = [r.as_dict() for r in reports]
        _emit(_json_text(payload if len(payload) != 1 else payload[0]), out_path)
    else:
        rows = [
            (
                r.theorem_id,
                r.n_from,
                r.n_to,
                r.checked,
                len(r.violations),
                r.status,
            )
            for r in reports
        ]
        text = _csv(("id", "n_from", "n_to", "checked", "violations", "status"), rows)
        for r in reports:
            for v in r.violations[:20]:
                text += f"# violation {r.theorem_id} {v.point}: {v.lhs} vs {v.rhs}\n"
        _emit(text, out_path)
    return 0 if all(r.passed for r in reports) else 1


def cmd_verify(args) -> int:
    if args.theorem is None and args.suite is None:
        print("error: give --theorem ID or --suite paper", file=sys.stderr)
        return 2
    if args.suite is not None and args.suite != "paper":
        print(f"error: unknown suite {args.suite!r}", file=sys.stderr)
        return 2
    if args.suite is not None and args.from_n is not None:
        print("error: --from applies to a single theorem, not a suite",
              file=sys.stderr)
        return 2
    overrides = {}
    if getattr(args, "from_n", None) is not None:
        overrides["n_from"] = args.from_n
    try:
        if args.suite == "paper":
            reports = theorems.verify_suite(args.n_max)
        else:
            reports = [theorems.verify(args.theorem, args.n_max, overrides or None)]
    except UnknownTheorem as exc:
        print(f"error: unknown theorem {exc}", file=sys.stderr)
        return 2
    except RangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return _verify_output(reports, args.format, args.out)


def cmd_identity(args) -> int:
    try:
        grids = (
            [
                {
                    key: value
                    for key, value in (("m", args.m), ("k", args.k))
                    if value is not None
                }
            ]
            if args.m is not None or args.k is not None
            else identities.identity_grid(args.id)
        )
        results = [
            identities.check_identity(args.id, args.order, **params)
            for params in grids
        ]
    except UnknownIdentity as exc:
        print(f"error: unknown identity {exc}", file=sys.stderr)
        return 2
    except InvalidParams as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        payload = [
            {
                "id": r.id,
                "params": r.params,
                "order": r.order,
                "status": r.status,
                "first_mismatch": (
                    None
                    if r.first_mismatch is None
                    else {
                        "exponent": r.first_mismatch[0],
                        "lhs": r.first_mismatch[1],
                        "rhs": r.first_mismatch[2],
                    }
                ),
            }
            for r in results
        ]
        _emit(_json_text(payload if len(payload) != 1 else payload[0]), args.out)
    else:
        rows = []
        for r in results:
            params = ";".join(f"{k}={v}" for k, v in sorted(r.params.items()))
            mm = "" if r.first_mismatch is None else r.first_mismatch[0]
            rows.append((r.id, params, r.order, r.status, mm))
        _emit(
            _csv(("id", "params", "order", "status", "mismatch_exponent"), rows),
            args.out,
        )
    return 0 if all(r.passed for r in results) else 1


def cmd_family(args) -> int:
    name = _FAMILY_CLI_NAMES.get(args.name, args.name)
    try:
        series = families.family_series(name, args.k, args.n_max)
    except InvalidK as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    coeffs = series.coeffs()
    if args.format == "json":
        payload = {
            "family": name,
            "k": args.k,
            "values": [{"n": n, "value": c} for n, c in enumerate(coeffs)],
        }
        _emit(_json_text(payload), args.out)
    else:
        _emit(_csv(("n", "value"), list(enumerate(coeffs))), args.out)
    return 0


def cmd_ospt(args) -> int:
    if args.n_max < 1:
        print("error: --n-max must be >= 1", file=sys.stderr)
        return 2
    values = statistics.ospt(args.n_max)
    pvec = statistics.partition_numbers(args.n_max)
    rows = [(n, values[n], pvec[n]) for n in range(1, args.n_max + 1)]
    if args.format == "json":
        payload = [{"n": n, "ospt": o, "p": p} for n, o, p in rows]
        _emit(_json_text(payload), args.out)
    else:
        _emit(_csv(("n", "ospt", "p"), rows), args.out)
    return 0


def cmd_threshold(args) -> int:
    try:
        found = theorems.find_threshold(args.theorem, args.n_max)
        stated = theorems.stated_threshold(args.theorem)
    except UnknownTheorem as exc:
        print(f"error: unknown theorem {exc}", file=sys.stderr)
        return 2
    except RangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        payload = {
            "id": args.theorem,
            "n_max": args.n_max,
            "empirical_threshold": found,
            "stated_threshold": stated,
        }
        _emit(_json_text(payload), args.out)
    else:
        rows = [(args.theorem, "" if found is None else found, stated)]
        _emit(_csv(("id", "empirical_threshold", "stated_threshold"), rows), args.out)
    return 0 if found is not None else 1


def cmd_plot_unimodal(args) -> int:
    if args.n < 2:
        print("error: --n must be >= 2", file=sys.stderr)
        return 2
    table = statistics.crank_table(args.n)
    n = args.n
    rows = [(m, table.get(m, n)) for m in range(-(n - 1), n)]
    _emit(_csv(("m", "count"), rows), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crankq",
        description="partition statistics, q-series identities and "
        "inequality verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, default_format="csv"):
        p.add_argument("--format", choices=("csv", "json"), default=default_format)
        p.add_argument("--out", metavar="PATH", default=None)

    p = sub.add_parser("table", help="emit a crank or rank count table")
    p.add_argument("--stat", choices=("crank", "rank"), required=True)
    p.add_argument("--n-max", type=int, default=DEFAULT_TABLE_N_MAX)
    add_common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="scan one theorem or the whole suite")
    p.add_argument("--theorem", metavar="ID", default=None)
    p.add_argument("--suite", metavar="NAME", default=None)
    p.add_argument("--n-max", type=int, default=DEFAULT_VERIFY_N_MAX)
    p.add_argument("--from", dest="from_n", type=int, default=None,
                   help="override the scan's starting n")
    add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("identity", help="check one identity from the registry")
    p.add_argument("--id", required=True)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    add_common(p)
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("family", help="emit one family's values")
    p.add_argument(
        "--name", required=True,
        choices=sorted(set(_FAMILY_CLI_NAMES) | set(_FAMILY_CLI_NAMES.values())),
    )
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, default=DEFAULT_TABLE_N_MAX)
    add_common(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("ospt", help="emit n, ospt(n), p(n) rows")
    p.add_argument("--n-max", type=int, default=DEFAULT_TABLE_N_MAX)
    add_common(p)
    p.set_defaults(func=cmd_ospt)

    p = sub.add_parser("threshold", help="locate the empirical threshold")
    p.add_argument("--theorem", metavar="ID", required=True)
    p.add_argument("--n-max", type=int, default=DEFAULT_VERIFY_N_MAX)
    add_common(p)
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("plot-unimodal", help="emit m, count data for one row")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", metavar="PATH", default=None)
    p.set_defaults(func=cmd_plot_unimodal)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; pass both through
        return int(exc.code or 0)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface over all modules.

Output contract:

* ``--format plain`` -- one value or one aligned table row per line.
* ``--format json``  -- a single document; sequence values and
  coefficients are decimal strings (never json numbers), so consumers
  cannot lose precision.
* ``--format csv``   -- RFC-4180-style with a header row.

Exit codes: 0 success, 1 verification/consistency failure, 2 usage
error.  ``--deterministic`` omits the run timestamp so identical
arguments produce byte-identical output.

The report commands (``verify``, ``bench``) accept ``--out-dir`` and
then write the json and csv renderings to files alongside a rendered
PNG figure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from dataclasses import replace
from datetime import datetime, timezone

from . import __version__, bench, core, decimation, folding, tables, verify
from .errors import ConsistencyError, InvalidRange, UsageError

INDEX_CAP_ENV = "PADKIT_INDEX_CAP"

# accept bare negative numbers in range/index positionals ("-8..0")
_NEGATIVE_TOKENS = re.compile(r"^-\d+")


def _parse_range(text: str) -> tuple[int, int]:
    parts = text.split("..")
    try:
        lo, hi = (int(p) for p in parts)
    except ValueError:
        raise InvalidRange(f"range must look like lo..hi, got {text!r}") from None
    if lo > hi:
        raise InvalidRange(f"empty range {text!r}")
    return lo, hi


def _parse_ladder(text: str) -> list[int]:
    try:
        ladder = [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise InvalidRange(f"ladder must be comma-separated ints, got {text!r}") from None
    if not ladder:
        raise InvalidRange("empty ladder")
    return ladder


def _aligned(rows: list[list[str]]) -> list[str]:
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    return [
        "  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip()
        for row in rows
    ]


def _jsonable(value):
    """Ints (arbitrary precision) become decimal strings; containers recurse."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return core.decimal_str(value)
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def render_output(fmt, deterministic, command, payload, header, rows, plain):
    """One command result in the requested format, as a full text block."""
    if fmt == "json":
        doc = {"tool": "padkit", "version": __version__, "command": command}
        if not deterministic:
            doc["timestamp"] = datetime.now(timezone.utc).isoformat()
        doc["result"] = payload
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(header)
        for row in rows:
            writer.writerow(
                [core.decimal_str(c) if isinstance(c, int) else c for c in row]
            )
        return buf.getvalue()
    return "\n".join(plain) + "\n"


def _emit(args, command, payload, header, rows, plain) -> None:
    sys.stdout.write(
        render_output(args.format, args.deterministic, command, payload, header, rows, plain)
    )


def _write_report_files(args, command, payload, header, rows, basename, figure):
    """json + csv + figure under --out-dir (the report path)."""
    out_dir = args.out_dir
    os.makedirs(out_dir, exist_ok=True)
    for fmt, suffix in (("json", ".json"), ("csv", ".csv")):
        text = render_output(fmt, args.deterministic, command, payload, header, rows, [])
        with open(os.path.join(out_dir, basename + suffix), "w", newline="") as fh:
            fh.write(text)
    figure(out_dir)


def _cmd_eval(args) -> int:
    decimation.parse_strategy(args.strategy)
    value = decimation.evaluate(args.n, args.strategy)
    cross = []
    if args.check:
        for token in ("iter", "matrix", "trisect"):
            other = decimation.evaluate(args.n, token)
            cross.append(token)
            if other != value:
                print(
                    f"strategy disagreement at n={args.n}: {token!r} gives "
                    f"{other}, {args.strategy!r} gives {value}",
                    file=sys.stderr,
                )
                return 1
    payload = {"n": args.n, "strategy": args.strategy, "value": core.decimal_str(value)}
    if args.check:
        payload["cross_checked"] = cross
    _emit(
        args,
        "eval",
        payload,
        ("n", "strategy", "value"),
        [(args.n, args.strategy, value)],
        [core.decimal_str(value)],
    )
    return 0


def _cmd_coeffs(args) -> int:
    lo, hi = _parse_range(args.range)
    pairs = [decimation.coeffs(a) for a in range(lo, hi + 1)]
    payload = {
        "coeffs": [
            {"a": c.a, "rho": core.decimal_str(c.rho), "sigma": core.decimal_str(c.sigma)}
            for c in pairs
        ]
    }
    rows = [(c.a, c.rho, c.sigma) for c in pairs]
    plain = _aligned(
        [["a", "rho", "sigma"]]
        + [[str(c.a), core.decimal_str(c.rho), core.decimal_str(c.sigma)] for c in pairs]
    )
    _emit(args, "coeffs", payload, ("a", "rho", "sigma"), rows, plain)
    return 0


def _cmd_reduce(args) -> int:
    cert = decimation.reduce_to_head(args.n, args.a)
    value = decimation.eval_via_certificate(cert)
    c2, c1, c0 = cert.coeffs
    payload = {
        "n": cert.n,
        "a": cert.a,
        "b": cert.b,
        "m": cert.m,
        "coeffs": {"c2": core.decimal_str(c2), "c1": core.decimal_str(c1),
                   "c0": core.decimal_str(c0)},
        "head_indices": list(cert.head_indices),
        "value": core.decimal_str(value),
    }
    header = ("n", "a", "b", "m", "c2", "c1", "c0", "head2", "head1", "head0", "value")
    rows = [(cert.n, cert.a, cert.b, cert.m, c2, c1, c0, *cert.head_indices, value)]
    plain = _aligned(
        [
            ["n", str(cert.n)],
            ["a", str(cert.a)],
            ["b", str(cert.b)],
            ["m", str(cert.m)],
            ["c2", core.decimal_str(c2)],
            ["c1", core.decimal_str(c1)],
            ["c0", core.decimal_str(c0)],
            ["heads", " ".join(str(h) for h in cert.head_indices)],
            ["value", core.decimal_str(value)],
        ]
    )
    _emit(args, "reduce", payload, header, rows, plain)
    return 0


def _cmd_table(args) -> int:
    grid = tables.build_table(args.a, args.rows)
    payload = {
        "a": grid.a,
        "rows": grid.rows,
        "entries": [[core.decimal_str(v) for v in row] for row in grid.entries],
    }
    header = ("row", *[f"col{b}" for b in range(1, grid.a + 1)])
    rows = [(i, *row) for i, row in enumerate(grid.entries)]
    plain = _aligned([[core.decimal_str(v) for v in row] for row in grid.entries])
    _emit(args, "table", payload, header, rows, plain)
    return 0


def _cmd_sums(args) -> int:
    series = tables.sum_series(args.a, args.b, args.m)
    total = series.values[-1]
    payload = {"a": args.a, "b": args.b, "m": args.m,
               "sum": core.decimal_str(total)}
    if args.series:
        payload["values"] = [core.decimal_str(v) for v in series.values]
        header = ("m", "sum")
        rows = list(enumerate(series.values))
        plain = _aligned(
            [["m", "sum"]] + [[str(k), core.decimal_str(v)] for k, v in rows]
        )
    else:
        header = ("a", "b", "m", "sum")
        rows = [(args.a, args.b, args.m, total)]
        plain = [core.decimal_str(total)]
    _emit(args, "sums", payload, header, rows, plain)
    return 0


def _cmd_qr(args) -> int:
    lo, hi = _parse_range(args.range)
    pairs = [folding.folded(n) for n in range(lo, hi + 1)]
    payload = {
        "pairs": [{"n": p.n, "q": core.decimal_str(p.q), "r": core.decimal_str(p.r)}
            for p in pairs]
    }
    rows = [(p.n, p.q, p.r) for p in pairs]
    plain = _aligned(
        [["n", "q", "r"]]
        + [[str(p.n), core.decimal_str(p.q), core.decimal_str(p.r)] for p in pairs]
    )
    _emit(args, "qr", payload, ("n", "q", "r"), rows, plain)
    return 0


def _verify_payload(cfg, reports):
    return {
        "seed": cfg.seed,
        "identities": [
            {
                "identity": r.identity,
                "range": r.range_desc,
                "checked": r.checked,
                "failures": [
                    {
                        "inputs": _jsonable(f.inputs),
                        "expected": _jsonable(f.expected),
                        "got": _jsonable(f.got),
                    }
                    for f in r.failures
                ],
            }
            for r in reports
        ],
    }


def _cmd_verify(args) -> int:
    cfg = verify.quick_config() if args.quick else verify.VerifyConfig()
    cfg = replace(cfg, seed=args.seed)
    if args.samples is not None:
        cfg = replace(cfg, certificate_samples=args.samples)
    reports = verify.run_suite(cfg)

    payload = _verify_payload(cfg, reports)
    header = ("identity", "range", "checked", "failures", "status")
    rows = [
        (r.identity, r.range_desc, r.checked, len(r.failures),
         "pass" if r.passed else "fail")
        for r in reports
    ]
    plain_rows = [["status", "identity", "checked", "range"]]
    for r in reports:
        plain_rows.append(
            ["PASS" if r.passed else "FAIL", r.identity, str(r.checked), r.range_desc]
        )
    plain = _aligned(plain_rows)
    for r in reports:
        for f in r.failures[:5]:
            plain.append(
                f"  {r.identity}: inputs={f.inputs} expected={f.expected} got={f.got}"
            )
        if len(r.failures) > 5:
            plain.append(f"  {r.identity}: (+{len(r.failures) - 5} more failures)")
    _emit(args, "verify", payload, header, rows, plain)

    if args.out_dir:
        from . import plots

        _write_report_files(
            args, "verify", payload, header, rows, "verify",
            lambda d: plots.save_verify_figure(
                reports, os.path.join(d, "verify_checks.png")
            ),
        )
    return 0 if all(r.passed for r in reports) else 1


def _cmd_bench(args) -> int:
    ladder = _parse_ladder(args.ladder)
    strategies = ("iter", "matrix", "trisect", f"decimated:{args.decimation_step}")
    report = bench.run_bench(ladder, args.reps, strategies)

    payload = {
        "environment": report.environment,
        "warnings": list(report.warnings),
        "entries": [
            {
                "strategy": e.strategy,
                "n": e.n,
                "reps": e.reps,
                "median_seconds": e.median_seconds,
                "min_seconds": e.min_seconds,
                "digits": e.digest.digits,
                "low_digits": e.digest.low,
            }
            for e in report.entries
        ],
    }
    header = ("strategy", "n", "reps", "median_seconds", "min_seconds",
              "digits", "low_digits")
    rows = [
        (e.strategy, e.n, e.reps, repr(e.median_seconds), repr(e.min_seconds),
         e.digest.digits, e.digest.low)
        for e in report.entries
    ]
    plain_rows = [list(header)] + [[str(c) for c in row] for row in rows]
    plain = _aligned(plain_rows)
    for w in report.warnings:
        plain.append(f"warning: {w}")
    _emit(args, "bench", payload, header, rows, plain)

    if args.out_dir:
        from . import plots

        _write_report_files(
            args, "bench", payload, header, rows, "bench",
            lambda d: plots.save_bench_figure(
                report, os.path.join(d, "bench_times.png")
            ),
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("plain", "json", "csv"), default="plain",
        help="output format (default: plain)",
    )
    common.add_argument(
        "--deterministic", action="store_true",
        help="omit run metadata that varies between runs (timestamps)",
    )

    parser = argparse.ArgumentParser(
        prog="padkit",
        description="Exact Padovan numbers at any signed index: decimation "
        "coefficients, reduction certificates, folded sequences, column "
        "tables and sums, an identity verifier, and a strategy benchmark.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate P(n)")
    p.add_argument("n", type=int, help="signed index")
    p.add_argument(
        "--strategy", default="iter",
        help="iter | matrix | trisect | decimated:<a> (default: iter)",
    )
    p.add_argument(
        "--check", action="store_true",
        help="cross-check all core strategies; exit 1 on disagreement",
    )
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser(
        "coeffs", parents=[common], help="step coefficients (a, rho, sigma)"
    )
    p.add_argument("range", help="inclusive step range lo..hi, e.g. 1..8")
    p.set_defaults(handler=_cmd_coeffs)

    p = sub.add_parser(
        "reduce", parents=[common],
        help="reduction certificate of P(n) over column heads",
    )
    p.add_argument("n", type=int, help="index, >= 1")
    p.add_argument("a", type=int, help="step size, >= 1")
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser("table", parents=[common], help="a-columns table")
    p.add_argument("a", type=int, help="columns, >= 1")
    p.add_argument("rows", type=int, help="rows, >= 1")
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser(
        "sums", parents=[common], help="partial sum of a table column"
    )
    p.add_argument("a", type=int, help="columns")
    p.add_argument("b", type=int, help="column index in [1, a]")
    p.add_argument("m", type=int, help="last row, so m+1 entries are summed")
    p.add_argument(
        "--series", action="store_true", help="emit all partial sums 0..m"
    )
    p.set_defaults(handler=_cmd_sums)

    p = sub.add_parser(
        "qr", parents=[common], help="folded pairs Q(n), R(n)"
    )
    p.add_argument("range", help="inclusive index range lo..hi, n >= 0")
    p.set_defaults(handler=_cmd_qr)

    p = sub.add_parser(
        "verify", parents=[common], help="run the identity catalogue"
    )
    p.add_argument("--seed", type=int, default=0, help="sampling seed (default 0)")
    p.add_argument(
        "--samples", type=int, default=None,
        help="random certificate samples (default 500)",
    )
    p.add_argument(
        "--quick", action="store_true", help="reduced ranges, for smoke tests"
    )
    p.add_argument(
        "--out-dir", default=None,
        help="also write verify.json, verify.csv and verify_checks.png here",
    )
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser(
        "bench", parents=[common], help="time the evaluation strategies"
    )
    p.add_argument(
        "--ladder", default=",".join(str(n) for n in bench.DEFAULT_LADDER),
        help="comma-separated indices (default: %(default)s)",
    )
    p.add_argument("--reps", type=int, default=5, help="timed runs per point, >= 3")
    p.add_argument(
        "--decimation-step", type=int, default=8,
        help="fixed step for the decimated strategy (default 8)",
    )
    p.add_argument(
        "--out-dir", default=None,
        help="also write bench.json, bench.csv and bench_times.png here",
    )
    p.set_defaults(handler=_cmd_bench)

    # let positionals like "-8..0" or "-10" through the option scanner
    for sp in sub.choices.values():
        sp._negative_number_matcher = _NEGATIVE_TOKENS
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cap = os.environ.get(INDEX_CAP_ENV)
    if cap is not None:
        try:
            core.set_index_cap(int(cap))
        except ValueError:
            print(f"error: {INDEX_CAP_ENV} must be a positive int, got {cap!r}",
                  file=sys.stderr)
            return 2
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

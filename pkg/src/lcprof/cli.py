"""``lcprof`` command line.

Exit status: 0 when the computation completed, 2 for bad input (including
argument errors), 3 when an oracle search exceeds ``--budget``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .complexity import AnalysisResult, k_error_lc, linear_complexity_gc, tight_profile
from .errors import BudgetExceeded, LcprofError
from .field import make_field
from .oracle import DEFAULT_BUDGET, brute_force_klc, brute_force_profile
from .sequence import parse_sequence, random_sequence, read_sequence, serialize_sequence

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _field_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", type=int, required=True, help="field characteristic")
    parser.add_argument("--m", type=int, default=1, help="extension degree (default 1)")
    parser.add_argument(
        "--modulus", type=_int_list, help="irreducible modulus, coefficients low degree first, e.g. 1,1,1"
    )
    parser.add_argument("--n", type=int, required=True, help="period is p**n")


def _input_args(parser: argparse.ArgumentParser) -> None:
    src = parser.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="FILE", help="sequence file (one period)")
    src.add_argument("--sequence", metavar="TEXT", help="inline period, e.g. 0,1,1,0")
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcprof", description="Linear complexity profiles of p^n-periodic sequences over GF(p^m)."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    lc = sub.add_parser("lc", help="linear complexity (generalized Games-Chan)")
    _field_args(lc)
    _input_args(lc)

    klc = sub.add_parser("klc", help="k-error linear complexity and T_min")
    _field_args(klc)
    _input_args(klc)
    klc.add_argument("--k", type=int, required=True, help="error budget per period")
    klc.add_argument("--trace", action="store_true", help="print one line per level")

    tight = sub.add_parser("tight", help="jump points of the k-error linear complexity profile")
    _field_args(tight)
    _input_args(tight)
    tight.add_argument("--count", type=int, help="stop after this many points")

    oracle = sub.add_parser("oracle", help="brute-force check against the fast algorithms")
    _field_args(oracle)
    _input_args(oracle)
    oracle.add_argument("--k", type=int, help="check one budget instead of the whole profile")
    oracle.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max error patterns to enumerate")

    gen = sub.add_parser("gen", help="write a seeded random period")
    _field_args(gen)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--output", metavar="FILE", help="write here instead of stdout")
    return parser


def _load(args):
    field = make_field(args.p, args.m, args.modulus)
    if args.input is not None:
        return field, read_sequence(args.input, field, args.n)
    return field, parse_sequence(args.sequence, field, args.n)


def _header(args) -> dict:
    return {"p": args.p, "m": args.m, "n": args.n}


def _trace_json(result: AnalysisResult) -> list[dict]:
    return [{"M": t.M, "TB": list(t.TB), "w": t.w} for t in result.trace]


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def _points_text(points) -> str:
    return ", ".join(f"({k},{c})" for k, c in points)


def cmd_lc(args) -> str:
    _, s = _load(args)
    lc = linear_complexity_gc(s)
    if args.format == "json":
        return json.dumps({**_header(args), "lc": lc})
    if args.format == "csv":
        return _csv([["lc"], [lc]])
    return f"lc={lc}"


def cmd_klc(args) -> str:
    _, s = _load(args)
    r = k_error_lc(s, args.k)
    if args.format == "json":
        out = {**_header(args), "k": r.k, "klc": r.klc}
        if r.tmin is not None:
            out["tmin"] = r.tmin
        if args.trace:
            out["trace"] = _trace_json(r)
        return json.dumps(out)
    tmin = "" if r.tmin is None else r.tmin
    if args.format == "csv":
        parts = []
        if args.trace:
            p = args.p
            head = ["M", *(f"TB[{u}]" for u in range(p - 1)), "w"]
            parts.append(_csv([head, *([t.M, *t.TB, t.w] for t in r.trace)]))
        parts.append(_csv([["k", "klc", "tmin"], [r.k, r.klc, tmin]]))
        return "\n\n".join(parts)
    lines = [str(t) for t in r.trace] if args.trace else []
    summary = f"k={r.k} klc={r.klc}"
    if r.tmin is not None:
        summary += f" tmin={r.tmin}"
    lines.append(summary)
    return "\n".join(lines)


def cmd_tight(args) -> str:
    _, s = _load(args)
    prof = tight_profile(s, args.count)
    if args.format == "json":
        return json.dumps({**_header(args), "points": [list(pt) for pt in prof.points]})
    if args.format == "csv":
        return _csv([["k", "c"], *prof.points])
    return _points_text(prof.points)


def cmd_oracle(args) -> str:
    _, s = _load(args)
    if args.k is not None:
        fast = k_error_lc(s, args.k).klc
        brute = brute_force_klc(s, args.k, budget=args.budget)
        verdict = "MATCH" if fast == brute else "MISMATCH"
        if args.format == "json":
            return json.dumps({**_header(args), "k": args.k, "klc": fast, "brute_klc": brute, "match": fast == brute})
        if args.format == "csv":
            return _csv([["k", "klc", "brute_klc", "match"], [args.k, fast, brute, verdict]])
        return f"k={args.k} klc={fast} brute_klc={brute} {verdict}"

    brute = [tuple(pt) for pt in brute_force_profile(s, budget=args.budget)]
    fast = list(tight_profile(s).points)
    verdict = "MATCH" if fast == brute else "MISMATCH"
    if args.format == "json":
        return json.dumps(
            {
                **_header(args),
                "points": [list(pt) for pt in fast],
                "brute_points": [list(pt) for pt in brute],
                "match": fast == brute,
            }
        )
    if args.format == "csv":
        rows = [["source", "k", "c"]]
        rows += [["fast", k, c] for k, c in fast]
        rows += [["brute", k, c] for k, c in brute]
        return _csv(rows)
    return f"points={_points_text(fast)}\nbrute_points={_points_text(brute)}\n{verdict}"


def cmd_gen(args) -> str | None:
    field = make_field(args.p, args.m, args.modulus)
    text = serialize_sequence(random_sequence(field, args.n, args.seed))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
        return None
    return text


COMMANDS = {"lc": cmd_lc, "klc": cmd_klc, "tight": cmd_tight, "oracle": cmd_oracle, "gen": cmd_gen}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        out = COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        print(f"lcprof: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (LcprofError, OSError) as exc:
        print(f"lcprof: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if out is not None:
        print(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

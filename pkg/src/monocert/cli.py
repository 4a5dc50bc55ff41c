"""Command-line front end: evaluate, verify, tabulate, batch-report.

Exit codes are part of the interface and stable: 0 pass, 1 fail,
2 usage or domain error, 3 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .enclosure import DomainError, Enclosure
from . import certify
from .targets import (
    GuardZoneError,
    SEQUENCE_MODES,
    ball_root_slope_chain,
    ball_volume_root,
    fg_ratio_core,
    gamma_log_ratio,
    omega_sequence_term,
    unit_ball_volume,
    volume_sequence_value,
)

__all__ = ["main"]

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

_STATUS_EXIT = {
    certify.PASS: EXIT_PASS,
    certify.FAIL: EXIT_FAIL,
    certify.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}

# target token -> (evaluator, argument kind)
_EVAL_TARGETS = {
    "F": (gamma_log_ratio, "real"),
    "G": (ball_volume_root, "real"),
    "omega": (unit_ball_volume, "dimension"),
    "omega_term": (omega_sequence_term, "dimension"),
    "q": (fg_ratio_core, "real"),
    "h": (lambda x: ball_root_slope_chain("h", x), "real"),
    "h1": (lambda x: ball_root_slope_chain("h1", x), "real"),
    "h2": (lambda x: ball_root_slope_chain("h2", x), "real"),
}

_SEQUENCE_MINIMUM = {"unit": 1, "inv_n": 1, "inv_nlnn": 2, "paper": 3}

_THEOREM1_GRID = (0.0, 50.0, 0.01)
_THEOREM2_GRID = (1.0 + 2.0 ** -10, 50.0, 0.01)


def _canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _cmd_eval(args) -> int:
    fn, kind = _EVAL_TARGETS[args.target]
    if kind == "dimension":
        try:
            arg = int(args.x)
        except ValueError:
            return _fail_usage(
                f"target {args.target!r} needs an integer dimension, got {args.x!r}"
            )
    else:
        try:
            arg = float(args.x)
        except ValueError:
            return _fail_usage(f"could not parse {args.x!r} as a number")
    try:
        enc = fn(arg)
    except GuardZoneError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except DomainError as exc:
        return _fail_usage(str(exc))
    except OverflowError as exc:
        return _fail_usage(
            f"value exceeds binary64 range ({exc}); no finite enclosure exists"
        )
    if args.format == "json":
        _emit(_canonical_json({
            "target": args.target,
            "argument": arg,
            "lo": enc.lo,
            "hi": enc.hi,
            "mid": enc.mid,
        }), args.out)
    else:
        _emit(
            f"{args.target}({arg}) enclosure\n"
            f"  lo  {enc.lo!r}\n"
            f"  hi  {enc.hi!r}\n"
            f"  mid {enc.mid!r}\n",
            args.out,
        )
    return EXIT_PASS


def _run_verifier(theorem: str, n_max: int, grid_from, grid_to, grid_step):
    if theorem == "lemma2":
        return certify.verify_lemma2()
    if theorem == "theorem1":
        g = _THEOREM1_GRID
        grid = (
            g[0] if grid_from is None else grid_from,
            g[1] if grid_to is None else grid_to,
            g[2] if grid_step is None else grid_step,
        )
        return certify.verify_theorem1(grid=grid)
    if theorem == "theorem2":
        g = _THEOREM2_GRID
        grid = (
            g[0] if grid_from is None else grid_from,
            g[1] if grid_to is None else grid_to,
            g[2] if grid_step is None else grid_step,
        )
        return certify.verify_theorem2(n_max=n_max, grid=grid)
    if theorem == "remark1":
        return certify.verify_remark1(n_max=n_max)
    raise DomainError(f"unknown theorem {theorem!r}")


def _cmd_verify(args) -> int:
    try:
        report = _run_verifier(
            args.theorem, args.n_max, args.grid_from, args.grid_to, args.grid_step
        )
    except DomainError as exc:
        return _fail_usage(str(exc))
    if args.format == "json":
        _emit(certify.report_to_json_text(report), args.out)
    else:
        _emit(certify.report_to_text(report), args.out)
    return _STATUS_EXIT[report.overall]


def _difference_sign(prev: Enclosure, cur: Enclosure) -> str:
    if cur.hi < prev.lo:
        return "-"
    if cur.lo > prev.hi:
        return "+"
    return "?"


def _cmd_sequence(args) -> int:
    mode = args.exponent
    lo_n = _SEQUENCE_MINIMUM[mode]
    if args.n_from < 1 or args.n_from >= args.n_to:
        return _fail_usage(
            f"need 1 <= n_from < n_to, got {args.n_from} .. {args.n_to}"
        )
    if args.n_from < lo_n:
        return _fail_usage(
            f"exponent {mode!r} is defined from n = {lo_n}, got n_from = {args.n_from}"
        )
    rows = []
    prev = None
    for n in range(args.n_from, args.n_to + 1):
        enc = volume_sequence_value(n, mode)
        sign = None if prev is None else _difference_sign(prev, enc)
        rows.append((n, enc, sign))
        prev = enc
    if args.format == "json":
        _emit(_canonical_json({
            "exponent": mode,
            "n_from": args.n_from,
            "n_to": args.n_to,
            "rows": [
                {"n": n, "lo": enc.lo, "hi": enc.hi, "diff": sign}
                for n, enc, sign in rows
            ],
        }), args.out)
    else:
        lines = [f"{'n':>6}  {'lo':>24}  {'hi':>24}  diff"]
        for n, enc, sign in rows:
            mark = sign if sign is not None else "·"
            lines.append(
                f"{n:>6}  {enc.lo!r:>24}  {enc.hi!r:>24}  {mark}"
            )
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_PASS


def _cmd_report_all(args) -> int:
    out_dir = Path(args.out if args.out is not None else "reports")
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        probe = out_dir / ".writable"
        probe.write_text("")
        probe.unlink()
    except OSError as exc:
        return _fail_usage(f"destination not writable: {exc}")
    reports = {
        "lemma2": certify.verify_lemma2(),
        "theorem1": certify.verify_theorem1(),
        "theorem2": certify.verify_theorem2(n_max=args.n_max),
        "remark1": certify.verify_remark1(n_max=args.n_max),
    }
    try:
        for name, report in reports.items():
            (out_dir / f"{name}.json").write_text(certify.report_to_json_text(report))
        overall = certify.meet_status(r.overall for r in reports.values())
        summary = {
            "overall": overall,
            "exit_code": _STATUS_EXIT[overall],
            "theorems": {name: r.overall for name, r in reports.items()},
        }
        (out_dir / "summary.json").write_text(_canonical_json(summary))
    except OSError as exc:
        return _fail_usage(f"could not write report: {exc}")
    for name, report in reports.items():
        print(f"{name}: {report.overall} -> {out_dir / name}.json")
    print(f"summary: {summary['overall']} -> {out_dir / 'summary.json'}")
    return _STATUS_EXIT[overall]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monocert",
        description=(
            "Certified monotonicity toolkit: rigorous enclosures, exact "
            "polynomial positivity certificates, and desk-scale grid "
            "certificates for a gamma-quotient function family."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("text", "json"), default="text",
                       help="output format (default text)")
        p.add_argument("--out", default=None, metavar="PATH",
                       help="write output to PATH instead of stdout")

    p_eval = sub.add_parser("eval", help="evaluate one target, print its enclosure")
    p_eval.add_argument("target", choices=sorted(_EVAL_TARGETS))
    p_eval.add_argument("x", help="real argument (integer dimension for omega targets)")
    add_common(p_eval)
    p_eval.set_defaults(func=_cmd_eval)

    p_verify = sub.add_parser("verify", help="replay one verification suite")
    p_verify.add_argument("theorem",
                          choices=("lemma2", "theorem1", "theorem2", "remark1"))
    p_verify.add_argument("--n-max", type=int, default=200,
                          help="sequence upper bound (default 200)")
    p_verify.add_argument("--grid-from", type=float, default=None,
                          help="grid start (default per theorem)")
    p_verify.add_argument("--grid-to", type=float, default=None,
                          help="grid end (default 50)")
    p_verify.add_argument("--grid-step", type=float, default=None,
                          help="grid step (default 0.01)")
    add_common(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_seq = sub.add_parser("sequence", help="tabulate the dimension sequence")
    p_seq.add_argument("n_from", type=int)
    p_seq.add_argument("n_to", type=int)
    p_seq.add_argument("exponent", choices=SEQUENCE_MODES)
    add_common(p_seq)
    p_seq.set_defaults(func=_cmd_sequence)

    p_all = sub.add_parser("report-all",
                           help="run every verification, write JSON bundle")
    p_all.add_argument("--n-max", type=int, default=200,
                       help="sequence upper bound (default 200)")
    p_all.add_argument("--out", default=None, metavar="DIR",
                       help="destination directory (default ./reports)")
    p_all.set_defaults(func=_cmd_report_all)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        return _fail_usage(str(exc))


if __name__ == "__main__":
    sys.exit(main())

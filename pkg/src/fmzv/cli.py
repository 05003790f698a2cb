"""Command-line front end.

Exit codes: 0 when everything requested passed (above the floor), 1 when at
least one check failed above its floor, 2 for usage or parse errors (the
offending token is reported on standard error).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .indices import format_index, hoffman_dual, parse_index
from .modp import bernoulli_mod_p, primes_in, zeta_mod_p
from .suite import run_battery
from .verify import (
    CheckReport,
    check_eq3,
    check_height_one,
    check_homogeneous_zero,
    check_ikz,
    check_key_lemma,
    check_lemma2,
    check_ohno,
    check_shuffle_duality,
    check_stuffle_hom,
    check_sum_formula,
)
from .words import check_word

PRIMES_ENV = "FMZV_DEFAULT_PRIMES"


def _parse_window(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    if not sep or not lo.isdigit() or not hi.isdigit():
        raise ValueError(f"bad prime window {text!r}, expected LO:HI")
    return int(lo), int(hi)


def _window_from(args) -> tuple[int, int]:
    if args.primes:
        return _parse_window(args.primes)
    env = os.environ.get(PRIMES_ENV)
    if env:
        return _parse_window(env)
    raise ValueError(f"a prime window is required: pass --primes LO:HI or set {PRIMES_ENV}")


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def render_json(report: CheckReport) -> str:
    return json.dumps(report.to_json_dict(), indent=2) + "\n"


def render_csv(report: CheckReport) -> str:
    if report.mode == "symbolic":
        return "equal\n" + ("true" if report.equal else "false") + "\n"
    lines = ["p,lhs,rhs,pass"]
    for r in report.results:
        lines.append(f"{r.p},{r.lhs},{r.rhs},{'true' if r.ok else 'false'}")
    return "\n".join(lines) + "\n"


def _params_text(params: dict) -> str:
    bits = []
    for key, value in params.items():
        if isinstance(value, list):
            value = ",".join(str(v) for v in value)
        bits.append(f"{key}={value}")
    return "  ".join(bits)


def render_table(report: CheckReport) -> str:
    lines = [f"check: {report.identity}  {_params_text(report.params)}"]
    if report.mode == "symbolic":
        lines.append(f"result: {'EQUAL' if report.equal else 'DIFFER'}")
        if not report.equal:
            lines.append(f"  lhs: {report.lhs}")
            lines.append(f"  rhs: {report.rhs}")
    else:
        lines.append(f"floor: {report.floor}")
        sub = [r for r in report.results if r.p < report.floor]
        main = [r for r in report.results if r.p >= report.floor]
        width = max((len(str(r.p)) for r in report.results), default=1)
        vwidth = max(
            [3] + [max(len(str(r.lhs)), len(str(r.rhs))) for r in report.results]
        )

        def block(rows):
            out = [f"  {'p':>{width}}  {'lhs':>{vwidth}}  {'rhs':>{vwidth}}  pass"]
            for r in rows:
                out.append(
                    f"  {r.p:>{width}}  {r.lhs:>{vwidth}}  {r.rhs:>{vwidth}}  "
                    f"{'yes' if r.ok else 'NO'}"
                )
            return out

        if sub:
            lines.append("sub-floor primes (informative):")
            lines.extend(block(sub))
        if main:
            lines.append("checked primes:")
            lines.extend(block(main))
    lines.append(
        f"summary: {'PASS' if report.passed else 'FAIL'}  "
        f"checked={report.checked} failed_above_floor={report.failed_above_floor}"
    )
    return "\n".join(lines) + "\n"


_RENDERERS = {"table": render_table, "json": render_json, "csv": render_csv}


def _finish_report(report: CheckReport, args) -> int:
    _emit(_RENDERERS[args.format](report), args.output)
    return 0 if report.passed else 1


def _add_output_opts(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("table", "json", "csv"), default="table",
        help="output format (default: table)",
    )
    parser.add_argument("--output", metavar="PATH", help="write output to a file")


def _add_numeric_opts(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--primes", metavar="LO:HI", help="prime window, inclusive")
    parser.add_argument("--floor", type=int, help="override the pass/fail floor")
    parser.add_argument(
        "--jobs", type=int, default=os.cpu_count() or 1,
        help="parallel workers across primes (default: available cores)",
    )
    _add_output_opts(parser)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fmzv",
        description="Word-algebra and mod-p checks for finite multiple zeta value identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dual = sub.add_parser("dual", help="Hoffman dual of an index")
    p_dual.add_argument("index", help="comma-separated parts, e.g. 2,3,1,2")

    p_zeta = sub.add_parser("zeta", help="harmonic-sum residues over a prime window")
    p_zeta.add_argument("--index", required=True)
    p_zeta.add_argument("--primes", metavar="LO:HI")
    p_zeta.add_argument("--format", choices=("csv", "json"), default="csv")
    p_zeta.add_argument("--output", metavar="PATH")

    p_bern = sub.add_parser("bernoulli", help="B_(p-k) mod p over a prime window")
    p_bern.add_argument("--k", type=int, required=True)
    p_bern.add_argument("--primes", metavar="LO:HI")
    p_bern.add_argument("--format", choices=("csv", "json"), default="csv")
    p_bern.add_argument("--output", metavar="PATH")

    p_check = sub.add_parser("check", help="run one identity checker")
    csub = p_check.add_subparsers(dest="check_command", required=True)

    p = csub.add_parser("ohno", help="shifted-sum relation")
    p.add_argument("--index", required=True)
    p.add_argument("--n", type=int, required=True)
    _add_numeric_opts(p)

    p = csub.add_parser("sum-formula", help="fixed weight/depth sum vs closed form")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    _add_numeric_opts(p)

    p = csub.add_parser("height-one", help="ones-padded double sum vs closed form")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    _add_numeric_opts(p)

    p = csub.add_parser("stuffle", help="harmonic product vs product of values")
    p.add_argument("--w", required=True)
    p.add_argument("--wp", required=True)
    _add_numeric_opts(p)

    p = csub.add_parser("duality", help="shuffle product vs signed reversed concatenation")
    p.add_argument("--w", required=True)
    p.add_argument("--wp", required=True)
    _add_numeric_opts(p)

    p = csub.add_parser("homogeneous", help="vanishing of a constant-index sum")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    _add_numeric_opts(p)

    p = csub.add_parser("lemma2", help="word-side lemma value vs zero")
    p.add_argument("--index", required=True)
    p.add_argument("--n", type=int, required=True)
    _add_numeric_opts(p)

    p = csub.add_parser("key-lemma", help="index-side lemma value vs zero")
    p.add_argument("--index", required=True)
    p.add_argument("--n", type=int, required=True)
    _add_numeric_opts(p)

    p = csub.add_parser("eq3", help="exact word identity (symbolic)")
    p.add_argument("--index", required=True)
    p.add_argument("--n", type=int, required=True)
    _add_output_opts(p)

    p = csub.add_parser("ikz", help="truncated series identity (symbolic)")
    p.add_argument("--w", required=True)
    p.add_argument("--order", type=int, required=True)
    _add_output_opts(p)

    p_suite = sub.add_parser("suite", help="run the full verification battery")
    p_suite.add_argument("--max-weight", type=int, default=7)
    p_suite.add_argument("--max-n", type=int, default=3)
    p_suite.add_argument("--primes", metavar="LO:HI")
    p_suite.add_argument(
        "--jobs", type=int, default=1,
        help="parallel workers per check (default: 1; the battery is cache-bound)",
    )
    p_suite.add_argument("--format", choices=("table", "json"), default="table")
    p_suite.add_argument("--output", metavar="PATH")

    return parser


def _cmd_dual(args) -> int:
    k = parse_index(args.index)
    sys.stdout.write(format_index(hoffman_dual(k)) + "\n")
    return 0


def _cmd_zeta(args) -> int:
    k = parse_index(args.index)
    lo, hi = _window_from(args)
    ps = primes_in(lo, hi)
    if not ps:
        raise ValueError(f"no primes in window [{lo}, {hi}]")
    values = [(p, zeta_mod_p(k, p)) for p in ps]
    if args.format == "json":
        doc = {
            "identity": "zeta",
            "params": {"index": list(k), "primes": [lo, hi]},
            "results": [{"p": p, "value": v} for p, v in values],
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
    else:
        _emit("".join(f"{p},{v}\n" for p, v in values), args.output)
    return 0


def _cmd_bernoulli(args) -> int:
    lo, hi = _window_from(args)
    ps = [p for p in primes_in(lo, hi) if p >= args.k + 2]
    if not ps:
        raise ValueError(f"no primes p >= k+2 in window [{lo}, {hi}]")
    values = [(p, bernoulli_mod_p(args.k, p)) for p in ps]
    if args.format == "json":
        doc = {
            "identity": "bernoulli",
            "params": {"k": args.k, "primes": [lo, hi]},
            "results": [{"p": p, "value": v} for p, v in values],
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
    else:
        _emit("".join(f"{p},{v}\n" for p, v in values), args.output)
    return 0


def _cmd_check(args) -> int:
    name = args.check_command
    if name == "eq3":
        return _finish_report(check_eq3(parse_index(args.index), args.n), args)
    if name == "ikz":
        return _finish_report(check_ikz(check_word(args.w), args.order), args)

    window = _window_from(args)
    if args.floor is not None and args.floor > window[1]:
        raise ValueError(
            f"floor {args.floor} lies above the top of the window {window[1]}"
        )
    kwargs = {"floor": args.floor, "jobs": args.jobs}
    if name == "ohno":
        report = check_ohno(parse_index(args.index), args.n, window, **kwargs)
    elif name == "sum-formula":
        report = check_sum_formula(args.k, args.r, args.i, window, **kwargs)
    elif name == "height-one":
        report = check_height_one(args.a, args.b, window, **kwargs)
    elif name == "stuffle":
        report = check_stuffle_hom(check_word(args.w), check_word(args.wp), window, **kwargs)
    elif name == "duality":
        report = check_shuffle_duality(check_word(args.w), check_word(args.wp), window, **kwargs)
    elif name == "homogeneous":
        report = check_homogeneous_zero(args.a, args.r, window, **kwargs)
    elif name == "lemma2":
        report = check_lemma2(parse_index(args.index), args.n, window, **kwargs)
    elif name == "key-lemma":
        report = check_key_lemma(parse_index(args.index), args.n, window, **kwargs)
    else:  # pragma: no cover - argparse restricts the choices
        raise ValueError(f"unknown check {name!r}")
    return _finish_report(report, args)


def _cmd_suite(args) -> int:
    if args.primes:
        window = _parse_window(args.primes)
    else:
        env = os.environ.get(PRIMES_ENV)
        window = _parse_window(env) if env else (2, 200)
    lines: list[str] = []
    steps = run_battery(
        max_weight=args.max_weight,
        max_n=args.max_n,
        window=window,
        jobs=args.jobs,
        log=lines.append,
    )
    ok = all(s.passed for s in steps)
    if args.format == "json":
        doc = {
            "suite": {
                "max_weight": args.max_weight,
                "max_n": args.max_n,
                "primes": list(window),
            },
            "steps": [
                {"step": s.name, "pass": s.passed, "detail": s.detail} for s in steps
            ],
            "pass": ok,
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
    else:
        lines.append(f"suite: {'PASS' if ok else 'FAIL'} ({len(steps)} steps)")
        _emit("\n".join(lines) + "\n", args.output)
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "dual":
            return _cmd_dual(args)
        if args.command == "zeta":
            return _cmd_zeta(args)
        if args.command == "bernoulli":
            return _cmd_bernoulli(args)
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "suite":
            return _cmd_suite(args)
        raise ValueError(f"unknown command {args.command!r}")  # pragma: no cover
    except (ValueError, ZeroDivisionError) as exc:
        print(f"fmzv: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

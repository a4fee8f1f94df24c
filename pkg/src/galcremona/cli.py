"""Command line: build, analyze, extend, corpus, parse-check.

Input blocks are key = value lines (or ';'-separated on one line)::

    curve = (x + y)^3 - x^3*y
    point = (1 : 0 : 0)

    kummer = 4; q = t^4 + 1; c = [2, 1, 1, 1]

Exit codes: 0 success, 1 a corpus check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import corpus as corpus_mod
from .parser import ParseError, parse_expr, to_mpoly, to_ratfunc, variables
from .pipeline import (Job, RunConfig, parse_job_text, report, run_analyze, run_build, run_extend,
                       text_report)


def _read_jobs(args) -> list[Job]:
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    elif args.text:
        text = "\n".join(args.text)
    else:
        text = sys.stdin.read()
    jobs = parse_job_text(text)
    if args.field is not None:
        for job in jobs:
            job.field_order = job.field_order or args.field
    return jobs


def _emit(results, as_json: bool, extra=None) -> None:
    if as_json:
        payload = []
        for res in results:
            rep = report(res)
            if extra:
                rep.update(extra(res))
            payload.append(rep)
        print(json.dumps(payload if len(payload) != 1 else payload[0], indent=2, ensure_ascii=False))
    else:
        print("\n\n".join(text_report(r) for r in results))


def _build_extra(res) -> dict:
    return {
        "curve": res.curve.f.to_str(["x", "y"]) if res.curve is not None else None,
        "fiber": str(res.fiber) if res.fiber is not None else None,
    }


def cmd_build(args) -> int:
    jobs = _read_jobs(args)
    if any(not j.is_kummer for j in jobs):
        raise ValueError("build expects Kummer input (kummer = n; q = ...; c = [...])")
    _emit([run_build(j) for j in jobs], args.json, _build_extra)
    return 0


def cmd_analyze(args) -> int:
    _emit([run_analyze(j) for j in _read_jobs(args)], args.json, _build_extra)
    return 0


def cmd_extend(args) -> int:
    config = RunConfig(order_bound=args.order_bound, check_curve=not args.skip_curve_check)
    _emit([run_extend(j, config) for j in _read_jobs(args)], args.json, _build_extra)
    return 0


def cmd_corpus(args) -> int:
    entries = corpus_mod.CORPUS
    if args.entry is not None and args.entry not in corpus_mod.entry_ids():
        print(f"unknown corpus entry {args.entry!r}; known: {', '.join(corpus_mod.entry_ids())}",
              file=sys.stderr)
        return 2
    results = corpus_mod.run_corpus(entries, args.entry)
    if args.json:
        print(json.dumps([r.__dict__ for r in results], indent=2))
    else:
        print(corpus_mod.format_table(results))
    return 0 if all(r.passed for r in results) else 1


def cmd_parse_check(args) -> int:
    from .arith import RationalFunctionField, make_cyclotomic

    nf = make_cyclotomic(args.field or 1)
    text = args.text_arg if args.text_arg is not None else sys.stdin.read()
    node = parse_expr(text)
    used = variables(node) - {"z"}
    if used <= {"t"}:
        K = RationalFunctionField(nf, "t")
        out = str(to_ratfunc(node, K))
    else:
        names = tuple(v for v in ("x", "y", "t", "X", "Y", "Z") if v in used)
        out = to_mpoly(node, names, nf).to_str(list(names))
    if args.json:
        print(json.dumps({"input": text.strip(), "canonical": out}))
    else:
        print(out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="galcremona",
                                 description="Galois points of plane curves and their "
                                             "de Jonquieres extensions")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_text=True):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--field", type=int, default=None,
                       help="cyclotomic order n of the coefficient field Q(zeta_n); z = zeta_n")
        if with_text:
            p.add_argument("--input", help="file with key = value input blocks")
            p.add_argument("text", nargs="*", help="inline input block (else --input or stdin)")

    for name, fn, hlp in (("build", cmd_build, "curve from Kummer data"),
                          ("analyze", cmd_analyze, "Galois analysis at a point"),
                          ("extend", cmd_extend, "analysis plus de Jonquieres lift")):
        p = sub.add_parser(name, help=hlp)
        common(p)
        p.set_defaults(func=fn)
        if name == "extend":
            p.add_argument("--order-bound", type=int, default=RunConfig.order_bound,
                           help="largest power tried for the order of the lift")
            p.add_argument("--skip-curve-check", action="store_true",
                           help="do not test that the lift preserves the curve")

    p = sub.add_parser("corpus", help="run the bundled regression corpus")
    p.add_argument("--json", action="store_true")
    p.add_argument("--entry", default=None, help="run a single entry id")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("parse-check", help="parse and print an expression canonically")
    common(p, with_text=False)
    p.add_argument("text_arg", nargs="?", default=None, metavar="TEXT")
    p.set_defaults(func=cmd_parse_check)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

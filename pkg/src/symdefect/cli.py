"""Command-line front end."""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, verify
from .descend import DescentError, analyze, load_spec
from .expr import ExprError, evaluate, parse
from .genealogy import ROOTS, genealogy
from .reps import defect


def _cmd_defect(args, out):
    rep = evaluate(parse(args.expr))
    print(f"decomposition: {rep}", file=out)
    print(f"defect: {defect(rep)}", file=out)
    return 0


def _cmd_decompose(args, out):
    print(evaluate(parse(args.expr)), file=out)
    return 0


def _cmd_verify(args, out):
    fam, jobs = args.family, args.jobs
    if fam == "gl-o":
        report = verify.verify_gl_o(args.max_dim or 12, jobs=jobs)
    elif fam == "pi-pibar":
        report = verify.verify_pi_pibar(args.max_dim or 12, jobs=jobs)
    elif fam == "o-oxo":
        report = verify.verify_o_oxo(args.max_dim or 12, jobs=jobs)
    elif fam == "gl-vv":
        # dim pi_0 = dim pi_1, so the total dimension bounds each half by max_dim // 2
        report = verify.verify_gl_vv((args.max_dim or 12) // 2, jobs=jobs)
    elif fam == "closed-forms":
        report = verify.verify_closed_forms(args.max_lambda or 10, jobs=jobs)
    else:
        report = verify.verify_against_oracle(args.max_lambda or 8, args.max_dim or 40, jobs=jobs)
    print(report.to_json() if args.format == "json" else report.to_text(), file=out)
    return 0 if report.ok else 1


def _cmd_descend(args, out):
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    result = analyze(load_spec(text))
    for w in result.warnings:
        print(f"warning: {w}", file=sys.stderr)
    if args.format == "json":
        print(json.dumps(result.to_json(), indent=2), file=out)
    else:
        print(result.to_text(), file=out)
    return 0


def _cmd_genealogy(args, out):
    print(genealogy(args.root).render(args.format), file=out)
    return 0


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="symdefect", description="Graded sl2 defects and descendants of symmetric pairs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    d = sub.add_parser("defect", help="decompose an expression and print its defect")
    d.add_argument("expr")
    d.set_defaults(func=_cmd_defect)

    d = sub.add_parser("decompose", help="print the canonical decomposition of an expression")
    d.add_argument("expr")
    d.set_defaults(func=_cmd_decompose)

    v = sub.add_parser("verify", help="run an exhaustive verifier")
    v.add_argument("--family", required=True, choices=verify.FAMILIES)
    v.add_argument("--max-dim", type=_positive, default=None,
                   help="dimension bound (default 12; oracle: 40)")
    v.add_argument("--max-lambda", type=_positive, default=None,
                   help="highest-weight bound for closed-forms (default 10) and oracle (default 8)")
    v.add_argument("--jobs", type=_positive, default=1)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(func=_cmd_verify)

    s = sub.add_parser("descend", help="descendants from minimal-polynomial factor data")
    s.add_argument("--input", required=True, help="JSON spec file, or - for stdin")
    s.add_argument("--format", choices=("json", "text"), default="json")
    s.set_defaults(func=_cmd_descend)

    g = sub.add_parser("genealogy", help="render a genealogy graph")
    g.add_argument("--root", required=True, choices=ROOTS)
    g.add_argument("--format", choices=("dot", "json", "text"), default="text")
    g.set_defaults(func=_cmd_genealogy)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except (ExprError, DescentError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 success, 2 malformed or invalid input, 3 a mathematical
precondition failed (non-isolated singularity, hypothesis not met, ...).
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from nspairs.errors import InputError, PreconditionError, StructureError
from nspairs.germs import elk_degree, gradient, parse_germ, winding_degree
from nspairs.invariants import compose_projection, higher_dim_construct, looijenga_sum, spun
from nspairs.linking import LinkingMatrix, classify, generate_unimodular_blocks
from nspairs.records import sup
from nspairs import serialize

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION = 0, 2, 3


def _emit(args, text_lines, payload, quiet_line=None):
    if args.emit == "json":
        sys.stdout.write(serialize.dumps(payload))
        return
    if args.quiet:
        print(quiet_line if quiet_line is not None else text_lines[-1])
        return
    for line in text_lines:
        print(line)


def _classify_summary(report) -> str:
    if report.is_ns_pair:
        link = f"{report.link_components} × S{sup(report.n - 1)}"
        return f"NS-pair: yes; link: {link}; fiber: {report.fiber.model_str()}"
    if report.symmetry_sign < 0 and report.k % 2:
        return "NS-pair: no (odd k)"
    return f"NS-pair: no; {_homology_label(report)} = {report.homology.cokernel_str()}"


def _homology_label(report) -> str:
    return report.homology_label() if report.det_R is not None else "coker A"


def cmd_classify(args) -> int:
    L = serialize.load_matrix(args.path)
    report = classify(L, args.n)
    kind = "skew-symmetric" if report.symmetry_sign < 0 else "symmetric"
    lines = [f"k = {report.k} ({kind}, n = {report.n})", f"det A = {report.det_A}"]
    if report.pfaffian_A is not None:
        lines.append(f"Pf A = {report.pfaffian_A}")
    if report.det_R is not None:
        lines.append(f"det R = {report.det_R}")
    label = _homology_label(report)
    factors = ", ".join(str(d) for d in report.h2_invariant_factors) or "none"
    lines.append(f"{label} invariant factors: {factors}")
    lines.append(f"{label} = {report.homology.cokernel_str()}")
    lines.append(f"fiber: {report.fiber.summary()}")
    lines.append(_classify_summary(report))
    _emit(args, lines, serialize.report_to_json(report))
    return EXIT_OK


def _parse_vars(text: str) -> tuple:
    names = tuple(v.strip() for v in text.split(",") if v.strip())
    if not names:
        raise StructureError("--vars needs at least one variable name")
    return names


def cmd_degree(args) -> int:
    germ = parse_germ(args.expr, _parse_vars(args.vars))
    radius = None
    if args.oracle == "winding":
        try:
            radius = Fraction(args.radius)
        except (ValueError, ZeroDivisionError):
            raise StructureError(f"--radius must be a positive rational, got {args.radius!r}") from None
    result = elk_degree(germ)
    lines = [f"germ: {germ}", f"degree: {result.degree}",
             f"local algebra dimension: {result.local_algebra_dim}",
             f"method: {result.method}", f"certificate: {result.certificate}"]
    oracle = None
    agree = True
    if radius is not None:
        w = winding_degree(gradient(germ), radius)
        agree = w == result.degree
        oracle = {"method": "winding", "radius": str(radius), "degree": w, "agrees": agree}
        lines.append(f"oracle (winding, r = {radius}): {w} ({'agrees' if agree else 'DISAGREES'})")
    quiet = f"degree: {result.degree}"
    if oracle is not None:
        quiet += f" (oracle {'agrees' if agree else 'disagrees'})"
    _emit(args, lines, serialize.degree_to_json(result, germ, oracle), quiet)
    return EXIT_OK if agree else 1


def _load_pair_or_record(path: str):
    """A .lkm file becomes the NS-pair record of its linking matrix."""
    p = Path(path)
    if p.suffix == ".lkm":
        report = classify(serialize.load_matrix(p))
        return report.pair_record()
    return serialize.load_record(p)


def cmd_construct(args) -> int:
    op = args.op
    if op == "higher":
        if (args.blocks is None) == (args.matrix is None):
            raise StructureError("construct higher needs exactly one of --blocks or --matrix")
        if args.blocks is not None:
            L = generate_unimodular_blocks(args.blocks)
            if args.n % 2 == 0:
                # symmetric counterpart: blocks [[0, 1], [1, 0]]
                rows = L.a.to_rows()
                L = LinkingMatrix.from_rows([[abs(v) for v in r] for r in rows], 1)
        else:
            L = serialize.load_matrix(args.matrix)
        rec = higher_dim_construct(args.n, L)
    else:
        if args.input is None:
            raise StructureError(f"construct {op} needs an input file")
        rec = _load_pair_or_record(args.input)
        rec = {"sum": looijenga_sum, "spin": spun, "project": compose_projection}[op](rec)
    if args.output:
        Path(args.output).write_text(serialize.dump_record(rec), encoding="utf-8")
    lines = [f"step: {s}" for s in rec.provenance] + [rec.describe()]
    _emit(args, lines, serialize.record_to_json(rec))
    return EXIT_OK


def cmd_generate(args) -> int:
    L = generate_unimodular_blocks(args.blocks)
    text = serialize.dump_matrix(L)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        if not args.quiet and args.emit == "text":
            print(f"wrote {args.output} (k = {L.k})")
        return EXIT_OK
    sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before and after the subcommand; the copies on
    # the subparsers default to SUPPRESS so they never clobber an earlier value
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--emit", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="nspairs", description=__doc__.splitlines()[0])
    parser.add_argument("--emit", choices=("text", "json"), default="text",
                        help="output format (default: text)")
    parser.add_argument("--quiet", action="store_true", default=False,
                        help="print only the summary line")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify a linking matrix file (.lkm)")
    p.add_argument("path")
    p.add_argument("--n", type=int, default=None,
                   help="fiber dimension n (spheres S^(n-1) in S^(2n-1)); default 3 or 4 by symmetry")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("degree", parents=[common], help="local degree of the gradient of a germ")
    p.add_argument("expr")
    p.add_argument("--vars", required=True, help="comma-separated variable names, e.g. x,y")
    p.add_argument("--oracle", choices=("winding",), default=None)
    p.add_argument("--radius", default="1/10", help="circle radius for the winding oracle")
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("construct", parents=[common], help="push invariants through a construction")
    p.add_argument("op", choices=("sum", "spin", "project", "higher"))
    p.add_argument("input", nargs="?", help=".nsr record (or .lkm matrix for sum)")
    p.add_argument("--n", type=int, default=3, help="n for `higher`")
    p.add_argument("--blocks", type=int, default=None, help="number of 2x2 unimodular blocks for `higher`")
    p.add_argument("--matrix", default=None, help="linking matrix file for `higher`")
    p.add_argument("-o", "--output", default=None, help="write the derived record here")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("generate", parents=[common], help="write a unimodular block matrix")
    p.add_argument("--blocks", type=int, required=True)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"nspairs: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"nspairs: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as exc:
        print(f"nspairs: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface.

Three subcommands:

    generate    print exact tables (sequences or triangular/square blocks)
    verify      run named verification scenarios, exit nonzero on failure
    oeis-check  compare generated sequences against vendored fixture files

Parameters b and c accept rational strings ("2", "-1/3") or "sym" for the
symbolic value.  Output is csv (one sequence value or one comma-joined row
per line) or json (object with kind, params, order and data, every value
rendered as a string so exactness survives serialization).

Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cfrac, oeis
from .lbp import (
    LBPFamily,
    MOMENT_ROUTES,
    coefficient_matrix,
    moment_matrix,
    moments,
)
from .hankel_toeplitz import (
    extend_moments,
    hankel_transform,
    toeplitz_dets,
)
from .orthopoly import ORTHO_KINDS, ortho_array
from .riordan import production_matrix
from .scalars import PARAM_B, PARAM_C, parse_rational

GENERATE_KINDS = (
    "lbp-coeffs",
    "moments",
    "production",
    "hankel",
    "toeplitz",
    "cfrac-expand",
    "ortho-array",
)


def _parse_param(text: str, symbol):
    if text == "sym":
        return symbol
    return parse_rational(text)


def _matrix_lines(rows) -> list[str]:
    return [",".join(str(v) for v in row) for row in rows]


def _triangle(matrix, dim: int) -> list[list]:
    return [[matrix.entry(n, k) for k in range(n + 1)] for n in range(dim)]


def _generate_data(args) -> list[str]:
    b = _parse_param(args.b, PARAM_B)
    c = _parse_param(args.c, PARAM_C)
    order = args.order
    if args.kind == "lbp-coeffs":
        fam = LBPFamily.constant(b, c, order=order)
        return _matrix_lines(_triangle(coefficient_matrix(fam, order + 1), order + 1))
    if args.kind == "moments":
        fam = LBPFamily.constant(b, c, order=order)
        return [str(v) for v in moments(fam, args.route, order)]
    if args.kind == "production":
        fam = LBPFamily.constant(b, c, order=order + 1)
        block = production_matrix(moment_matrix(fam, order + 2))
        return _matrix_lines(block)
    if args.kind == "hankel":
        fam = LBPFamily.constant(b, c, order=2 * order + 1)
        mu = moments(fam, "gf_expansion", 2 * order)
        return [str(v) for v in hankel_transform(list(mu), order)]
    if args.kind == "toeplitz":
        fam = LBPFamily.constant(b, c, order=2 * order + 2)
        mu = moments(fam, "gf_expansion", 2 * order + 1)
        bi = extend_moments(list(mu), c, max(order, 1))
        t_seq, tp_seq = toeplitz_dets(bi, order)
        return _matrix_lines([t_seq, tp_seq])
    if args.kind == "cfrac-expand":
        builder = {
            "s": cfrac.moment_sfraction,
            "j": cfrac.moment_jfraction,
            "t": cfrac.constant_tfraction,
        }[args.shape]
        series = cfrac.cf_expand(builder(b, c, order), order)
        return [str(v) for v in series.coeffs]
    if args.kind == "ortho-array":
        arr = ortho_array(args.family, b, c, order)
        return _matrix_lines(_triangle(arr.matrix(order + 1), order + 1))
    raise ValueError(f"unknown kind {args.kind!r}")


def cmd_generate(args) -> int:
    data = _generate_data(args)
    if args.format == "json":
        payload = {
            "kind": args.kind,
            "params": {"b": args.b, "c": args.c},
            "order": args.order,
            "data": data,
        }
        print(json.dumps(payload, indent=2))
    else:
        for line in data:
            print(line)
    return 0


def cmd_verify(args) -> int:
    from .scenarios import run_scenario

    reports = run_scenario(args.scenario, args.order)
    if args.format == "json":
        print(json.dumps([r.as_dict() for r in reports], indent=2))
    else:
        for report in reports:
            for line in report.lines():
                print(line)
    return 0 if all(r.passed for r in reports) else 1


def cmd_oeis_check(args) -> int:
    ids = oeis.known_ids() if args.sequence_id == "all" else (args.sequence_id,)
    checks = [oeis.check_sequence(sid, args.fixtures) for sid in ids]
    for chk in checks:
        print(chk.line() + (f"  [{chk.detail}]" if chk.passed and chk.detail else ""))
    return 0 if all(c.passed for c in checks) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="riordanlbp",
        description="Exact tables and identity checks for constant-coefficient "
                    "Laurent biorthogonal polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="print exact tables")
    gen.add_argument("kind", choices=GENERATE_KINDS)
    gen.add_argument("--b", default="sym",
                     help="rational string or 'sym'; write negatives as --b=-1/3")
    gen.add_argument("--c", default="sym",
                     help="rational string or 'sym'; write negatives as --c=-1/3")
    gen.add_argument("--order", type=int, default=12)
    gen.add_argument("--format", choices=("csv", "json"), default="csv")
    gen.add_argument("--route", choices=MOMENT_ROUTES, default="matrix_inverse",
                     help="moment computation route (moments kind only)")
    gen.add_argument("--shape", choices=("s", "j", "t"), default="t",
                     help="continued-fraction shape (cfrac-expand kind only)")
    gen.add_argument("--family", choices=ORTHO_KINDS, default="q",
                     help="companion family (ortho-array kind only)")
    gen.set_defaults(func=cmd_generate)

    ver = sub.add_parser("verify", help="run verification scenarios")
    ver.add_argument("scenario",
                     choices=("all", "example1", "example2", "example3",
                              "example4", "factorizations", "hankel",
                              "toeplitz", "cfrac"))
    ver.add_argument("--order", type=int, default=12)
    ver.add_argument("--format", choices=("text", "json"), default="text")
    ver.set_defaults(func=cmd_verify)

    oc = sub.add_parser("oeis-check", help="compare against vendored fixtures")
    oc.add_argument("sequence_id",
                    help=f"sequence id ({', '.join(oeis.known_ids())}) or 'all'")
    oc.add_argument("--fixtures", default=None,
                    help="fixture directory (default: vendored files)")
    oc.set_defaults(func=cmd_oeis_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, FileNotFoundError, ZeroDivisionError,
            IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: ``norm`` (print the norms of a series file), ``apply`` (apply
an operator and emit the result series), ``verify`` (run the verification
battery), and ``membership`` (test a series against a subspace spec file).

Exit codes: 0 on success / pass, 1 on a verification or membership failure,
2 on usage or configuration errors (bad flags, malformed files, invalid
specs).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .membership import membership, spec_from_dict
from .norms import (
    QuadratureConfig,
    SpaceParams,
    derivative_sum_norm,
    hp_norm,
    sn_norm,
    sup_sum_norm,
)
from .operators import OperatorDescriptor, apply_operator
from .series import dumps, load_series
from .verify import SUITES, RunConfig, run_suites

# factorial-ratio coefficients stay inside double range up to here
_MAX_CLI_ORDER_PARAM = 16

_DEFAULTS = RunConfig()


class _UsageError(ValueError):
    pass


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hardylab",
        description=(
            "Numerical laboratory for Hardy-type spaces on the unit disk: "
            "norms, shift and Volterra operators, inner functions, and "
            "invariant-subspace membership."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    norm = sub.add_parser("norm", help="print the norms of a series JSON file")
    norm.add_argument("series", help="path to a series JSON file")
    norm.add_argument("--n", dest="order_n", type=int, default=1,
                      help="derivative depth n of the space (default 1)")
    norm.add_argument("--p", type=float, default=2.0,
                      help="integrability exponent p (default 2)")
    norm.add_argument("--points", type=int, default=_DEFAULTS.points,
                      help="boundary quadrature points (default %(default)s)")
    norm.set_defaults(func=cmd_norm)

    app = sub.add_parser("apply", help="apply an operator to a series file")
    app.add_argument("series", help="path to a series JSON file")
    app.add_argument("operator",
                     choices=("shift", "volterra", "combined", "diff", "integrate"))
    app.add_argument("--n", dest="order_n", type=int, default=1,
                     help="operator parameter n (default 1, capped at "
                          f"{_MAX_CLI_ORDER_PARAM})")
    app.add_argument("--g", help="series file with the volterra symbol g")
    app.add_argument("--out", help="output path (stdout when omitted)")
    app.set_defaults(func=cmd_apply)

    ver = sub.add_parser("verify", help="run the verification battery")
    ver.add_argument("--suite", default="all",
                     help=f"suite name or 'all'; names: {', '.join(SUITES)}")
    ver.add_argument("--order", type=int, default=_DEFAULTS.order,
                     help="max sample degree (default %(default)s)")
    ver.add_argument("--points", type=int, default=_DEFAULTS.points,
                     help="quadrature points (default %(default)s)")
    ver.add_argument("--tol", type=float, default=_DEFAULTS.tol,
                     help="inequality slack (default %(default)s)")
    ver.add_argument("--seed", type=int, default=_DEFAULTS.seed,
                     help="run seed (default %(default)s)")
    ver.add_argument("--samples", type=int, default=_DEFAULTS.samples,
                     help="sample count for the invariance harnesses "
                          "(default %(default)s)")
    ver.add_argument("--negative-control", action="store_true",
                     help="twist every suite's check; failures are expected")
    ver.add_argument("--out", help="write the report here instead of stdout")
    ver.set_defaults(func=cmd_verify)

    mem = sub.add_parser("membership",
                         help="test a series file against a subspace spec file")
    mem.add_argument("series", help="path to a series JSON file")
    mem.add_argument("spec", help="path to a subspace spec JSON file")
    mem.add_argument("--tol", type=float, default=_DEFAULTS.tol,
                     help="residual tolerance, scale-relative (default %(default)s)")
    mem.set_defaults(func=cmd_membership)
    return parser


def _load_json(path):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise _UsageError(f"{path} is not valid JSON: {exc}") from exc


def _load_series(path):
    try:
        return load_series(path)
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc
    except (json.JSONDecodeError, ValueError) as exc:
        raise _UsageError(f"{path}: {exc}") from exc


def cmd_norm(args):
    f = _load_series(args.series)
    params = SpaceParams(args.order_n, args.p)
    cfg = QuadratureConfig(num_points=args.points)
    print(f"# series: {args.series} (order {f.order})")
    print(f"# quadrature: points={cfg.num_points} radius={cfg.radius} mode={cfg.mode}")
    print(f"hp-norm (p={args.p:g}):            {hp_norm(f, args.p, cfg):.15g}")
    print(f"space-norm (n={params.n}, p={args.p:g}):    "
          f"{sn_norm(f, params, cfg):.15g}")
    print(f"derivative-sum norm:         {derivative_sum_norm(f, params, cfg):.15g}")
    print(f"sup-sum norm:                {sup_sum_norm(f, params, cfg):.15g}")
    return 0


def cmd_apply(args):
    f = _load_series(args.series)
    if args.order_n > _MAX_CLI_ORDER_PARAM:
        raise _UsageError(
            f"operator parameter n is capped at {_MAX_CLI_ORDER_PARAM} on the "
            "command line to keep factorial ratios inside double range"
        )
    g = _load_series(args.g) if args.g else None
    descriptor = OperatorDescriptor(kind=args.operator, n=args.order_n, g=g)
    result = apply_operator(f, descriptor)
    text = dumps(result)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return 0


def cmd_verify(args):
    if args.suite == "all":
        names = list(SUITES)
    elif args.suite in SUITES:
        names = [args.suite]
    else:
        raise _UsageError(
            f"unknown suite {args.suite!r}; valid: all, {', '.join(SUITES)}"
        )
    cfg = RunConfig(
        order=args.order,
        points=args.points,
        tol=args.tol,
        seed=args.seed,
        samples=args.samples,
        negative_control=args.negative_control,
    )
    report = run_suites(names, cfg)
    text = report.render()
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0 if report.passed else 1


def cmd_membership(args):
    f = _load_series(args.series)
    try:
        spec = spec_from_dict(_load_json(args.spec))
        result = membership(f, spec, args.tol)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    print(f"member: {'yes' if result.member else 'no'} "
          f"(truncation order {result.truncation_order})")
    for cond in result.conditions:
        verdict = "PASS" if cond.passed else "FAIL"
        line = (f"  {cond.condition}: {verdict} residual={cond.residual:.6e} "
                f"threshold={cond.threshold:.6e}")
        if cond.note:
            line += f" [{cond.note}]"
        print(line)
    return 0 if result.member else 1


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint():
    raise SystemExit(main())

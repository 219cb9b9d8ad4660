"""Command-line front end.

Subcommands map one-to-one onto the solver functions; ``verify`` exposes
the exact checker.  All rational values on the command line use the text
form ``p/q`` (or a plain integer) with an optional leading ``-``; decimal
input is rejected rather than silently approximated.

Exit codes: 0 success, 1 degenerate parameters or failed verification,
2 usage errors.  Output for a fixed argv (including ``--seed``) is
byte-identical between runs.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import SigmaSolveError
from .rationals import format_rational, parse_rational
from .solvers import (
    DEFAULT_SEED,
    SameValueParams,
    Solution,
    SymmetricSystem,
    sigma123_system,
    sigma_product_system,
    solve_same_sigma_pair,
    solve_sigma123,
    solve_sigma_i_product,
    solve_sum_product,
    solve_triple_123,
    solve_triple_134,
    sum_product_system,
    triple_123_targets,
    triple_134_targets,
)
from .verify import check_solution

# provenance keys in canonical emission order
_PROVENANCE_KEYS = (
    "multiple",
    "branch",
    "seed",
    "t",
    "free",
    "parameter",
    "reduction",
    "skipped",
)


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _rational_list(text: str) -> Tuple[Fraction, ...]:
    try:
        return tuple(parse_rational(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _constraints(text: str) -> Tuple[Tuple[int, Fraction], ...]:
    out = []
    for part in text.split(","):
        if "=" not in part:
            raise argparse.ArgumentTypeError(
                f"constraint {part!r} is not of the form index=value"
            )
        index_text, _, value_text = part.partition("=")
        try:
            index = int(index_text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad constraint index: {index_text!r}")
        try:
            value = parse_rational(value_text)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc))
        out.append((index, value))
    return tuple(out)


def _jsonable_provenance(provenance: Dict[str, object]) -> Dict[str, object]:
    out: Dict[str, object] = {}
    for key in _PROVENANCE_KEYS:
        if key not in provenance:
            continue
        value = provenance[key]
        if isinstance(value, Fraction):
            out[key] = format_rational(value)
        elif isinstance(value, (list, tuple)):
            out[key] = [
                format_rational(v) if isinstance(v, Fraction) else v for v in value
            ]
        else:
            out[key] = value
    return out


def emit_solutions(
    system: SymmetricSystem, solutions: Sequence[Solution], fmt: str
) -> str:
    if fmt == "plain":
        return "\n".join(
            " ".join(format_rational(v) for v in sol.values) for sol in solutions
        )
    document = {
        "system": {
            "n": system.n,
            "constraints": [
                {"index": index, "target": format_rational(target)}
                for index, target in system.constraints
            ],
        },
        "solutions": [
            {
                "values": [format_rational(v) for v in sol.values],
                "provenance": _jsonable_provenance(sol.provenance),
            }
            for sol in solutions
        ],
    }
    return json.dumps(document, indent=2)


def _print_solutions(
    system: SymmetricSystem, solutions: Sequence[Solution], fmt: str
) -> int:
    print(emit_solutions(system, solutions, fmt))
    return 0


def _cmd_sum_product(args: argparse.Namespace) -> int:
    solutions = solve_sum_product(
        args.a,
        args.b,
        args.n,
        free=args.free,
        t=args.t,
        count=args.count,
        seed=args.seed,
    )
    return _print_solutions(sum_product_system(args.a, args.b, args.n), solutions, args.format)


def _cmd_sigma_product(args: argparse.Namespace) -> int:
    solutions = solve_sigma_i_product(
        args.i,
        args.a,
        args.b,
        args.n,
        free=args.free,
        count=args.count,
        seed=args.seed,
    )
    return _print_solutions(
        sigma_product_system(args.i, args.a, args.b, args.n), solutions, args.format
    )


def _cmd_same_values(args: argparse.Namespace) -> int:
    params = SameValueParams(n=args.n, i=args.i, j=args.j, reference=args.ref)
    solutions = solve_same_sigma_pair(params, count=args.count)
    return _print_solutions(params.system(), solutions, args.format)


def _cmd_triple_123(args: argparse.Namespace) -> int:
    solutions = solve_triple_123(args.a, args.d, args.t)
    b, c = triple_123_targets(args.a, args.d)
    system = SymmetricSystem(4, ((1, Fraction(args.a)), (2, b), (3, c)))
    return _print_solutions(system, solutions, args.format)


def _cmd_triple_134(args: argparse.Namespace) -> int:
    solutions = solve_triple_134(args.a, args.d, count=args.count)
    b, c = triple_134_targets(args.a, args.d)
    system = SymmetricSystem(4, ((1, Fraction(args.a)), (3, b), (4, c)))
    return _print_solutions(system, solutions, args.format)


def _cmd_sigma123(args: argparse.Namespace) -> int:
    solutions = solve_sigma123(args.n, args.ref, args.u)
    return _print_solutions(sigma123_system(args.n, args.ref), solutions, args.format)


def _cmd_verify(args: argparse.Namespace) -> int:
    system = SymmetricSystem(args.n, args.constraints)
    report = check_solution(system, args.tuple)
    if args.format == "plain":
        for index, expected, actual, ok in report.checks:
            status = "pass" if ok else "fail"
            print(
                f"sigma_{index}: expected {format_rational(expected)}, "
                f"got {format_rational(actual)}: {status}"
            )
        print("pass" if report.overall else "fail")
    else:
        document = {
            "system": {
                "n": system.n,
                "constraints": [
                    {"index": index, "target": format_rational(target)}
                    for index, target in system.constraints
                ],
            },
            "values": [format_rational(v) for v in report.values],
            "checks": [
                {
                    "index": index,
                    "expected": format_rational(expected),
                    "actual": format_rational(actual),
                    "pass": ok,
                }
                for index, expected, actual, ok in report.checks
            ],
            "overall": report.overall,
        }
        print(json.dumps(document, indent=2))
    if not report.overall:
        print("verification failed", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sigmasolve",
        description="Generate and verify rational solutions of symmetric-"
        "polynomial systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format",
            choices=("json", "plain"),
            default="json",
            help="output format (default: json)",
        )

    p = sub.add_parser("sum-product", help="solve sigma_1 = a, sigma_n = b")
    p.add_argument("--a", type=_rational, required=True, help="sigma_1 target")
    p.add_argument("--b", type=_rational, required=True, help="sigma_n target")
    p.add_argument("--n", type=_positive_int, default=4, help="tuple length (>= 4)")
    p.add_argument(
        "--free",
        type=_rational_list,
        default=None,
        help="comma-separated fixed entries (n-4 of them); sampled when omitted",
    )
    p.add_argument(
        "--t", type=_rational, default=None, help="curve parameter; sampled when omitted"
    )
    p.add_argument("--count", type=_positive_int, default=1, help="solutions to emit")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="sampler seed")
    add_format(p)
    p.set_defaults(handler=_cmd_sum_product)

    p = sub.add_parser("sigma-product", help="solve sigma_i = a, sigma_n = b")
    p.add_argument("--i", type=_positive_int, required=True, help="constrained index")
    p.add_argument("--a", type=_rational, required=True, help="sigma_i target")
    p.add_argument("--b", type=_rational, required=True, help="sigma_n target")
    p.add_argument("--n", type=_positive_int, required=True, help="tuple length (>= 4)")
    p.add_argument(
        "--free",
        type=_rational_list,
        default=None,
        help="comma-separated fixed entries (n-3 of them); sampled when omitted",
    )
    p.add_argument("--count", type=_positive_int, default=1, help="solutions to emit")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="sampler seed")
    add_format(p)
    p.set_defaults(handler=_cmd_sigma_product)

    p = sub.add_parser(
        "same-values",
        help="tuples sharing sigma_i and sigma_j with a reference tuple",
    )
    p.add_argument("--i", type=_positive_int, required=True)
    p.add_argument("--j", type=_positive_int, required=True)
    p.add_argument("--n", type=_positive_int, required=True, help="tuple length")
    p.add_argument(
        "--ref", type=_rational_list, required=True, help="reference tuple, n entries"
    )
    p.add_argument("--count", type=_positive_int, default=1, help="solutions to emit")
    add_format(p)
    p.set_defaults(handler=_cmd_same_values)

    p = sub.add_parser(
        "triple-123", help="solve sigma_1, sigma_2, sigma_3 of the split family"
    )
    p.add_argument("--a", type=_rational, required=True, help="sigma_1 target")
    p.add_argument("--d", type=_rational, required=True, help="family parameter")
    p.add_argument(
        "--t", type=_rational_list, required=True, help="comma-separated parameter values"
    )
    add_format(p)
    p.set_defaults(handler=_cmd_triple_123)

    p = sub.add_parser(
        "triple-134", help="solve sigma_1, sigma_3, sigma_4 of the curve family"
    )
    p.add_argument("--a", type=_rational, required=True, help="sigma_1 target")
    p.add_argument("--d", type=_rational, required=True, help="family parameter")
    p.add_argument("--count", type=_positive_int, default=1, help="solutions to emit")
    add_format(p)
    p.set_defaults(handler=_cmd_triple_134)

    p = sub.add_parser(
        "sigma123", help="match sigma_1, sigma_2, sigma_3 of a reference tuple"
    )
    p.add_argument("--n", type=_positive_int, required=True, help="tuple length (>= 5)")
    p.add_argument(
        "--ref",
        type=_rational_list,
        required=True,
        help="first n-1 reference entries",
    )
    p.add_argument(
        "--u", type=_rational_list, required=True, help="comma-separated parameter values"
    )
    add_format(p)
    p.set_defaults(handler=_cmd_sigma123)

    p = sub.add_parser("verify", help="check a tuple against constraints")
    p.add_argument("--n", type=_positive_int, required=True, help="tuple length")
    p.add_argument(
        "--constraints",
        type=_constraints,
        required=True,
        help="comma-separated index=value pairs, e.g. 1=5,2=9,3=7",
    )
    p.add_argument(
        "--tuple", type=_rational_list, required=True, help="candidate tuple"
    )
    add_format(p)
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except SigmaSolveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: ``dwork <command> [options]``.

Exit codes: 0 on success, 2 on invalid input, 3 when a computation fails.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .fixedlocus import FixedLocusError, LambdaPolicy
from .groups import DEFAULT_CAP, group_from_spec, parse_element
from .lattices import LatticeError
from .orbifold import SectorError
from .report import (
    LATTICE_SUBCOMMANDS,
    dumps,
    fibers_report,
    fixed_report,
    hodge_report,
    lattice_report,
    quotient_report,
    to_markdown,
    wps_report,
)

EXIT_USAGE = 2
EXIT_COMPUTATION = 3


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dwork", description="Geometry of the Dwork pencil and its quotients.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, seed=False):
        p.add_argument("--format", choices=("json", "md"), default="json")
        if seed:
            p.add_argument("--lambda-seed", type=int, default=0, help="seed for generic lambda sampling")

    p = sub.add_parser("hodge", help="Hodge diamond of a smooth hypersurface")
    p.add_argument("--n", type=int, help="ambient P^n; the pencil member has degree n+1")
    p.add_argument("--dim", type=int, help="hypersurface dimension m")
    p.add_argument("--deg", type=int, help="degree d")
    common(p)

    p = sub.add_parser("fibers", help="singular fibers of the pencil")
    p.add_argument("--n", type=int, required=True)
    common(p)

    p = sub.add_parser("fixed", help="fixed locus of one automorphism")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--element", required=True, help='e.g. "(12)(34)" or "h(0,0,1,1,3)"')
    common(p, seed=True)

    p = sub.add_parser("quotient", help="orbifold Hodge numbers of X / G")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--group", required=True, help="group name or comma-separated generators")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximal group order")
    common(p, seed=True)

    p = sub.add_parser("wps", help="well-formedness and crepant resolution verdicts")
    p.add_argument("--n", type=int, required=True)
    common(p)

    p = sub.add_parser("lattice", help="K3 lattice computations")
    p.add_argument("subcommand", choices=LATTICE_SUBCOMMANDS)
    common(p)
    return parser


def _policy(args) -> LambdaPolicy:
    return LambdaPolicy(seed=args.lambda_seed)


def run(args) -> dict:
    if args.command == "hodge":
        if args.n is not None:
            if args.dim is not None or args.deg is not None:
                raise UsageError("use either --n or --dim/--deg")
            if args.n < 2:
                raise UsageError("--n must be at least 2")
            m, d = args.n - 1, args.n + 1
        else:
            if args.dim is None or args.deg is None:
                raise UsageError("--dim and --deg are required without --n")
            m, d = args.dim, args.deg
            if m < 1 or d < 1:
                raise UsageError("--dim and --deg must be positive")
        return hodge_report(m, d, {"dim": m, "deg": d})
    if args.command == "fibers":
        if args.n < 2:
            raise UsageError("--n must be at least 2")
        return fibers_report(args.n, {"n": args.n})
    if args.command == "fixed":
        try:
            g = parse_element(args.element, args.n)
        except ValueError as exc:
            raise UsageError(str(exc))
        if g.is_identity():
            raise UsageError("the identity fixes everything")
        return fixed_report(g, _policy(args), {"n": args.n, "element": str(g)})
    if args.command == "quotient":
        if args.n != 4:
            raise UsageError("orbifold Hodge numbers are implemented for n = 4")
        try:
            G = group_from_spec(args.group, args.n, cap=args.cap)
        except (ValueError, KeyError) as exc:
            raise UsageError(str(exc))
        odd = [g for g in G.generators if not g.is_even()]
        if odd:
            raise UsageError(f"generator {odd[0]} does not preserve the holomorphic 3-form")
        inputs = {"n": args.n, "group": args.group, "generators": [str(g) for g in G.generators], "cap": args.cap}
        return quotient_report(G, _policy(args), inputs)
    if args.command == "wps":
        if args.n < 2:
            raise UsageError("--n must be at least 2")
        return wps_report(args.n, {"n": args.n})
    if args.command == "lattice":
        return lattice_report(args.subcommand, {"subcommand": args.subcommand})
    raise UsageError(f"unknown command {args.command}")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = run(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2
    except (SectorError, FixedLocusError, LatticeError, ArithmeticError) as exc:
        print(f"dwork: computation failed: {exc}", file=sys.stderr)
        return EXIT_COMPUTATION
    sys.stdout.write(to_markdown(report) if args.format == "md" else dumps(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Usage::

    klein-spin types --g 3 --m 4 --k 1 --eps 0
    klein-spin census --g 3 --m 4 --oracle --format json
    klein-spin canonical --m 4 --nonsep 3,1,0,1
    klein-spin verify --g-max 5 --m 2,3,4,6 --all-n

Exit codes: 0 success, 1 verification mismatch, 2 invalid arguments,
3 empty result, 4 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import counting, report
from .arf_types import enumerate_arf_types, type_from_tuple
from .counting import DEFAULT_CHUNK_SIZE, census, default_budget_from_env, verify_sweep
from .errors import KleinSpinError, OutOfScopeError
from .klein_surface import (
    DecompositionParams,
    SurfaceType,
    enumerate_surface_types,
    has_positive_geometric_genus,
)
from .value_tuples import canonical_tuple

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_EMPTY, EXIT_BUDGET = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _add_output(p: argparse.ArgumentParser, oracle: bool = False) -> None:
    p.add_argument("--format", choices=report.FORMATS, default="table")
    if oracle:
        p.add_argument("--budget", type=_positive, default=None,
                       help="max tuples per oracle run (env KLEIN_SPIN_ORACLE_BUDGET)")
        p.add_argument("--workers", type=_positive, default=1)
        p.add_argument("--chunk-size", type=_positive, default=DEFAULT_CHUNK_SIZE)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="klein-spin",
        description="Topological types and counts of real m-spin structures on Klein surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("types", help="list topological types")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--eps", type=int, choices=(0, 1))
    _add_output(p)

    p = sub.add_parser("census", help="closed counts (and oracle counts) for one genus")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="also run the brute-force oracle")
    p.add_argument("--require-oracle", action="store_true",
                   help="exit 4 if any oracle run exceeds the budget (implies --oracle)")
    _add_output(p, oracle=True)

    p = sub.add_parser("canonical", help="values on a canonical generating set")
    p.add_argument("--m", type=int, required=True)
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--nonsep", type=_int_list, metavar="g,delta,k0,k1")
    kind.add_argument("--sep", type=_int_list, metavar="g,dt,k00,k01,k10,k11")
    kind.add_argument("--odd", type=_int_list, metavar="g,k")
    p.add_argument("--eps", type=int, choices=(0, 1), default=0,
                   help="surface separability for --odd types")
    p.add_argument("--n", type=int, help="number of cut curves (default: smallest admissible)")
    _add_output(p)

    p = sub.add_parser("verify", help="compare oracle and closed counts over a sweep")
    p.add_argument("--g-max", type=int, required=True)
    p.add_argument("--m", type=_int_list, required=True, metavar="m1,m2,...")
    p.add_argument("--all-n", action="store_true", help="check every decomposition and n-independence")
    p.add_argument("--swap-corrected", action="store_true",
                   help="compare against counts that halve swap-symmetric types")
    _add_output(p, oracle=True)
    return parser


def _check_common(g: int | None, m: int) -> None:
    if g is not None and g < 2:
        raise UsageError(f"non-hyperbolic: genus {g} < 2")
    if m < 2:
        raise UsageError(f"modulus must be >= 2, got {m}")


def _budget(args) -> int:
    return args.budget if args.budget is not None else default_budget_from_env()


def cmd_types(args, out) -> int:
    _check_common(args.g, args.m)
    if (args.k is None) != (args.eps is None):
        raise UsageError("--k and --eps must be given together")
    if args.k is not None:
        s = SurfaceType(args.g, args.k, args.eps)
        if not has_positive_geometric_genus(s):
            raise OutOfScopeError(f"surface {s} has zero geometric genus: outside theorem scope")
        surfaces = [s]
    else:
        surfaces = [s for s in enumerate_surface_types(args.g) if has_positive_geometric_genus(s)]
    listing = [(s, enumerate_arf_types(s, args.m)) for s in surfaces]
    data = report.types_to_dict(args.g, args.m, listing)
    out.write(report.render_types(data, args.format))
    return EXIT_OK if data["types"] else EXIT_EMPTY


def cmd_census(args, out) -> int:
    _check_common(args.g, args.m)
    rep = census(
        args.g, args.m, args.oracle or args.require_oracle,
        budget=_budget(args), workers=args.workers, chunk_size=args.chunk_size,
    )
    out.write(report.render_census(report.census_to_dict(rep), args.format))
    if args.require_oracle and rep.budget_exceeded:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_canonical(args, out) -> int:
    _check_common(None, args.m)
    if args.nonsep is not None:
        values, eps = args.nonsep, 0
    elif args.sep is not None:
        values, eps = args.sep, 1
    else:
        values, eps = args.odd, args.eps
    if (args.m % 2 == 1) != (args.odd is not None):
        raise UsageError("--odd types go with odd m, --nonsep/--sep with even m")
    t = type_from_tuple(values, args.m, eps)
    if t.g < 2:
        raise UsageError(f"non-hyperbolic: genus {t.g} < 2")
    d = None
    if args.n is not None:
        if (t.g + 1 - args.n) % 2:
            raise UsageError(f"n={args.n} does not split genus {t.g} into equal halves")
        d = DecompositionParams(args.n, (t.g + 1 - args.n) // 2)
    v = canonical_tuple(t, args.m, d, epsilon=eps)
    out.write(report.render_tuple(report.tuple_to_dict(v), args.format))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.g_max < 2:
        raise UsageError(f"non-hyperbolic: g-max {args.g_max} < 2")
    if not args.m or any(m < 2 for m in args.m):
        raise UsageError("every modulus must be >= 2")
    count_fn = counting.swap_corrected_count if args.swap_corrected else None
    records = verify_sweep(
        args.g_max, args.m, all_n=args.all_n, budget=_budget(args),
        workers=args.workers, chunk_size=args.chunk_size, count_fn=count_fn,
    )
    out.write(report.render_verify(report.verify_to_dict(records, args.m), args.format))
    if any(r.status == "fail" for r in records):
        return EXIT_MISMATCH
    if any(r.status == "budget" for r in records):
        return EXIT_BUDGET
    return EXIT_OK


COMMANDS = {
    "types": cmd_types,
    "census": cmd_census,
    "canonical": cmd_canonical,
    "verify": cmd_verify,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except OutOfScopeError as exc:
        err.write(f"{exc}\n")
        return EXIT_EMPTY
    except (UsageError, KleinSpinError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: construct, verify, partial-sums, decompose, orthogonality,
compatibility.  Exit codes: 0 all checks pass, 1 a property check failed,
2 usage or input errors.  Identical invocations print identical output.

The h3 and h4p3 families run a backtracking search; its node budget can be
overridden with the HEFFTER_SEARCH_BUDGET environment variable.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import construct4p, decompose, h3, merge, shifted
from .grid import HeffterGrid, diagonal_order, natural_order, partial_sums
from .gridio import GridParseError, grid_to_text, read_grid, write_grid
from .verify import (
    VerificationReport,
    compatibility_check,
    verify_globally_simple,
    verify_heffter,
    verify_integer,
    verify_support_shifted,
)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class _UsageError(Exception):
    pass


def _emit_report(report: VerificationReport, as_json: bool) -> int:
    if as_json:
        payload = {
            "checks": [
                {"name": c.name, "passed": c.passed, "certificate": c.certificate}
                for c in report.checks
            ],
            "overall": report.overall,
        }
        print(json.dumps(payload, indent=2))
    else:
        print(report.to_text(), end="")
    return EXIT_PASS if report.overall else EXIT_FAIL


def _load_grid(path: str) -> HeffterGrid:
    try:
        return read_grid(path)
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc
    except (GridParseError, ValueError) as exc:
        raise _UsageError(f"{path}: {exc}") from exc


def _default_modulus(grid: HeffterGrid) -> int:
    counts = grid.fills_per_row()
    if not grid.is_square or len(set(counts)) != 1:
        raise _UsageError("grid has no default modulus; pass --modulus")
    return 2 * grid.n * counts[0] + 1


# -- construct -----------------------------------------------------------


def cmd_construct(args) -> int:
    params: dict[str, int] = {"n": args.n}
    if args.family == "h4p":
        if args.p is None:
            raise _UsageError("--p is required for family h4p")
        grid = construct4p.build_h4p(args.n, args.p)
        k = 4 * args.p
        params.update(p=args.p, k=k, M=2 * args.n * k + 1)
    elif args.family == "shifted":
        if args.p is None or args.gamma is None:
            raise _UsageError("--p and --gamma are required for family shifted")
        alpha = args.alpha if args.alpha is not None else shifted.choose_alpha(args.n, args.p)
        grid = shifted.build_shifted(args.n, args.p, args.gamma, alpha)
        k = 4 * args.p
        params.update(p=args.p, gamma=args.gamma, alpha=alpha,
                      k=k, M=2 * (k + args.gamma) * args.n + 1)
    elif args.family == "h3":
        grid = h3.build_h3_base(args.n)
        params.update(k=3, M=6 * args.n + 1)
    elif args.family == "h4p3":
        if args.p is None:
            raise _UsageError("--p is required for family h4p3")
        grid, mp = merge.build_h4p3(args.n, args.p, alpha=args.alpha,
                                    eps=args.eps, shift=args.shift)
        params.update(p=args.p, k=4 * args.p + 3, alpha=mp.alpha, eps=mp.eps,
                      beta=mp.beta, t=mp.shift, M=mp.modulus)
    else:  # pragma: no cover - argparse restricts choices
        raise _UsageError(f"unknown family {args.family}")

    if not args.unchecked:
        if args.family == "shifted":
            report = verify_support_shifted(grid, args.p, params["gamma"])
        else:
            k = params["k"]
            report = verify_heffter(grid, k, k)
            report.extend(verify_integer(grid))
            report.extend(verify_globally_simple(grid, params["M"]))
        if not report.overall:
            print(report.to_text(), end="", file=sys.stderr)
            print("refusing to write unverified array", file=sys.stderr)
            return EXIT_FAIL

    text = grid_to_text(grid)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")

    param_line = " ".join(f"{key}={params[key]}" for key in sorted(params))
    if args.json:
        print(json.dumps({"family": args.family, "params": params,
                          "out": args.out, "verified": not args.unchecked}, indent=2))
    else:
        print(f"PARAMS family={args.family} {param_line}", file=sys.stderr)
    return EXIT_PASS


# -- verify --------------------------------------------------------------


def cmd_verify(args) -> int:
    grid = _load_grid(args.path)
    try:
        if args.level == "heffter":
            report = verify_heffter(grid, args.s, args.t, args.modulus)
        elif args.level == "integer":
            report = verify_heffter(grid, args.s, args.t)
            report.extend(verify_integer(grid))
        elif args.level == "globally-simple":
            report = verify_heffter(grid, args.s, args.t)
            report.extend(verify_integer(grid))
            report.extend(verify_globally_simple(grid, args.modulus))
        else:  # support-shifted
            if args.p is None or args.gamma is None:
                raise _UsageError("--p and --gamma are required at level support-shifted")
            report = verify_support_shifted(grid, args.p, args.gamma)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    return _emit_report(report, args.json)


# -- partial sums --------------------------------------------------------


def cmd_partial_sums(args) -> int:
    grid = _load_grid(args.path)
    order = natural_order if args.order == "natural" else diagonal_order
    modulus = args.modulus if args.modulus is not None else _default_modulus(grid)
    kinds = ("row", "col") if args.lines == "both" else (args.lines[:-1],)
    exit_code = EXIT_PASS
    try:
        for kind in kinds:
            count = grid.m if kind == "row" else grid.n
            for a in range(count):
                try:
                    trace = partial_sums(grid, kind, a, order(grid, kind, a), modulus)
                except ValueError as exc:
                    print(f"{kind} {a}: error: {exc}")
                    exit_code = EXIT_FAIL
                    continue
                sums = " ".join(str(v) for v in trace.sums)
                print(f"{kind} {a}: {sums}")
                if not trace.all_distinct:
                    i, j = trace.first_collision()
                    print(f"{kind} {a}: collision at positions {i},{j} mod {modulus}")
                    exit_code = EXIT_FAIL
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    return exit_code


# -- decomposition -------------------------------------------------------


def cmd_decompose(args) -> int:
    grid = _load_grid(args.path)
    modulus = args.modulus if args.modulus is not None else _default_modulus(grid)
    report = verify_globally_simple(grid, modulus)
    if not report.overall:
        print(report.to_text(), end="", file=sys.stderr)
        print("refusing to decompose: grid is not simple", file=sys.stderr)
        return EXIT_FAIL
    try:
        rows = decompose.rows_system(grid, modulus)
        cols = decompose.cols_system(grid, modulus)
    except (decompose.NotSimple, decompose.NotADecomposition) as exc:
        print(f"decomposition failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    decompose.write_system(args.rows_out, rows)
    decompose.write_system(args.cols_out, cols)
    for label, system in (("rows", rows), ("cols", cols)):
        status = "complete" if system.is_complete else f"missing {system.missing_edge_count()} edges"
        print(f"{label}: {len(system.cycles)} cycles of length {system.k} on Z_{modulus}, {status}")
    if not (rows.is_complete and cols.is_complete):
        return EXIT_FAIL
    return EXIT_PASS


def cmd_orthogonality(args) -> int:
    try:
        first = decompose.read_system(args.first)
        second = decompose.read_system(args.second)
        ok, worst, pair = decompose.orthogonality(first, second)
    except OSError as exc:
        raise _UsageError(str(exc)) from exc
    except (ValueError, decompose.NotADecomposition) as exc:
        raise _UsageError(str(exc)) from exc
    verdict = "ORTHOGONAL" if ok else "NOT ORTHOGONAL"
    if args.json:
        print(json.dumps({"orthogonal": ok, "max_shared_edges": worst,
                          "worst_pair": list(pair)}, indent=2))
    else:
        print(f"{verdict} max-shared-edges={worst} worst-pair={pair[0]},{pair[1]}")
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_compatibility(args) -> int:
    grid = _load_grid(args.path)
    ok, cycle_type = compatibility_check(grid)
    verdict = "COMPATIBLE" if ok else "NOT COMPATIBLE"
    print(f"{verdict} cycle-type={','.join(str(v) for v in cycle_type)}")
    return EXIT_PASS if ok else EXIT_FAIL


# -- argument parsing ----------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heffter",
        description="Construct, verify and decompose globally simple Heffter arrays.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_con = sub.add_parser("construct", help="build an array and write it as a grid file")
    p_con.add_argument("--family", required=True, choices=["h4p", "shifted", "h3", "h4p3"])
    p_con.add_argument("--n", type=int, required=True)
    p_con.add_argument("--p", type=int)
    p_con.add_argument("--gamma", type=int)
    p_con.add_argument("--alpha", type=int)
    p_con.add_argument("--eps", type=int)
    p_con.add_argument("--shift", type=int)
    p_con.add_argument("--out", help="output path (default: stdout)")
    p_con.add_argument("--unchecked", action="store_true",
                       help="skip the verifier before writing")
    p_con.add_argument("--json", action="store_true")
    p_con.set_defaults(func=cmd_construct)

    p_ver = sub.add_parser("verify", help="check the defining properties of a grid file")
    p_ver.add_argument("path")
    p_ver.add_argument("--level", default="heffter",
                       choices=["heffter", "integer", "globally-simple", "support-shifted"])
    p_ver.add_argument("--s", type=int)
    p_ver.add_argument("--t", type=int)
    p_ver.add_argument("--p", type=int)
    p_ver.add_argument("--gamma", type=int)
    p_ver.add_argument("--modulus", type=int)
    p_ver.add_argument("--json", action="store_true")
    p_ver.set_defaults(func=cmd_verify)

    p_ps = sub.add_parser("partial-sums", help="print per-line partial sums")
    p_ps.add_argument("path")
    p_ps.add_argument("--lines", default="both", choices=["rows", "cols", "both"])
    p_ps.add_argument("--order", default="natural", choices=["natural", "diagonal"])
    p_ps.add_argument("--modulus", type=int)
    p_ps.set_defaults(func=cmd_partial_sums)

    p_dec = sub.add_parser("decompose", help="develop row and column cycle systems")
    p_dec.add_argument("path")
    p_dec.add_argument("--modulus", type=int)
    p_dec.add_argument("--rows-out", required=True)
    p_dec.add_argument("--cols-out", required=True)
    p_dec.set_defaults(func=cmd_decompose)

    p_ort = sub.add_parser("orthogonality", help="join two cycle files and report shared edges")
    p_ort.add_argument("first")
    p_ort.add_argument("second")
    p_ort.add_argument("--json", action="store_true")
    p_ort.set_defaults(func=cmd_orthogonality)

    p_cmp = sub.add_parser("compatibility", help="cycle type of composed line orderings")
    p_cmp.add_argument("path")
    p_cmp.set_defaults(func=cmd_compatibility)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

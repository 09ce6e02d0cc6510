"""Command line front end.

Exit status: 0 on success, 1 when ``verify`` finds a failing check, 2 on
invalid arguments.
"""
from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Sequence

from .bott import bott
from .covariants import is_cm, witness_search
from .equivariant import (
    MINORS,
    PFAFFIANS,
    character_dim,
    ext_minors,
    ext_minors_bott,
    ext_pfaffians,
    ext_pfaffians_bott,
    ext_quotient_shift,
    ideal_power_character_minors,
    ideal_power_character_pfaffians,
    loccoh_minors,
    loccoh_pfaffians,
)
from .oracle import DEFAULT_PRIMES, check_prime, stable_ideal_power_dim
from .report import ReportRecord, decomposition_result, summand_json
from .verify import CHECKS, run_check
from .weights import WeightBox

POOL_THRESHOLD = 16


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _parallel_map(fn: Callable, items: list, jobs: int, threshold: int = POOL_THRESHOLD) -> list:
    # results come back in request order either way
    if jobs <= 1 or len(items) < threshold:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _degree_range(args: argparse.Namespace, name: str) -> list[int]:
    single = getattr(args, name)
    lo, hi = getattr(args, f"{name}_min"), getattr(args, f"{name}_max")
    if single is not None:
        if lo is not None or hi is not None:
            raise ValueError(f"give either --{name} or --{name}-min/--{name}-max")
        return [single]
    if lo is None or hi is None:
        raise ValueError(f"--{name} or both --{name}-min and --{name}-max are required")
    if lo > hi:
        raise ValueError(f"--{name}-min {lo} exceeds --{name}-max {hi}")
    return list(range(lo, hi + 1))


def _check_case(args: argparse.Namespace) -> None:
    if args.n is None:
        raise ValueError("--n is required")
    if args.case == MINORS:
        if args.m is None:
            raise ValueError("--m is required for --case minors")
        if not args.m > args.n >= 1:
            raise ValueError(f"need m > n >= 1, got m={args.m}, n={args.n}")
    elif args.n < 1:
        raise ValueError(f"need n >= 1, got {args.n}")


# cell evaluators are module level so they pickle for the process pool

def _ext_cell(cell: tuple) -> ReportRecord:
    case, m, n, d, j, r, route, quotient = cell
    if case == MINORS:
        closed = lambda: ext_minors(m, n, d, j, r)  # noqa: E731
        via_bott = lambda: ext_minors_bott(m, n, d, j, r)  # noqa: E731
    else:
        closed = lambda: ext_pfaffians(n, d, j, r)  # noqa: E731
        via_bott = lambda: ext_pfaffians_bott(n, d, j, r)  # noqa: E731
    dec = via_bott() if route == "bott" else closed()
    agree = None
    if route == "both":
        agree = sorted(dec.summands, key=repr) == sorted(via_bott().summands, key=repr)
    if quotient:
        dec = ext_quotient_shift(dec)
    inputs: dict[str, Any] = {"case": case, "n": n, "d": d, "j": dec.j, "degree": str(r),
                              "route": route, "module": dec.module}
    if m is not None:
        inputs["m"] = m
    result = decomposition_result(dec)
    if agree is not None:
        result["routes_agree"] = agree
    return ReportRecord("ext", inputs, result)


def _loccoh_cell(cell: tuple) -> ReportRecord:
    case, m, n, j, r, floor = cell
    box = None if floor is None else WeightBox(floor)
    dec = loccoh_minors(m, n, j, r, box) if case == MINORS else loccoh_pfaffians(n, j, r, box)
    inputs: dict[str, Any] = {"case": case, "n": n, "j": j, "degree": str(r)}
    if m is not None:
        inputs["m"] = m
    if floor is not None:
        inputs["floor"] = str(floor)
    return ReportRecord("loccoh", inputs, decomposition_result(dec))


def _character_cell(cell: tuple) -> ReportRecord:
    case, m, n, d, t, primes = cell
    if case == MINORS:
        summands = ideal_power_character_minors(m, n, d, t)
    else:
        summands = ideal_power_character_pfaffians(n, d, t)
    inputs: dict[str, Any] = {"case": case, "n": n, "d": d, "t": str(t)}
    if m is not None:
        inputs["m"] = m
    result: dict[str, Any] = {
        "summands": [summand_json(s) for s in summands],
        "dimension": str(character_dim(summands)),
    }
    if primes is not None:
        shape = (m, n) if case == MINORS else (n,)
        result["oracle_dimension"] = str(stable_ideal_power_dim(case, shape, d, t, primes))
        result["primes"] = list(primes)
    return ReportRecord("ideal-character", inputs, result)


def _verify_cell(cell: tuple) -> ReportRecord:
    name, grid, primes = cell
    res = run_check(name, grid, primes)
    return ReportRecord(
        "verify",
        {"check": name, "grid": grid},
        {"passed": res.passed, "cases": res.cases, "failures": res.failures},
    )


def cmd_bott(args: argparse.Namespace) -> list[ReportRecord]:
    h = bott(args.alpha, args.beta, args.N)
    inputs = {"alpha": args.alpha, "beta": args.beta, "N": args.N}
    if h is None:
        return [ReportRecord("bott", inputs, {"vanishes": True, "degree": None, "weight": None})]
    return [ReportRecord("bott", inputs, {"vanishes": False, "degree": h.degree, "weight": list(h.weight)})]


def cmd_ext(args: argparse.Namespace) -> list[ReportRecord]:
    _check_case(args)
    if args.d is None or args.d < 1:
        raise ValueError("--d >= 1 is required")
    top = args.n * (args.m - args.n) if args.case == MINORS else 2 * args.n
    js = [args.j] if args.j is not None else list(range(0, top + 1))
    m = args.m if args.case == MINORS else None
    if args.route != "closed" and args.case == MINORS and args.d < args.n:
        raise ValueError(f"the Bott route needs d >= n, got d={args.d}, n={args.n}")
    cells = [
        (args.case, m, args.n, args.d, j, r, args.route, args.quotient)
        for j in js
        for r in _degree_range(args, "r")
    ]
    return _parallel_map(_ext_cell, cells, args.jobs)


def cmd_loccoh(args: argparse.Namespace) -> list[ReportRecord]:
    _check_case(args)
    top = args.n * (args.m - args.n) + 1 if args.case == MINORS else 2 * args.n + 1
    js = [args.j] if args.j is not None else list(range(0, top + 1))
    m = args.m if args.case == MINORS else None
    cells = [(args.case, m, args.n, j, r, args.floor) for j in js for r in _degree_range(args, "r")]
    if args.floor is None:
        step = args.m - args.n if args.case == MINORS else 2
        infinite = [j for j in js if j > 1 and (j - 1) % step == 0 and (j - 1) // step < args.n]
        if infinite:
            raise ValueError(f"H^{infinite[0]} is infinite-dimensional in each degree; pass --floor")
    return _parallel_map(_loccoh_cell, cells, args.jobs)


def cmd_ideal_character(args: argparse.Namespace) -> list[ReportRecord]:
    _check_case(args)
    if args.d is None or args.d < 0:
        raise ValueError("--d >= 0 is required")
    primes = None
    if args.oracle:
        if args.d < 1:
            raise ValueError("the oracle needs d >= 1")
        primes = (check_prime(args.prime), check_prime(args.prime2))
        if primes[0] == primes[1]:
            raise ValueError("--prime and --prime2 must differ")
    m = args.m if args.case == MINORS else None
    ts = _degree_range(args, "t")
    if ts[0] < 0:
        raise ValueError("degrees t must be nonnegative")
    cells = [(args.case, m, args.n, args.d, t, primes) for t in ts]
    return _parallel_map(_character_cell, cells, args.jobs)


def cmd_covariants(args: argparse.Namespace) -> list[ReportRecord]:
    verdict = is_cm(args.mu, args.m, args.n)
    result: dict[str, Any] = {
        "is_cm": verdict.is_cm,
        "s": verdict.s,
        "lambda": None if verdict.witness is None else list(verdict.witness),
    }
    if args.search_floor is not None:
        found = witness_search(args.mu, args.m, args.n, WeightBox(args.search_floor))
        result["search_floor"] = str(args.search_floor)
        result["search_agrees"] = (found is None) == verdict.is_cm
    return [ReportRecord("covariants", {"m": args.m, "n": args.n, "mu": args.mu}, result)]


def cmd_verify(args: argparse.Namespace) -> list[ReportRecord]:
    primes = (check_prime(args.prime), check_prime(args.prime2))
    if primes[0] == primes[1]:
        raise ValueError("--prime and --prime2 must differ")
    names = args.check or list(CHECKS)
    for name in names:
        if name not in CHECKS:
            raise ValueError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
    cells = [(name, args.grid, primes) for name in names]
    return _parallel_map(_verify_cell, cells, args.jobs, threshold=2)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                        help="worker processes (default: available CPUs)")

    parser = argparse.ArgumentParser(
        prog="loccoh",
        description="GL-equivariant Ext and local cohomology for maximal minors and "
        "sub-maximal Pfaffians.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bott", parents=[common], help="Bott's algorithm on a Grassmannian")
    p.add_argument("--alpha", type=_int_list, required=True, help="weight on Q, e.g. 3,1")
    p.add_argument("--beta", type=_int_list, required=True, help="weight on R, e.g. 4,4,2")
    p.add_argument("--N", type=int, required=True)
    p.set_defaults(func=cmd_bott)

    def case_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--case", choices=(MINORS, PFAFFIANS), required=True)
        p.add_argument("--m", type=int)
        p.add_argument("--n", type=int, required=True)

    def degree_args(p: argparse.ArgumentParser, name: str) -> None:
        p.add_argument(f"--{name}", type=int)
        p.add_argument(f"--{name}-min", type=int)
        p.add_argument(f"--{name}-max", type=int)

    p = sub.add_parser("ext", parents=[common], help="Ext^j(I^d, S) in degree r")
    case_args(p)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--j", type=int, help="cohomological index (default: all)")
    degree_args(p, "r")
    p.add_argument("--route", choices=("closed", "bott", "both"), default="closed")
    p.add_argument("--quotient", action="store_true", help="report Ext^(j+1)(S/I^d, S) instead")
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("loccoh", parents=[common], help="local cohomology H^j_I(S) in degree r")
    case_args(p)
    p.add_argument("--j", type=int, help="cohomological index (default: all)")
    degree_args(p, "r")
    p.add_argument("--floor", type=int, help="truncation floor on the last weight entry")
    p.set_defaults(func=cmd_loccoh)

    p = sub.add_parser("ideal-character", parents=[common], help="character of (I^d)_t")
    case_args(p)
    p.add_argument("--d", type=int, required=True)
    degree_args(p, "t")
    p.add_argument("--oracle", action="store_true", help="also compute the finite-field rank")
    p.add_argument("--prime", type=int, default=DEFAULT_PRIMES[0])
    p.add_argument("--prime2", type=int, default=DEFAULT_PRIMES[1])
    p.set_defaults(func=cmd_ideal_character)

    p = sub.add_parser("covariants", parents=[common], help="Cohen-Macaulay test for covariants")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mu", type=_int_list, required=True, help="partition with mu_n = 0, e.g. 3,0")
    p.add_argument("--search-floor", type=int, help="also run the exhaustive witness search")
    p.set_defaults(func=cmd_covariants)

    p = sub.add_parser("verify", parents=[common], help="run the cross-verification checks")
    p.add_argument("--grid", choices=("small", "full"), default="small")
    p.add_argument("--check", action="append", help="run only this check (repeatable)")
    p.add_argument("--prime", type=int, default=DEFAULT_PRIMES[0])
    p.add_argument("--prime2", type=int, default=DEFAULT_PRIMES[1])
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    try:
        records = args.func(args)
    except ValueError as exc:
        print(f"loccoh {args.command}: error: {exc}", file=sys.stderr)
        return 2
    for k, rec in enumerate(records):
        if args.format == "json":
            print(rec.to_json())
        else:
            if k:
                print()
            print(rec.to_table())
    if args.command == "verify":
        failed = [r.inputs["check"] for r in records if not r.result["passed"]]
        total = sum(r.result["cases"] for r in records)
        print(
            f"{len(records) - len(failed)}/{len(records)} checks passed, {total} cases"
            + (f"; failed: {', '.join(failed)}" if failed else ""),
            file=sys.stderr,
        )
        return 1 if failed else 0
    return 0


if __name__ == "__main__":
    sys.exit(main())

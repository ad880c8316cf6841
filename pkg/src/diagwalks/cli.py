"""Command-line surface: counting, walk queries, and the verification suite.

Exit codes: 0 ok, 1 usage error, 2 parameter/validation error,
3 verification failure. Counts are serialized as decimal strings so
arbitrary-precision values survive JSON round-trips. The enumeration cap
can be overridden with the DIAGWALKS_ENUM_CAP environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import verify as verify_mod
from .diagonal import (
    DiagonalSystem,
    brute_force_count,
    convolution_count,
    result_record,
    walk_solution_count,
)
from .errors import DiagwalksError, KNotInteger
from .field import FieldElement, FiniteField, build_field
from .graphs import complete_graph, walk_count_power
from .neps import NepsBasis, neps_construct
from .gp import gp_graph

CSV_COLUMNS = ["p", "a", "b", "k", "q", "alpha", "n", "mode", "method", "count"]


def parse_element(field: FiniteField, literal: str) -> FieldElement:
    """Element literal: "0", "pow:<e>" for omega^e, or a coefficient vector."""
    literal = literal.strip()
    if literal.startswith("pow:"):
        e = int(literal[4:])
        if e < 0:
            raise ValueError("pow exponent must be non-negative")
        return field.omega**e
    parts = [int(v) for v in literal.split(",")]
    if len(parts) == 1 and field.m > 1:
        if parts[0] == 0:
            return field.zero
        raise ValueError(
            f"a bare integer other than 0 is ambiguous for m={field.m}; "
            f"use pow:<e> or {field.m} comma-separated coefficients"
        )
    if len(parts) == 1:
        return field.from_coeffs(parts)
    return field.from_coeffs(parts)


def parse_modulus(literal: str) -> tuple[int, ...]:
    return tuple(int(v) for v in literal.split(","))


def emit(record: dict, fmt: str = "json") -> None:
    if fmt == "json":
        print(json.dumps(record, sort_keys=False))
    elif fmt == "csv":
        payload = record["result"]
        row = [
            str(payload.get(col if col != "n" else "r_or_s", ""))
            for col in CSV_COLUMNS
        ]
        print(",".join(CSV_COLUMNS))
        print(",".join(row))
    elif fmt == "table":
        payload = record["result"]
        for key, value in payload.items():
            print(f"{key:>10}: {value}")
        print(f"{'elapsed':>10}: {record['elapsed_ms']} ms")
    else:
        raise ValueError(f"unknown format {fmt!r}")


def default_enum_cap() -> int:
    return int(os.environ.get("DIAGWALKS_ENUM_CAP", 10**8))


def cmd_count(args) -> int:
    started = time.perf_counter()
    try:
        system = DiagonalSystem(args.p, args.a, args.b)
    except KNotInteger as exc:
        record = {
            "command": "count",
            "error": "KNotInteger",
            "message": str(exc),
            "divisibility": exc.report.to_dict() if exc.report else None,
        }
        print(json.dumps(record), file=sys.stderr)
        return 2
    alpha = parse_element(system.field, args.alpha)
    n = args.s
    mode = "nonzero" if args.nonzero_only else "all"
    method = args.method
    cap = default_enum_cap()
    if method == "formula":
        count = (
            system.count_nonzero(alpha, n)
            if args.nonzero_only
            else system.count_all(alpha, n)
        )
    elif method == "brute":
        if args.nonzero_only:
            count = brute_force_count(system.field, system.k, alpha, n, True, cap)
        else:
            count = brute_force_count(system.field, system.k, alpha, n, False, cap)
    elif method == "convolution":
        count = convolution_count(
            system.field, system.k, alpha, n, args.nonzero_only
        )
    elif method == "walk":
        if not args.nonzero_only:
            raise DiagwalksError("--method walk computes N_r; add --nonzero-only")
        count = walk_solution_count(system.field, system.k, 0, alpha, n)
    else:
        raise DiagwalksError(f"unknown method {method!r}")
    payload = result_record(
        system.p, system.a, system.b, system.k, system.q,
        args.alpha, n, mode, method, count,
    )
    from .divisibility import remark_cases

    payload["divisibility"] = remark_cases(args.p, args.a, args.b).to_dict()
    elapsed = round((time.perf_counter() - started) * 1000, 3)
    emit(
        {
            "command": "count",
            "params": {k: v for k, v in vars(args).items() if k != "func"},
            "result": payload,
            "method": method,
            "elapsed_ms": elapsed,
        },
        args.format,
    )
    return 0


def cmd_walks(args) -> int:
    started = time.perf_counter()
    if args.neps:
        sizes = [int(v) for v in args.neps.split(",")]
        basis = NepsBasis.parse(args.basis)
        graph = neps_construct([complete_graph(m) for m in sizes], basis)
        from .neps import agreement_pattern, neps_complete_walks

        vi, vj = int(args.from_vertex), int(args.to_vertex)
        pattern = agreement_pattern(sizes, vi, vj)
        formula = neps_complete_walks(sizes, basis, args.length, pattern)
        power = walk_count_power(graph, args.length, vi, vj)
        payload = {
            "graph": f"NEPS({','.join(f'K{m}' for m in sizes)}; {args.basis})",
            "from": vi,
            "to": vj,
            "length": args.length,
            "formula": str(formula),
            "matrix_power": str(power),
            "agree": formula == power,
        }
    elif args.gp:
        from .gp import build_hamming_view, hamming_parameters
        from .neps import hamming_walks

        field = build_field(args.p, args.m)
        graph = gp_graph(field, args.k)
        vi = parse_element(field, args.from_vertex).index
        vj = parse_element(field, args.to_vertex).index
        power = walk_count_power(graph, args.length, vi, vj)
        payload = {
            "graph": f"Gamma({args.k},{field.q})",
            "from": vi,
            "to": vj,
            "length": args.length,
            "matrix_power": str(power),
        }
        pairs = hamming_parameters(args.p, args.m, args.k)
        if pairs:
            a, b = pairs[0]
            view = build_hamming_view(field, args.k, a, b)
            pattern = view.pattern_idx(field.sub_idx(vj, vi))
            formula = hamming_walks(b, args.p**a, args.length, pattern)
            payload["formula"] = str(formula)
            payload["hamming"] = f"H({b},{args.p**a})"
            payload["agree"] = formula == power
    else:
        raise DiagwalksError("one of --neps or --gp is required")
    elapsed = round((time.perf_counter() - started) * 1000, 3)
    emit(
        {
            "command": "walks",
            "params": {k: v for k, v in vars(args).items() if k != "func"},
            "result": payload,
            "method": "walks",
            "elapsed_ms": elapsed,
        },
        "json",
    )
    return 0


def cmd_verify(args) -> int:
    started = time.perf_counter()
    roster = None
    if args.roster:
        roster = []
        for part in args.roster.split(";"):
            p, a, b = (int(v) for v in part.split(","))
            roster.append((p, a, b))
    results = verify_mod.run_all(
        roster=roster,
        max_r=args.max_r,
        cap=args.cap if args.cap else default_enum_cap(),
        neps_instances=args.neps_instances,
        seed=args.seed,
    )
    for result in results:
        print(result.line())
    ok = all(r.ok for r in results)
    elapsed = round((time.perf_counter() - started) * 1000, 3)
    print(f"{'ALL PASS' if ok else 'FAILURES PRESENT'} in {elapsed} ms")
    return 0 if ok else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diagwalks",
        description="Exact diagonal-equation solution counts over finite "
        "fields via walk counting, with built-in oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="count solutions of a diagonal equation")
    count.add_argument("--p", type=int, required=True)
    count.add_argument("--a", type=int, required=True)
    count.add_argument("--b", type=int, required=True)
    count.add_argument("--alpha", required=True,
                       help='"0", "pow:<e>", or comma-separated coefficients')
    count.add_argument("--s", type=int, required=True,
                       help="number of summands (s, or r with --nonzero-only)")
    count.add_argument("--nonzero-only", action="store_true",
                       help="count over nonzero tuples only (N_r)")
    count.add_argument("--method", default="formula",
                       choices=["formula", "brute", "convolution", "walk"])
    count.add_argument("--format", default="json",
                       choices=["json", "csv", "table"])
    count.set_defaults(func=cmd_count)

    walks = sub.add_parser("walks", help="exact walk counts on GP or NEPS graphs")
    walks.add_argument("--gp", action="store_true")
    walks.add_argument("--neps", help="comma-separated complete-graph sizes")
    walks.add_argument("--basis", help='basis literal, e.g. "11" or "10;01"')
    walks.add_argument("--p", type=int)
    walks.add_argument("--m", type=int)
    walks.add_argument("--k", type=int)
    walks.add_argument("--from", dest="from_vertex", required=True,
                       help="vertex index (NEPS) or element literal (GP)")
    walks.add_argument("--to", dest="to_vertex", required=True,
                       help="vertex index (NEPS) or element literal (GP)")
    walks.add_argument("--length", type=int, required=True)
    walks.set_defaults(func=cmd_walks)

    verify = sub.add_parser("verify", help="run the verification suites")
    verify.add_argument("--roster", help='e.g. "3,1,2;5,1,2" (default full roster)')
    verify.add_argument("--max-r", type=int, default=3)
    verify.add_argument("--cap", type=int, default=0,
                        help="enumeration cap (default from env or 10^8)")
    verify.add_argument("--neps-instances", type=int, default=50)
    verify.add_argument("--seed", type=int, default=0)
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except DiagwalksError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}),
              file=sys.stderr)
        return 2
    except ValueError as exc:
        print(json.dumps({"error": "ValueError", "message": str(exc)}),
              file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point: ``sdgbent <command> ...``.

Exit codes: 0 success / verified, 1 assertion failure, 2 usage error,
3 budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import constructions as con
from .enumeration import (
    BudgetExceeded,
    affine_scan,
    enumerate_naive,
    enumerate_self_dual,
    hamming_spectrum_mm,
    lee_spectrum_mm,
    quarter_block_counterexamples,
    sign_vectors_of,
    span_dimension,
    upper_bound_check,
    verify_quarter_block_products,
)
from .formats import emit_function, emit_function_list, format_body, parse_function, parse_function_list
from .gbf import GBF, classify_duality
from .gf2m import GF2mField
from .groups import MAX_LIST_N, OrthMatrix, classify_orbits, enumerate_orthogonal

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
THREADS_ENV = "SDGBENT_THREADS"


class UsageError(Exception):
    pass


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    return int(os.environ.get(THREADS_ENV, "1"))


def _read_function(path: str) -> GBF:
    return parse_function(Path(path).read_text())


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _bits(token: str, width: int) -> int:
    if len(token) == width and set(token) <= {"0", "1"}:
        return int(token, 2)
    v = int(token)
    if not 0 <= v < (1 << width):
        raise UsageError(f"{token!r} does not fit in {width} bits")
    return v


# --- commands ------------------------------------------------------------------


def cmd_check(args) -> int:
    f = _read_function(args.file)
    status = classify_duality(f)
    if args.json:
        print(json.dumps({"status": status.kind.value, "dual": list(status.dual.values) if status.dual else None}))
    else:
        print(status.kind.value)
        if status.dual is not None:
            print("dual:", format_body(status.dual))
    return EXIT_OK


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "mm":
        if args.n is None or args.q is None or args.n % 2:
            raise UsageError("mm needs --n (even) and --q")
        k = args.n // 2
        rows = [_bits(t, k) for t in args.L.split(",")] if args.L else list(OrthMatrix.identity(k).rows)
        L = OrthMatrix(k, tuple(rows))
        b = _bits(args.b, k) if args.b else 0
        p = con.MMParameters(L, b, args.d % args.q)
        f = con.mm_self_dual(p, args.q, want_anti=args.anti)
    elif kind == "direct-sum":
        if not args.inputs:
            raise UsageError("direct-sum needs input files")
        f = con.direct_sum([_read_function(p) for p in args.inputs])
    elif kind == "dillon":
        field = GF2mField(args.m)
        comps = con.dillon_search_components(field, args.k)
        if not comps:
            raise UsageError(f"no valid component tuples for m={args.m}, k={args.k}")
        if not 0 <= args.index < len(comps):
            raise UsageError(f"--index must lie in [0, {len(comps)})")
        f = con.dillon(field, comps[args.index])
    elif kind == "iterative":
        if not args.inputs:
            raise UsageError("iterative needs an input file")
        f0 = _read_function(args.inputs[0])
        f = con.iterative_mixed(f0, _read_function(args.mixed)) if args.mixed else con.iterative_self_dual(f0)
    elif kind == "symmetric":
        if not args.inputs:
            raise UsageError("symmetric needs an input file")
        f = con.two_var_symmetric(_read_function(args.inputs[0]))
    elif kind == "affine":
        if args.q is None or not args.lambdas:
            raise UsageError("affine needs --q and --lambdas")
        f = con.affine([int(t) for t in args.lambdas.split(",")], args.q)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(kind)
    _write(emit_function(f), args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.naive:
        rep = enumerate_naive(args.n, args.q, args.kind)
    else:
        rep = enumerate_self_dual(args.n, args.q, args.kind, threads=_threads(args))
    if args.out:
        Path(args.out).write_text(emit_function_list(rep.found, args.n, args.q))
    d = rep.to_dict()
    if not args.with_functions:
        d.pop("found")
    if args.json:
        print(json.dumps(d))
    else:
        print(f"n={rep.n} q={rep.q} kind={rep.kind}: found {len(rep.found)} "
              f"({rep.candidates_scanned} candidates, {rep.elapsed:.2f}s)")
    return EXIT_OK


def orbit_table(orbits, total_label: str = "Total") -> str:
    lines = [f"{'Representative':<24} Size"]
    for o in orbits:
        lines.append(f"{format_body(o.canonical):<24} {o.size}")
    lines.append(f"{total_label:<24} {sum(o.size for o in orbits)}")
    return "\n".join(lines)


def cmd_classify(args) -> int:
    n, q, funcs = parse_function_list(Path(args.input).read_text())
    if (args.n is not None and args.n != n) or (args.q is not None and args.q != q):
        raise UsageError(f"list file holds n={n}, q={q}")
    orbits = classify_orbits(funcs, n, q, keep_members=False)
    if args.json:
        print(json.dumps({
            "n": n, "q": q, "total": sum(o.size for o in orbits),
            "orbits": [{"representative": list(o.canonical.values), "size": o.size} for o in orbits],
        }))
    else:
        print(orbit_table(orbits))
    return EXIT_OK


def cmd_spectrum(args) -> int:
    fn = hamming_spectrum_mm if args.metric == "hamming" else lee_spectrum_mm
    rep = fn(args.n, args.q)
    if args.json:
        print(rep.to_json())
    else:
        print(f"{args.metric} spectrum of MM (anti-)self-dual functions, n={args.n}, q={args.q}")
        print("observed:", dict(sorted(rep.observed.items())))
        print("predicted:", rep.predicted)
        print("contained:", rep.contained, " all attained:", rep.all_attained)
        print("min nonzero:", rep.min_nonzero)
    return EXIT_OK if rep.contained and rep.all_attained else EXIT_FAIL


def cmd_orthogonal(args) -> int:
    if args.n > MAX_LIST_N:
        raise BudgetExceeded(f"O_{args.n} is too large to list (limit n <= {MAX_LIST_N})")
    mats = enumerate_orthogonal(args.n)
    if args.json:
        print(json.dumps({"n": args.n, "count": len(mats), "matrices": [m.to_lists() for m in mats]}))
    else:
        for m in mats:
            print(m)
            print()
        print(f"|O_{args.n}| = {len(mats)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    what = args.what
    result: dict
    if what == "affine":
        rep = affine_scan(args.n, args.q)
        result = {"check": what, "n": args.n, "q": args.q, "total": rep.total, "gbent": rep.gbent,
                  "self_dual": rep.self_dual, "passed": rep.passed}
    elif what == "upper-bound":
        k = args.k if args.k is not None else max(1, (args.q or 4).bit_length() - 1)
        rep = upper_bound_check(args.n, k)
        result = {"check": what, "n": args.n, "k": k, "count_q": rep.count_q,
                  "count_boolean": rep.count_boolean, "bound": rep.bound, "passed": rep.holds}
    elif what == "quarter-blocks":
        found = enumerate_self_dual(args.n, args.q, "sd", threads=_threads(args)).found
        ok = sum(verify_quarter_block_products(f) for f in found)
        counter = quarter_block_counterexamples(args.n, args.q, seed=args.seed)
        result = {"check": what, "n": args.n, "q": args.q, "functions": len(found), "vanishing": ok,
                  "non_self_dual_counterexamples": len(counter), "passed": ok == len(found)}
    elif what == "span":
        res = {}
        for kind in ("sd", "asd"):
            found = enumerate_self_dual(args.n, args.q, kind, threads=_threads(args)).found
            res[kind] = span_dimension(sign_vectors_of(found))
        expected = 2 ** (args.n - 1) if args.n >= 4 else 1
        result = {"check": what, "n": args.n, "q": args.q, "dimension": res["sd"],
                  "dimension_asd": res["asd"], "expected": expected,
                  "passed": res["sd"] == expected and res["asd"] == expected}
    else:  # pragma: no cover
        raise UsageError(what)
    if args.json:
        print(json.dumps(result))
    else:
        for key, val in result.items():
            print(f"{key}: {val}")
        print("PASS" if result["passed"] else "FAIL")
    return EXIT_OK if result["passed"] else EXIT_FAIL


# --- parser --------------------------------------------------------------------


def _common(p: argparse.ArgumentParser, default) -> None:
    """Flags accepted both before and after the subcommand."""
    suppress = default is argparse.SUPPRESS
    p.add_argument("--json", action="store_true", default=default if suppress else False,
                   help="emit JSON on stdout")
    p.add_argument("--threads", type=int, default=default,
                   help=f"search threads (default ${THREADS_ENV} or 1)")
    p.add_argument("--seed", type=int, default=default if suppress else 0,
                   help="seed for randomized checks")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sdgbent", description="Self-dual generalized bent functions F_2^n -> Z_q.")
    _common(p, None)
    common = argparse.ArgumentParser(add_help=False)
    _common(common, argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)
    _add = sub.add_parser

    def add_parser(name, **kw):
        return _add(name, parents=[common], **kw)

    sub.add_parser = add_parser

    c = sub.add_parser("check", help="classify duality of a function file")
    c.add_argument("file")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("construct", help="build a function and emit a function file")
    c.add_argument("kind", choices=["mm", "direct-sum", "dillon", "iterative", "symmetric", "affine"])
    c.add_argument("inputs", nargs="*")
    c.add_argument("--n", type=int)
    c.add_argument("--q", type=int)
    c.add_argument("--L", help="comma-separated rows (bit strings or integers)")
    c.add_argument("--b", help="bit string")
    c.add_argument("--d", type=int, default=0)
    c.add_argument("--anti", action="store_true")
    c.add_argument("--m", type=int, default=2)
    c.add_argument("--k", type=int, default=1)
    c.add_argument("--index", type=int, default=0)
    c.add_argument("--mixed", help="anti-self-dual function file for the (F, G, -G, F) construction")
    c.add_argument("--lambdas", help="comma-separated lambda_0..lambda_n")
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("enumerate", help="list all (anti-)self-dual functions")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--kind", choices=["sd", "asd"], default="sd")
    c.add_argument("--naive", action="store_true")
    c.add_argument("--out", help="write the function list here")
    c.add_argument("--with-functions", action="store_true", help="include truth tables in the JSON report")
    c.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("classify", help="orbit table of a function list")
    c.add_argument("--in", dest="input", required=True)
    c.add_argument("--n", type=int)
    c.add_argument("--q", type=int)
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("spectrum", help="distance spectrum of the MM (anti-)self-dual class")
    c.add_argument("--class", dest="cls", choices=["mm"], default="mm")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--metric", choices=["hamming", "lee"], required=True)
    c.set_defaults(func=cmd_spectrum)

    c = sub.add_parser("orthogonal", help="list O_n")
    c.add_argument("--n", type=int, required=True)
    c.set_defaults(func=cmd_orthogonal)

    c = sub.add_parser("verify", help="run a verification scan")
    c.add_argument("what", choices=["affine", "upper-bound", "quarter-blocks", "span"])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--q", type=int, default=4)
    c.add_argument("--k", type=int)
    c.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except AssertionError as exc:
        print(f"assertion failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

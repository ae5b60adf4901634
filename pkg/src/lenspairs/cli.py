"""Command-line frontend exposing every subsystem as a subcommand.

Results go to stdout (one JSON object per line under ``--jsonl``),
diagnostics to stderr.  Exit codes: 0 for a successful query or a fully
verified check, 1 when a verification fails or a counterexample is found,
2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bqf, search
from .dualknot import basic_stats, kplus_dual
from .knots import (
    InvalidKnot,
    Lens,
    ReducibleTwoLens,
    SurgerySlope,
    cable,
    kplus,
    lens_surgery,
    tangle_hh,
    tangle_th,
    torus,
)
from .lens import homeomorphic, make_lens, oriented_homeomorphic
from .sequences import IDENTITIES, check_identity

_BUILDERS = {
    "torus": (torus, 2),
    "cable": (cable, 3),
    "kplus": (kplus, 2),
    "tangleHH": (tangle_hh, 1),
    "tangleTH": (tangle_th, 1),
}


def _parse_slope(text: str) -> SurgerySlope:
    num, _, den = text.partition("/")
    try:
        return SurgerySlope(int(num), int(den) if den else 1)
    except ValueError as exc:
        raise ValueError(f"malformed slope {text!r}: {exc}") from None


def _parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        if sep:
            return range(int(lo), int(hi) + 1)
        return range(int(lo), int(lo) + 1)
    except ValueError:
        raise ValueError(f"malformed range {text!r}, expected 'a..b'") from None


def _emit(args, obj: dict, text: str) -> None:
    if args.jsonl:
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


def _cmd_surgery(args) -> int:
    builder, arity = _BUILDERS[args.family]
    if len(args.params) != arity:
        raise InvalidKnot(f"{args.family} takes {arity} parameters, got {len(args.params)}")
    knot = builder(*args.params)
    result = lens_surgery(knot, args.slope)
    if isinstance(result, Lens):
        _emit(
            args,
            {"knot": str(knot), "slope": str(args.slope), "kind": "lens",
             "p": result.space.p, "q": result.space.q},
            str(result.space),
        )
    elif isinstance(result, ReducibleTwoLens):
        _emit(
            args,
            {"knot": str(knot), "slope": str(args.slope), "kind": "reducible-two-lens",
             "p": result.p, "q": result.q},
            f"connected sum of two lens spaces (torus parameters {result.p} and {result.q})",
        )
    else:
        note = f": {result.note}" if result.note else ""
        _emit(
            args,
            {"knot": str(knot), "slope": str(args.slope), "kind": "not-lens",
             "reason": result.reason, "note": result.note},
            f"not a lens space ({result.reason}){note}",
        )
    return 0


def _cmd_homeo(args) -> int:
    first = make_lens(args.p1, args.q1)
    second = make_lens(args.p2, args.q2)
    if args.oriented:
        verdict = oriented_homeomorphic(first, second)
        word = "oriented-homeomorphic"
    else:
        verdict = homeomorphic(first, second)
        word = "homeomorphic"
    _emit(
        args,
        {"first": str(first), "second": str(second), "oriented": args.oriented, "homeomorphic": verdict},
        word if verdict else f"not {word}",
    )
    return 0


def _cmd_dual(args) -> int:
    triple = kplus_dual(args.a, args.b)
    stats = basic_stats(triple)
    hyperbolic = stats.phi >= 2
    _emit(
        args,
        {"knot": f"kplus({args.a},{args.b})", "p": triple.p, "q": triple.q, "k": triple.k,
         "h": stats.h, "s": stats.s, "ell": stats.ell, "s_prime": stats.s_prime,
         "ell_prime": stats.ell_prime, "phi": stats.phi, "hyperbolic": hyperbolic},
        f"kplus({args.a},{args.b}): dual knot in L({triple.p},{triple.q}) with k={triple.k}\n"
        f"h={stats.h} s={stats.s} ell={stats.ell} s'={stats.s_prime} ell'={stats.ell_prime} "
        f"phi={stats.phi}\n"
        f"{'hyperbolic (phi >= 2)' if hyperbolic else 'not hyperbolic (phi < 2)'}",
    )
    return 0


def _cmd_bqf_solve(args) -> int:
    form = bqf.QuadForm(args.A, args.B, args.C)
    sols = bqf.generate_solutions(form, args.m, args.count)
    if args.jsonl:
        for sol in sols:
            print(json.dumps({"x": sol.x, "y": sol.y}))
    elif sols:
        for sol in sols:
            print(f"({sol.x}, {sol.y})")
    else:
        print("no solutions")
    return 0


def _cmd_bqf_unit(args) -> int:
    unit = bqf.fundamental_unit(args.delta)
    _emit(
        args,
        {"delta": args.delta, "u": unit.u, "v": unit.v},
        f"u={unit.u} v={unit.v}",
    )
    return 0


def _cmd_bqf_scan(args) -> int:
    report = bqf.divisibility_scan(
        range(args.a_min, args.a_max + 1),
        range(1, args.bc_max + 1),
        range(1, args.bc_max + 1),
        args.n,
    )
    for hit in report.counterexamples:
        _emit(
            args,
            {"a": hit.a, "b": hit.b, "c": hit.c, "n": hit.n,
             "value": hit.value, "modulus": hit.modulus},
            f"COUNTEREXAMPLE a={hit.a} b={hit.b} c={hit.c} n={hit.n}: "
            f"{hit.modulus} divides {hit.value}",
        )
    _emit(
        args,
        {"checked": report.checked, "counterexamples": len(report.counterexamples)},
        f"{report.checked} divisibility checks, {len(report.counterexamples)} counterexamples",
    )
    return 0 if report.clean else 1


def _cmd_identities(args) -> int:
    if args.range < 1:
        raise ValueError("--range must be >= 1")
    failed = 0
    for name in IDENTITIES:
        start = 0 if name == "fib_quartic" else 1
        bad = [n for n in range(start, args.range + 1) if not check_identity(name, n)]
        failed += len(bad)
        _emit(
            args,
            {"identity": name, "range": [start, args.range], "failures": bad},
            f"{'PASS' if not bad else 'FAIL'} {name} n={start}..{args.range}"
            + (f" failures={bad}" if bad else ""),
        )
    return 0 if failed == 0 else 1


def _cmd_verify(args) -> int:
    report = search.verify_family(args.family, args.range)
    if args.jsonl:
        for check in report.checks:
            print(json.dumps({"family": check.family, "n": check.n,
                              "passed": check.passed, "witness": check.witness}))
    else:
        for line in report.lines():
            print(line)
    return 0 if report.passed else 1


def _cmd_search(args) -> int:
    config = search.SearchConfig(
        families=frozenset(args.families.split(",")),
        torus_max=args.torus_max,
        cable_max=args.cable_max,
        kplus_max=args.kplus_max,
        tangle_max=args.tangle_max,
        order_max=args.order_max,
        slope_denominators=frozenset(int(n) for n in args.denominators.split(",")),
        workers=args.workers,
    )
    records = search.find_coincidences(config)
    if args.out:
        with open(args.out, "w") as handle:
            for record in records:
                handle.write(record.to_json() + "\n")
    if args.jsonl:
        for record in records:
            print(record.to_json())
    else:
        for record in records:
            members = ", ".join(f"{knot}[{space}]" for knot, space in record.members)
            print(
                f"slope {record.slope} class L{record.lens_class}: {members} "
                f"(certified {record.certified_multiplicity})"
            )
    top = max((record.certified_multiplicity for record in records), default=0)
    print(
        f"{len(records)} coincidence records, "
        f"largest certified-distinct group: {top}",
        file=sys.stderr,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lenspairs",
        description="Lens spaces from Dehn surgery, exactly.",
    )
    parser.add_argument("--jsonl", action="store_true", help="machine-readable line-delimited output")
    sub = parser.add_subparsers(dest="command")

    p_surgery = sub.add_parser("surgery", help="evaluate m/n-surgery on a knot")
    p_surgery.add_argument("family", choices=sorted(_BUILDERS))
    p_surgery.add_argument("params", nargs="+", type=int)
    p_surgery.add_argument("--slope", required=True, type=_parse_slope, help="slope as m/n")
    p_surgery.set_defaults(cmd=_cmd_surgery)

    p_homeo = sub.add_parser("homeo", help="compare two lens spaces")
    for name in ("p1", "q1", "p2", "q2"):
        p_homeo.add_argument(name, type=int)
    p_homeo.add_argument("--oriented", action="store_true")
    p_homeo.set_defaults(cmd=_cmd_homeo)

    p_dual = sub.add_parser("dual", help="dual-knot data and phi for kplus(a, b)")
    p_dual.add_argument("a", type=int)
    p_dual.add_argument("b", type=int)
    p_dual.set_defaults(cmd=_cmd_dual)

    p_bqf = sub.add_parser("bqf", help="binary quadratic form tools")
    bqf_sub = p_bqf.add_subparsers(dest="bqf_command")
    p_solve = bqf_sub.add_parser("solve", help="solutions of A x^2 + B xy + C y^2 = m")
    for name in ("A", "B", "C", "m"):
        p_solve.add_argument(name, type=int)
    p_solve.add_argument("--count", type=int, default=5, help="solutions per orbit")
    p_solve.set_defaults(cmd=_cmd_bqf_solve)
    p_unit = bqf_sub.add_parser("unit", help="fundamental norm-1 unit of a discriminant")
    p_unit.add_argument("delta", type=int)
    p_unit.set_defaults(cmd=_cmd_bqf_unit)
    p_scan = bqf_sub.add_parser("scan", help="scan b^2 +- c^2 against n*a*b*c +- 1")
    p_scan.add_argument("--a-min", type=int, default=2)
    p_scan.add_argument("--a-max", type=int, required=True)
    p_scan.add_argument("--bc-max", type=int, required=True)
    p_scan.add_argument("--n", type=_parse_range, required=True, help="denominator range as a..b")
    p_scan.set_defaults(cmd=_cmd_bqf_scan)

    p_idents = sub.add_parser("identities", help="machine-check the sequence identities")
    p_idents.add_argument("--range", type=int, required=True)
    p_idents.set_defaults(cmd=_cmd_identities)

    p_verify = sub.add_parser("verify", help="verify a family of coincidence pairs")
    p_verify.add_argument("family", choices=search.VERIFY_FAMILIES)
    p_verify.add_argument("--range", type=_parse_range, required=True, help="index range as a..b")
    p_verify.set_defaults(cmd=_cmd_verify)

    p_search = sub.add_parser("search", help="search for knots sharing slope and lens space")
    p_search.add_argument("--families", default=",".join(sorted(search.ALL_FAMILIES)))
    p_search.add_argument("--order-max", type=int, default=500)
    p_search.add_argument("--torus-max", type=int, default=500)
    p_search.add_argument("--cable-max", type=int, default=500)
    p_search.add_argument("--kplus-max", type=int, default=60)
    p_search.add_argument("--tangle-max", type=int, default=20)
    p_search.add_argument("--denominators", default="1,2")
    p_search.add_argument("--workers", type=int, default=1)
    p_search.add_argument("--out", help="write records to this jsonl file")
    p_search.set_defaults(cmd=_cmd_search)

    return parser


def run(argv=None) -> int:
    """Dispatch one invocation; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "cmd", None) is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.cmd(args)
    except bqf.CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.stderr.write(parser.format_usage())
        return 2


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))

"""Command-line interface.

Subcommands: table, check, mul, blade, normscan, enumerate, zerodiv,
triplets, cdfactor.  Exit codes: 0 success / all laws hold, 1 a law failed
or a witness appeared where none was expected, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

import numpy as np

from . import __version__
from .algebra import (
    EXACT,
    FLOAT64,
    Element,
    element_from_json_obj,
    element_to_json_obj,
    fourier_product_forms,
    multiply,
    multiply_via_matrix,
)
from .cayley_dickson import blade_factor_cd, left_nested_blade_product, quaternion_triplets
from .clifford import blade_multiply, e_to_i, format_blade, parse_blade
from .errors import TwistAlgError
from .groups import parse_group
from .normscan import norm_scan
from .search import (
    BASIS_PAIR,
    BUDGETED_RANDOM,
    classify,
    enumerate_proper_twists,
    find_zero_divisor,
    verify_twist_group,
)
from .twists import (
    cayley_dickson_twist,
    check_associative,
    check_commutative,
    check_invertive,
    check_proper,
    check_unital,
    named_twist,
    parse_twist_spec,
    table_from_json_obj,
    table_to_csv,
    table_to_json_obj,
)

LAWS = ("commutative", "associative", "invertive", "proper", "unital")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _resolve_twist(spec: str):
    """A twist descriptor string, or a path to a JSON table export."""
    if os.path.exists(spec):
        with open(spec) as fh:
            return table_from_json_obj(json.load(fh))
    return parse_twist_spec(spec)


def _load_element(text: str, twist, mode: str) -> Element:
    """Element from a file path, inline JSON object, or bare coefficient list."""
    if os.path.exists(text):
        with open(text) as fh:
            obj = json.load(fh)
    else:
        obj = json.loads(text)
    if isinstance(obj, list):
        if mode == EXACT:
            coeffs = [Fraction(c) if isinstance(c, str) else int(c) for c in obj]
        else:
            coeffs = [float(c) for c in obj]
        return Element(twist, coeffs, mode)
    return element_from_json_obj(obj, twist=twist)


# handlers -------------------------------------------------------------------


def cmd_table(args) -> int:
    if ":" in args.size:
        group = parse_group(args.size)
        twist = named_twist(args.kind, group)
    else:
        twist = parse_twist_spec(f"{args.kind}:{args.size}")
    if args.json:
        _emit(json.dumps(table_to_json_obj(twist), indent=2), args.out)
    else:
        _emit(table_to_csv(twist), args.out)
    return 0


def cmd_check(args) -> int:
    twist = _resolve_twist(args.twist)
    laws = args.laws or list(LAWS)
    reports = []
    for law in laws:
        if law == "commutative":
            reports.append(check_commutative(twist))
        elif law == "associative":
            reports.append(check_associative(twist))
        elif law == "invertive":
            reports.append(check_invertive(twist))
        elif law == "proper":
            reports.extend(check_proper(twist))
        elif law == "unital":
            reports.append(check_unital(twist))
        else:
            raise ValueError(f"unknown law {law!r}")
    if args.json:
        payload = [
            {"law": r.law, "holds": r.holds, "witness": list(r.witness) if r.witness else None}
            for r in reports
        ]
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        lines = []
        for r in reports:
            if r.holds:
                lines.append(f"{r.law}: holds")
            else:
                lines.append(f"{r.law}: FAIL witness={tuple(r.witness)}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if all(r.holds for r in reports) else 1


def cmd_mul(args) -> int:
    twist = _resolve_twist(args.twist)
    mode = FLOAT64 if args.float else EXACT
    x = _load_element(args.x, twist, mode)
    y = _load_element(args.y, twist, mode)
    product = multiply(x, y)
    if args.verify:
        routes = [multiply_via_matrix(x, y)]
        if twist.is_proper:
            routes.extend(fourier_product_forms(x, y))
        for other in routes:
            if x.mode == EXACT:
                agree = product == other
            else:
                agree = np.allclose(product.coeffs, other.coeffs, rtol=1e-12, atol=1e-12)
            if not agree:
                print("error: product routes disagree", file=sys.stderr)
                return 1
    _emit(json.dumps(element_to_json_obj(product), indent=2), args.out)
    return 0


def cmd_blade(args) -> int:
    if args.op != "mul":
        raise ValueError(f"unknown blade operation {args.op!r}")
    result = blade_multiply(parse_blade(args.a), parse_blade(args.b))
    if args.json:
        _emit(
            json.dumps({"sign": result.sign, "indices": list(result.indices)}, indent=2),
            args.out,
        )
    else:
        _emit(format_blade(result) + "\n", args.out)
    return 0


def cmd_normscan(args) -> int:
    twist = cayley_dickson_twist(args.exponent)
    report = norm_scan(twist, samples=args.samples, seed=args.seed, buckets=args.buckets)
    if args.json:
        _emit(json.dumps(report.to_json_obj(), indent=2), args.out)
    else:
        lines = [
            f"context: {report.context}",
            f"samples: {report.samples}  seed: {report.seed}  rng: {report.rng}",
            f"max ratio: {report.max_ratio:.12f}",
            f"operator-norm bound: {report.wedderburn_bound:.12f}",
            "histogram:",
        ]
        for bucket in report.histogram:
            lines.append(f"  [{bucket['lo']:.4f}, {bucket['hi']:.4f}): {bucket['count']}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_enumerate(args) -> int:
    group = parse_group(args.group)
    result = enumerate_proper_twists(group, node_budget=args.budget)
    flags = classify(result)
    payload = {
        "group": str(group),
        "complete": result.complete,
        "count": len(result.twists),
        "stats": result.stats,
        "twists": [
            {"signs": [[int(v) for v in row] for row in t.signs], "flags": f}
            for t, f in zip(result.twists, flags)
        ],
    }
    if result.complete:
        payload["group_laws_hold"] = verify_twist_group(result).holds
    if args.json or args.out:
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        status = "complete" if result.complete else "INCOMPLETE (budget exhausted)"
        print(f"{len(result.twists)} proper twists on {group} ({status})")
        print(
            f"explored {result.stats['explored']} nodes, pruned {result.stats['pruned']},"
            f" {result.stats['elapsed']:.3f}s"
        )
        for i, f in enumerate(flags):
            tags = ", ".join(k for k, v in f.items() if v)
            print(f"  twist {i}: {tags}")
    return 0


def cmd_zerodiv(args) -> int:
    twist = _resolve_twist(args.twist)
    witness = find_zero_divisor(twist, scope=args.scope, samples=args.samples, seed=args.seed)
    if witness is None:
        suffix = "exhaustive" if args.scope == BASIS_PAIR else f"{args.samples} samples"
        print(f"no zero divisors found (scope={args.scope}, {suffix})")
        return 0
    x, y = witness
    payload = {"x": element_to_json_obj(x), "y": element_to_json_obj(y)}
    if args.json:
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        print(f"zero divisor: x={list(x.coeffs)} y={list(y.coeffs)} (x*y = 0)")
    return 1 if args.expect_none else 0


def cmd_triplets(args) -> int:
    triples = quaternion_triplets(args.exponent)
    if args.json:
        _emit(json.dumps([list(t) for t in triples]), args.out)
    else:
        _emit("\n".join(f"({p}, {q}, {r})" for p, q, r in triples) + "\n", args.out)
    return 0


def cmd_cdfactor(args) -> int:
    bits = blade_factor_cd(args.index)
    exponent = args.exponent if args.exponent is not None else max(args.index.bit_length(), 1)
    twist = cayley_dickson_twist(exponent)
    product = left_nested_blade_product(args.index, twist)
    expected_plus = list(product.coeffs) == [
        1 if i == args.index else 0 for i in range(twist.order)
    ]
    payload = {
        "index": args.index,
        "bits": bits,
        "factors": [f"e{k + 1}" for k in bits],
        "verified": expected_plus,
    }
    if args.json:
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        factors = " ".join(payload["factors"]) or "1"
        status = "verified +1" if expected_plus else "VERIFICATION FAILED"
        print(f"i_{args.index} = {factors} (left-nested, {status})")
    return 0 if expected_plus else 1


# parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistalg",
        description="Twisted group algebras: tables, law checks, products, experiments.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--out", metavar="PATH", help="write output to a file")

    p = sub.add_parser("table", parents=[common], help="construct and export a twist table")
    p.add_argument("kind", choices=["trivial", "hadamard", "cayley_dickson", "clifford"])
    p.add_argument("size", help="xor exponent N, or a group descriptor like cyclic:5")
    p.add_argument("--csv", action="store_true", help="emit CSV (the default)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("check", parents=[common], help="run law checks on a twist")
    p.add_argument("twist", help="descriptor like cayley_dickson:3, or a JSON table file")
    p.add_argument("laws", nargs="*", help=f"laws to check, from {', '.join(LAWS)} (default: all)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("mul", parents=[common], help="multiply two elements")
    p.add_argument("twist", help="twist descriptor or JSON table file")
    p.add_argument("x", help="element JSON (inline or file)")
    p.add_argument("y", help="element JSON (inline or file)")
    p.add_argument("--float", action="store_true", help="float64 mode (default exact)")
    p.add_argument("--verify", action="store_true", help="cross-check all product routes")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("blade", parents=[common], help="blade arithmetic, e.g. blade mul e134 e23")
    p.add_argument("op", choices=["mul"])
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_blade)

    p = sub.add_parser("normscan", parents=[common], help="Monte Carlo norm-ratio scan")
    p.add_argument("exponent", type=int, help="doubling level N (dimension 2^N)")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--buckets", type=int, default=32)
    p.set_defaults(func=cmd_normscan)

    p = sub.add_parser("enumerate", parents=[common], help="enumerate proper twists on a group")
    p.add_argument("group", help="group descriptor, e.g. cyclic:5 or xor:2")
    p.add_argument("--budget", type=int, default=10**8, help="DFS node budget")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("zerodiv", parents=[common], help="search for zero divisors")
    p.add_argument("twist", help="twist descriptor or JSON table file")
    p.add_argument("--scope", choices=[BASIS_PAIR, BUDGETED_RANDOM], default=BASIS_PAIR)
    p.add_argument("--samples", type=int, default=1000, help="random-scope attempts")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--expect-none", action="store_true", help="exit 1 if a witness is found")
    p.set_defaults(func=cmd_zerodiv)

    p = sub.add_parser("triplets", parents=[common], help="quaternion-style triplets (p, q, pq)")
    p.add_argument("exponent", type=int)
    p.set_defaults(func=cmd_triplets)

    p = sub.add_parser("cdfactor", parents=[common], help="factor a basis vector into 1-blades")
    p.add_argument("index", type=int)
    p.add_argument("--exponent", type=int, help="doubling level (default: fit the index)")
    p.set_defaults(func=cmd_cdfactor)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (TwistAlgError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 precondition
violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from . import ampleness, lattice
from .errors import PreconditionError, VerificationError
from .lattice import Character, Surface
from .stability import format_rational
from .svg import render_walls_svg
from .walls import enumerate_walls_s0, t_approx

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3

FORMATS = ("json", "tsv", "svg", "human")
CH_OPS = ("twist", "fm", "dual", "euler", "bogomolov", "vdim")


def _character(text: str) -> Character:
    try:
        return Character.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abelwalls",
        description="Walls, Fourier-Mukai characters and k-very ampleness on abelian surfaces of Picard rank one.",
    )
    parser.add_argument("--d", type=_positive_int, help="polarization type: l^2 = 2d")
    parser.add_argument(
        "--format", choices=FORMATS, default=None,
        help="output format (default: $ABELWALLS_FORMAT or json)",
    )
    parser.add_argument("--out", help="write output to this file instead of stdout")
    parser.add_argument("--precision", type=_positive_int, default=12,
                        help="significant digits for decimal approximations")
    sub = parser.add_subparsers(dest="command", required=True)

    ch = sub.add_parser("ch", help="operations on Chern characters r,c,chi")
    ch.add_argument("op", choices=CH_OPS)
    ch.add_argument("operands", nargs="+", help="characters 'r,c,chi' (twist takes an integer last)")

    walls = sub.add_parser("walls", help="walls at s = 0 for a target character")
    walls.add_argument("target", type=_character)
    walls.add_argument("--svg", help="also write an SVG diagram to this path")

    phi = sub.add_parser("phi", help="phi(L^n), the k-very ampleness threshold")
    phi.add_argument("--n", type=_positive_int, required=True)
    phi.add_argument("--method", choices=("formula", "pipeline", "both"), default="formula")

    verify = sub.add_parser("verify", help="run the phi pipeline over a (d, n) grid")
    verify.add_argument("--dmax", type=_positive_int, required=True)
    verify.add_argument("--nmax", type=_positive_int, required=True)
    verify.add_argument("--jobs", type=_positive_int, default=1)

    bnd = sub.add_parser("bounds", help="classical bounds on phi(L^n)")
    bnd.add_argument("--n", type=_positive_int, required=True)
    return parser


class _Usage(Exception):
    """Malformed operands discovered after argparse (exit code 2)."""


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _surface(args) -> Surface:
    if args.d is None:
        raise _Usage(f"--d is required for '{args.command}'")
    return Surface(args.d)


def run_ch(args, fmt: str) -> str:
    surface = _surface(args)
    ops = args.operands
    if args.op == "twist":
        if len(ops) != 2:
            raise _Usage("twist takes a character and an integer")
        try:
            m = int(ops[1])
        except ValueError:
            raise _Usage(f"not an integer: {ops[1]!r}") from None
        chars = [ops[0]]
    else:
        arity = 2 if args.op == "euler" else 1
        if len(ops) != arity:
            raise _Usage(f"{args.op} takes {arity} character(s)")
        chars = ops
    try:
        us = [Character.parse(t) for t in chars]
    except ValueError as exc:
        raise _Usage(str(exc)) from None

    if args.op == "twist":
        result = lattice.twist(surface, us[0], m)
    elif args.op == "fm":
        result = lattice.fm(us[0])
    elif args.op == "dual":
        result = lattice.dual(us[0])
    elif args.op == "euler":
        result = lattice.euler_pairing(surface, us[0], us[1])
    elif args.op == "bogomolov":
        result = lattice.bogomolov_holds(surface, us[0])
    else:
        result = lattice.virtual_dim(surface, us[0])

    if fmt == "json":
        return json.dumps(result.to_json() if isinstance(result, Character) else result) + "\n"
    if isinstance(result, Character):
        return ("\t".join(map(str, result)) if fmt == "tsv" else str(result)) + "\n"
    if isinstance(result, bool):
        return ("true" if result else "false") + "\n"
    return f"{result}\n"


def run_walls(args, fmt: str) -> str:
    surface = _surface(args)
    target = args.target
    walls = enumerate_walls_s0(surface, target)
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(render_walls_svg(surface, target, walls))
    if fmt == "svg":
        return render_walls_svg(surface, target, walls)
    if fmt == "json":
        return _json({
            "d": surface.d,
            "target": target.to_json(),
            "walls": [w.to_json(args.precision) for w in walls],
        })
    if fmt == "tsv":
        rows = ["q0\tt_approx\tr\tc\tchi\tf_positive_side"]
        for w in walls:
            t = t_approx(w.q0, args.precision)
            for u in w.destabilizers:
                rows.append(f"{format_rational(w.q0)}\t{t}\t{u.r}\t{u.c}\t{u.chi}\t{w.f_positive_side}")
        return "\n".join(rows) + "\n"
    lines = [f"candidate walls at s = 0 for {target} on d = {surface.d}: {len(walls)}"]
    for i, w in enumerate(walls, 1):
        us = ", ".join(str(u) for u in w.destabilizers)
        lines.append(
            f"  wall {i}: q0 = {format_rational(w.q0)}, t ~ {t_approx(w.q0, args.precision)}, "
            f"destabilizers {us} (larger slope {w.f_positive_side} the wall)"
        )
    return "\n".join(lines) + "\n"


def _bounds_tsv(b: ampleness.Bounds) -> str:
    return f"trivial\tterakawa\treider\n{b.trivial_upper}\t{format_rational(b.terakawa)}\t{b.reider_lower}\n"


def run_phi(args, fmt: str) -> tuple[str, int]:
    surface = _surface(args)
    n = args.n
    if args.method == "formula":
        phi = ampleness.phi_formula(surface, n)
        b = ampleness.bounds(surface, n)
        if fmt == "json":
            return _json({"d": surface.d, "n": n, "phi": phi, "bounds": b.to_json()}), EXIT_OK
        if fmt == "tsv":
            return f"d\tn\tphi\n{surface.d}\t{n}\t{phi}\n", EXIT_OK
        return f"phi(L^{n}) = {phi} on d = {surface.d}\n", EXIT_OK

    report = ampleness.phi_pipeline(surface, n, strict=False)
    code = EXIT_OK if report.ok else EXIT_VERIFY
    if fmt == "json":
        return _json(report.to_json(args.precision)), code
    if fmt == "tsv":
        return (
            "d\tn\tphi\tphi_pipeline\twalls\tz_bound\tbase_case\tinduction\n"
            f"{report.d}\t{n}\t{report.phi_formula}\t{report.phi_pipeline}\t{len(report.walls_used)}\t"
            f"{report.z_bound_ok}\t{report.base_case_ok}\t{report.induction_ok}\n"
        ), code
    lines = [f"phi(L^{n}) on d = {report.d}: formula {report.phi_formula}, pipeline {report.phi_pipeline}"]
    if args.method == "both":
        lines.append("agreement" if report.ok else "MISMATCH")
    if n >= 2:
        lines.append("upper bound witnessed by Euler characteristic")
    lines.append(f"walls used: {len(report.walls_used)}")
    for w in report.walls_used:
        lines.append(f"  q0 = {format_rational(w.q0)}: " + ", ".join(str(u) for u in w.destabilizers))
    lines.extend(f"note: {note}" for note in report.notes)
    return "\n".join(lines) + "\n", code


def _verify_cell(cell: tuple[int, int]) -> dict:
    d, n = cell
    report = ampleness.phi_pipeline(Surface(d), n, strict=False)
    return {
        "d": d,
        "n": n,
        "phi": report.phi_formula,
        "phi_pipeline": report.phi_pipeline,
        "walls": len(report.walls_used),
        "pass": report.ok,
    }


def run_verify(args, fmt: str) -> tuple[str, int]:
    cells = [(d, n) for d in range(1, args.dmax + 1) for n in range(1, args.nmax + 1)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_cell, cells))
    else:
        results = [_verify_cell(c) for c in cells]
    passed = sum(r["pass"] for r in results)
    code = EXIT_OK if passed == len(results) else EXIT_VERIFY
    if fmt == "json":
        return _json({"cells": results, "passed": passed, "total": len(results)}), code
    if fmt == "tsv":
        rows = ["d\tn\tphi\tphi_pipeline\twalls\tpass"]
        rows += [f"{r['d']}\t{r['n']}\t{r['phi']}\t{r['phi_pipeline']}\t{r['walls']}\t{r['pass']}" for r in results]
        return "\n".join(rows) + "\n", code
    lines = [
        f"d={r['d']} n={r['n']} phi={r['phi']} pipeline={r['phi_pipeline']} walls={r['walls']} "
        + ("PASS" if r["pass"] else "FAIL")
        for r in results
    ]
    lines.append(f"{passed}/{len(results)} cells pass")
    return "\n".join(lines) + "\n", code


def run_bounds(args, fmt: str) -> str:
    surface = _surface(args)
    b = ampleness.bounds(surface, args.n)
    if fmt == "json":
        return _json({"d": surface.d, "n": args.n, **b.to_json()})
    if fmt == "tsv":
        return _bounds_tsv(b)
    return (
        f"d = {surface.d}, n = {args.n}: reider {b.reider_lower} <= phi, "
        f"phi <= terakawa {format_rational(b.terakawa)} <= trivial {b.trivial_upper}\n"
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format or os.environ.get("ABELWALLS_FORMAT", "json")
    if fmt not in FORMATS:
        parser.error(f"unknown format {fmt!r} in ABELWALLS_FORMAT")
    if fmt == "svg" and args.command != "walls":
        parser.error("svg output is only available for 'walls'")

    code = EXIT_OK
    try:
        if args.command == "ch":
            text = run_ch(args, fmt)
        elif args.command == "walls":
            text = run_walls(args, fmt)
        elif args.command == "phi":
            text, code = run_phi(args, fmt)
        elif args.command == "verify":
            text, code = run_verify(args, fmt)
        else:
            text = run_bounds(args, fmt)
    except _Usage as exc:
        parser.error(str(exc))
    except PreconditionError as exc:
        print(f"abelwalls: precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except VerificationError as exc:
        print(f"abelwalls: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY

    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

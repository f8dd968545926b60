"""Command-line front end.

Exit codes: 0 ok, 1 internal check failed, 2 parse error, 3 resource cap,
4 domain precondition violated.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb
from typing import Sequence

from . import cohit
from .blocks import AmbiguousOmegaError, Block, BlockParseError, descending_omegas, mu, parse_omega
from .poly import PolyParseError, Polynomial, parse_poly
from .splice import NonDescendingError, straighten
from .tableaux import Partition, enumerate_ssyt, hook_count, staircase

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_CAP, EXIT_DOMAIN = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _shape(text: str) -> Partition:
    try:
        return Partition(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise CliError(f"bad shape {text!r}: {exc}", EXIT_PARSE) from None


def _check_slow(n: int, d: int, args) -> None:
    cols = cohit.dim_p(n, d)
    if cols > cohit.SLOW_COLUMNS and not getattr(args, "long_running", False):
        raise CliError(
            f"P^{d}({n}) has {cols} monomials; this is a long-running computation, "
            "pass --long-running to run it",
            EXIT_CAP,
        )


def cmd_cohit(args) -> int:
    if args.mode == "is-hit":
        p = parse_poly(args.poly, args.n)
        degs = p.degrees()
        if len(degs) > 1:
            raise CliError(f"polynomial is not homogeneous (degrees {sorted(degs)})", EXIT_DOMAIN)
        d = degs.pop() if degs else 0
        if args.d is not None and not p.is_zero() and args.d != d:
            raise CliError(f"--d {args.d} does not match polynomial degree {d}", EXIT_DOMAIN)
        hit = cohit.is_hit(p, args.cap)
        _emit(args, {"n": args.n, "d": d, "poly": str(p), "hit": hit}, "hit" if hit else "not hit")
        return EXIT_OK
    if args.d is None:
        raise CliError("--d is required", EXIT_PARSE)
    _check_slow(args.n, args.d, args)
    if args.mode == "dim":
        dim = cohit.cohit_dim(args.n, args.d, args.cap)
        _emit(args, {"n": args.n, "d": args.d, "dim": dim}, str(dim))
    else:
        basis = cohit.cohit_basis(args.n, args.d, args.cap)
        _emit(
            args,
            {"n": args.n, "d": args.d, "dim": len(basis), "basis": [list(m.exponents) for m in basis]},
            "\n".join(str(m) for m in basis),
        )
    return EXIT_OK


def cmd_straighten(args) -> int:
    try:
        b = Block.parse(args.block, args.n)
    except BlockParseError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    try:
        out = straighten(b)
    except NonDescendingError as exc:
        raise CliError(f"{exc} (violating column {exc.column})", EXIT_DOMAIN) from None
    certificate = None
    if len(descending_omegas(b.degree, b.n)) == 1:
        certificate = cohit.is_hit(Polynomial(b.n, [b.exponents]) + out, args.cap)
    blocks = [str(g) for g in out.blocks]
    lines = [f"input {b} omega=({','.join(map(str, b.omega()))}) -> {len(blocks)} semistandard block(s)"]
    lines += blocks or ["0"]
    if certificate is not None:
        lines.append(f"certificate: {'OK' if certificate else 'FAILED'} (input = output mod hits)")
    payload = {
        "n": b.n,
        "input": str(b),
        "omega": list(b.omega()),
        "blocks": blocks,
        "monomials": out.to_json(),
        "certificate": certificate,
    }
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if certificate is not False else EXIT_FAIL


def cmd_steinberg(args) -> int:
    n = args.n
    d = 2**n - n - 1
    _check_slow(n, d, args)
    expected = 2 ** comb(n, 2)
    dim = cohit.cohit_dim(n, d, args.cap)
    count = hook_count(staircase(n), n)
    ok = dim == count == expected
    _emit(
        args,
        {"n": n, "d": d, "cohit_dim": dim, "hook_count": count, "expected": expected, "pass": ok},
        f"n={n} d={d} cohit_dim={dim} hook_count={count} expected={expected} {'PASS' if ok else 'FAIL'}",
    )
    return EXIT_OK if ok else EXIT_FAIL


def cmd_spectrum(args) -> int:
    rows = cohit.spectrum(args.n, args.dmax, args.cap)
    capped = rows[-1][1] is None
    text = [f"{d}\t{'cap' if v is None else v}" for d, v in rows]
    _emit(
        args,
        {"n": args.n, "dmax": args.dmax, "rows": [{"d": d, "dim": v} for d, v in rows], "capped": capped},
        "\n".join(text),
    )
    return EXIT_CAP if capped else EXIT_OK


def cmd_ssyt(args) -> int:
    shape = _shape(args.shape)
    tabs = enumerate_ssyt(shape, args.m)
    if args.action == "count":
        _emit(args, {"shape": list(shape), "m": args.m, "count": len(tabs)}, str(len(tabs)))
    else:
        _emit(
            args,
            {"shape": list(shape), "m": args.m, "count": len(tabs), "tableaux": [t.to_json() for t in tabs]},
            "\n".join(" / ".join(" ".join(map(str, r)) for r in t.rows) for t in tabs),
        )
    return EXIT_OK


def cmd_hook(args) -> int:
    shape = _shape(args.shape)
    value = hook_count(shape, args.m)
    _emit(args, {"shape": list(shape), "m": args.m, "count": value}, str(value))
    return EXIT_OK


def cmd_omega_dim(args) -> int:
    try:
        w = parse_omega(args.omega)
    except BlockParseError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    if w.weight != args.d:
        raise CliError(f"omega ({w}) has weight {w.weight}, not {args.d}", EXIT_DOMAIN)
    _check_slow(args.n, args.d, args)
    dim = cohit.omega_quotient_dim(args.n, args.d, w, args.cap)
    hs = cohit.hit_space(args.n, args.d, args.cap)
    lower = [c for c, e in enumerate(hs.monomials) if hs.omega_of_column(c) < w]
    witnesses = [
        str(Block(e))
        for c, e in enumerate(hs.monomials)
        if hs.omega_of_column(c) == w and not hs.contains_modulo(Polynomial(args.n, [e]), lower)
    ]
    text = str(dim)
    if witnesses:
        text += f"\nsurviving blocks with omega ({w}): " + ", ".join(witnesses)
    _emit(args, {"n": args.n, "d": args.d, "omega": list(w), "dim": dim, "witnesses": witnesses}, text)
    return EXIT_OK


def cmd_mu(args) -> int:
    value = mu(args.value)
    _emit(args, {"d": args.value, "mu": value}, str(value))
    return EXIT_OK


def cmd_repro(args) -> int:
    from .repro import run_all

    results = run_all(long_running=args.long_running)
    payload = {
        "criteria": [
            {
                "number": r.number,
                "title": r.title,
                "pass": r.ok,
                "detail": r.detail,
                "seconds": round(r.seconds, 3),
            }
            for r in results
        ],
        "pass": all(r.ok for r in results),
    }
    _emit(args, payload, "\n".join(r.line() for r in results))
    return EXIT_OK if payload["pass"] else EXIT_FAIL


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cap", type=_positive, default=None, help="maximum columns (monomials) per degree")
    common.add_argument("--long-running", action="store_true", help="allow computations above the slow threshold")

    parser = argparse.ArgumentParser(prog="hitcalc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cohit", parents=[common], help="cohit dimension, basis or hit test")
    p.add_argument("mode", choices=("dim", "basis", "is-hit"))
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--d", type=_nonneg)
    p.add_argument("--poly")
    p.set_defaults(func=cmd_cohit)

    p = sub.add_parser("straighten", parents=[common], help="straighten a block into semistandard blocks")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--block", required=True, help='rows of reversed binary digits, e.g. "01/1/1"')
    p.set_defaults(func=cmd_straighten)

    p = sub.add_parser("steinberg", parents=[common], help="check the degree 2^n-n-1 count")
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=cmd_steinberg)

    p = sub.add_parser("spectrum", parents=[common], help="cohit dimensions for d = 0..dmax")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--dmax", type=_nonneg, required=True)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("ssyt", parents=[common], help="semistandard tableaux")
    p.add_argument("action", choices=("count", "list"))
    p.add_argument("--shape", required=True)
    p.add_argument("--m", type=_positive, required=True)
    p.set_defaults(func=cmd_ssyt)

    p = sub.add_parser("hook", parents=[common], help="hook-content count")
    p.add_argument("--shape", required=True)
    p.add_argument("--m", type=_positive, required=True)
    p.set_defaults(func=cmd_hook)

    p = sub.add_parser("omega-dim", parents=[common], help="dimension of the omega-filtered quotient")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--d", type=_nonneg, required=True)
    p.add_argument("--omega", required=True)
    p.set_defaults(func=cmd_omega_dim)

    p = sub.add_parser("mu", parents=[common], help="least number of 2^j-1 summands")
    p.add_argument("value", type=_nonneg)
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("repro", parents=[common], help="run every acceptance check")
    p.set_defaults(func=cmd_repro)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "mode", None) == "is-hit" and not args.poly:
        parser.error("is-hit needs --poly")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"hitcalc: {exc}", file=sys.stderr)
        return exc.code
    except PolyParseError as exc:
        print(f"hitcalc: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except cohit.CapExceeded as exc:
        print(f"hitcalc: {exc}", file=sys.stderr)
        return EXIT_CAP
    except AmbiguousOmegaError as exc:
        print(f"hitcalc: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())

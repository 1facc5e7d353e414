"""Command-line front end.

    superharm dims     --m 2 --n 1 --max-k 6
    superharm laplace  --m 2 --n 1 [--variant full|bosonic|fermionic] "x1^2"
    superharm fischer  --m 3 --n 1 "x1^4 + x1*x2"
    superharm irreps   --m 2 --n 1 "x1*x2"
    superharm pizzetti --m 3 --n 1 "1"
    superharm berezin  --m 0 --n 1 "e1*e2"
    superharm sphere   --m 3 --n 1 --weights "1,0" "x1^2"
    superharm verify   --m 2 --n 1 [--seed 0] [--count 20]

The input polynomial comes from the positional argument, --input FILE, or
stdin.  Exit codes: 0 success, 1 parse/usage error, 2 Gamma-pole error,
3 internal invariant violation (including verify failures).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .core import ParseError, PoleError, SpaceParams, SuperPolynomial
from .fischer import (
    fischer_decompose,
    harmonic_space_dim,
    poly_space_dim,
)
from .irreps import irrep_decompose
from .operators import laplace, laplace_b, laplace_f
from .parsing import (
    piscaled_to_json,
    poly_from_json,
    poly_from_text,
    poly_to_json,
    poly_to_text,
)
from .sphere import SphereFunctional, berezin, pizzetti
from .verify import run_all

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_POLE = 2
EXIT_INVARIANT = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with 2; keep 1 for usage
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _add_common(sub: argparse.ArgumentParser, with_input: bool = True) -> None:
    sub.add_argument("--m", type=int, required=True, help="commuting variables")
    sub.add_argument("--n", type=int, required=True, help="anticommuting pairs")
    sub.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    if with_input:
        sub.add_argument("--input", help="read the polynomial from this file")
        sub.add_argument(
            "poly", nargs="?", help="inline polynomial (otherwise stdin)"
        )


def _build_parser() -> _Parser:
    parser = _Parser(prog="superharm")
    subs = parser.add_subparsers(dest="command", required=True)

    dims = subs.add_parser("dims", help="dimension tables")
    _add_common(dims, with_input=False)
    dims.add_argument("--max-k", type=int, default=6)

    lap = subs.add_parser("laplace", help="apply the super Laplacian")
    _add_common(lap)
    lap.add_argument(
        "--variant", choices=("full", "bosonic", "fermionic"), default="full"
    )

    for name, helptext in [
        ("fischer", "harmonic ladder decomposition per degree"),
        ("irreps", "irreducible pieces of a harmonic"),
        ("pizzetti", "supersphere integral"),
        ("berezin", "superspace integral of R exp(x^2)"),
    ]:
        _add_common(subs.add_parser(name, help=helptext))

    sphere = subs.add_parser("sphere", help="weighted supersphere integral")
    _add_common(sphere)
    sphere.add_argument("--weights", required=True, help='e.g. "1,0" (n+1 rationals)')

    ver = subs.add_parser("verify", help="run the invariant suites")
    _add_common(ver, with_input=False)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--count", type=int, default=20)
    return parser


def _read_poly(args, params: SpaceParams) -> SuperPolynomial:
    if args.input:
        with open(args.input) as fh:
            text = fh.read()
    elif args.poly is not None:
        text = args.poly
    else:
        text = sys.stdin.read()
    text = text.strip()
    if text.startswith("{"):
        return poly_from_json(json.loads(text), params)
    return poly_from_text(text, params)


def _emit(obj, args) -> None:
    if args.format == "json":
        print(json.dumps(obj["json"], indent=None))
    else:
        print(obj["text"])


def _cmd_dims(args, params: SpaceParams) -> int:
    rows = [
        {
            "k": k,
            "dimP": poly_space_dim(params, k),
            "dimH": harmonic_space_dim(params, k),
        }
        for k in range(args.max_k + 1)
    ]
    text = "\n".join(
        ["  k   dim P_k   dim H_k"]
        + [f"{r['k']:3d}   {r['dimP']:7d}   {r['dimH']:7d}" for r in rows]
    )
    _emit(
        {"json": {"m": params.m, "n": params.n, "rows": rows}, "text": text}, args
    )
    return EXIT_OK


def _cmd_laplace(args, params: SpaceParams) -> int:
    op = {"full": laplace, "bosonic": laplace_b, "fermionic": laplace_f}[args.variant]
    result = op(_read_poly(args, params))
    _emit({"json": poly_to_json(result), "text": poly_to_text(result)}, args)
    return EXIT_OK


def _cmd_fischer(args, params: SpaceParams) -> int:
    p = _read_poly(args, params)
    reports = [fischer_decompose(part) for _, part in sorted(p.degree_buckets().items())]
    lines = []
    for rep in reports:
        lines.append(f"degree {rep.k}:")
        for comp in rep.components:
            lines.append(f"  i={comp.i}: {poly_to_text(comp.harmonic)}")
        if not rep.components:
            lines.append("  (zero)")
    _emit(
        {"json": {"reports": [rep.to_json() for rep in reports]}, "text": "\n".join(lines)},
        args,
    )
    return EXIT_OK


def _cmd_irreps(args, params: SpaceParams) -> int:
    p = _read_poly(args, params)
    comps = irrep_decompose(p)
    text = "\n".join(
        f"(l={c.label.l}, p={c.label.p}, q={c.label.q}): {poly_to_text(c.part)}"
        for c in comps
    ) or "(zero)"
    _emit(
        {
            "json": {
                "k": p.homogeneous_degree(),
                "components": [c.to_json() for c in comps],
            },
            "text": text,
        },
        args,
    )
    return EXIT_OK


def _cmd_pizzetti(args, params: SpaceParams) -> int:
    value = pizzetti(_read_poly(args, params))
    _emit({"json": piscaled_to_json(value), "text": str(value)}, args)
    return EXIT_OK


def _cmd_berezin(args, params: SpaceParams) -> int:
    value = berezin(_read_poly(args, params))
    _emit({"json": piscaled_to_json(value), "text": str(value)}, args)
    return EXIT_OK


def _cmd_sphere(args, params: SpaceParams) -> int:
    try:
        weights = tuple(Fraction(w) for w in args.weights.split(","))
    except (ValueError, ZeroDivisionError):
        print("bad --weights", file=sys.stderr)
        return EXIT_PARSE
    T = SphereFunctional(params, weights)
    value = T.integrate(_read_poly(args, params))
    _emit({"json": {"value": str(value)}, "text": str(value)}, args)
    return EXIT_OK


def _cmd_verify(args, params: SpaceParams) -> int:
    results = run_all(params, seed=args.seed, count=args.count)
    worst = EXIT_OK
    for r in results:
        if r.status == "pass":
            print(f"PASS {r.name}")
        elif r.status == "skip":
            print(f"SKIP {r.name}: {r.detail}")
        else:
            print(f"FAIL {r.name}: {r.detail}")
            worst = EXIT_INVARIANT
    return worst


_COMMANDS = {
    "dims": _cmd_dims,
    "laplace": _cmd_laplace,
    "fischer": _cmd_fischer,
    "irreps": _cmd_irreps,
    "pizzetti": _cmd_pizzetti,
    "berezin": _cmd_berezin,
    "sphere": _cmd_sphere,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        params = SpaceParams(args.m, args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        return _COMMANDS[args.command](args, params)
    except (ParseError, json.JSONDecodeError, OSError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PoleError as exc:
        print(f"pole error: {exc}", file=sys.stderr)
        return EXIT_POLE
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except RuntimeError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    raise SystemExit(main())

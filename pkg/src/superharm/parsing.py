"""Text and JSON formats for superpolynomials and pi-scaled values.

Text grammar (whitespace ignored):

    poly   :=  ['+'|'-'] term  { ('+'|'-') term }
    term   :=  factor { '*' factor }
    factor :=  rational | generator ['^' integer]

Generators are written x1..xm and e1..e2n; rationals as 7 or 3/2.  Factors
are multiplied in written order, so "e2*e1" parses to the canonical
-1*e1*e2.  Printing always emits terms sorted by (degree, exponents,
indices), which makes parse(print(p)) == p exact.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .core import (
    ParseError,
    PiScaledValue,
    SpaceParams,
    SuperMonomial,
    SuperPolynomial,
    mono_mul,
)

_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+(?:/\d+)?)|(?P<var>[xe]\d+)|(?P<op>[*+^-]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos == len(text):
                break
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return tokens


def poly_from_text(text: str, params: SpaceParams) -> SuperPolynomial:
    """Parse the textual polynomial syntax over the given space."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial", 0)
    result = SuperPolynomial.zero(params)
    idx = 0

    def peek():
        return tokens[idx] if idx < len(tokens) else (None, None, len(text))

    while idx < len(tokens):
        sign = 1
        kind, val, pos = peek()
        while kind == "op" and val in "+-":
            if val == "-":
                sign = -sign
            idx += 1
            kind, val, pos = peek()
        term = SuperPolynomial.constant(params, sign)
        expecting_factor = True
        while True:
            kind, val, pos = peek()
            if kind == "number":
                term = term * Fraction(val)
                idx += 1
            elif kind == "var":
                letter, index = val[0], int(val[1:])
                idx += 1
                exp = 1
                kind2, val2, pos2 = peek()
                if kind2 == "op" and val2 == "^":
                    idx += 1
                    kind3, val3, pos3 = peek()
                    if kind3 != "number" or "/" in val3:
                        raise ParseError("exponent must be an integer", pos3)
                    exp = int(val3)
                    idx += 1
                try:
                    gen = (
                        SuperPolynomial.x_var(params, index)
                        if letter == "x"
                        else SuperPolynomial.e_var(params, index)
                    )
                except ValueError as exc:
                    raise ParseError(str(exc), pos) from None
                term = term * gen**exp
            else:
                if expecting_factor:
                    raise ParseError("expected a coefficient or generator", pos)
                break
            expecting_factor = False
            kind, val, pos = peek()
            if kind == "op" and val == "*":
                idx += 1
                expecting_factor = True
            else:
                break
        result = result + term
        kind, val, pos = peek()
        if kind is None:
            break
        if not (kind == "op" and val in "+-"):
            raise ParseError(f"expected '+' or '-', got {val!r}", pos)
    return result


def _format_mono(mono: SuperMonomial) -> str:
    parts = []
    for i, e in enumerate(mono.bos, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    parts.extend(f"e{j}" for j in mono.ferm)
    return "*".join(parts)


def poly_to_text(p: SuperPolynomial) -> str:
    if p.is_zero():
        return "0"
    chunks: list[str] = []
    for mono, coeff in p.sorted_terms():
        body = _format_mono(mono)
        mag = abs(coeff)
        if not body:
            piece = str(mag)
        elif mag == 1:
            piece = body
        else:
            piece = f"{mag}*{body}"
        if not chunks:
            chunks.append(piece if coeff > 0 else f"-{piece}")
        else:
            chunks.append(f"+ {piece}" if coeff > 0 else f"- {piece}")
    return " ".join(chunks)


def poly_to_json(p: SuperPolynomial) -> dict:
    return {
        "m": p.params.m,
        "n": p.params.n,
        "terms": [
            {"coeff": str(c), "bos": list(mono.bos), "ferm": list(mono.ferm)}
            for mono, c in p.sorted_terms()
        ],
    }


def poly_from_json(obj: dict, params: SpaceParams | None = None) -> SuperPolynomial:
    """Rebuild a polynomial from its JSON dict; params defaults to the stored m, n."""
    try:
        space = SpaceParams(int(obj["m"]), int(obj["n"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad space in JSON: {exc}") from None
    if params is not None and params != space:
        raise ParseError(f"JSON space {space} does not match requested {params}")
    total: dict[SuperMonomial, Fraction] = {}
    for t in obj.get("terms", []):
        try:
            coeff = Fraction(t["coeff"])
            bos = tuple(int(x) for x in t["bos"])
            ferm = tuple(int(x) for x in t["ferm"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad term in JSON: {exc}") from None
        # accept unsorted fermionic lists, normalising the sign
        mono = SuperMonomial(bos, ())
        for j in ferm:
            hit = mono_mul(mono, SuperMonomial((0,) * len(bos), (j,)))
            if hit is None:
                coeff = Fraction(0)
                break
            sign, mono = hit
            coeff *= sign
        if coeff == 0:
            continue
        total[mono] = total.get(mono, Fraction(0)) + coeff
    return SuperPolynomial(space, total)


def piscaled_to_json(v: PiScaledValue) -> dict:
    return {"coeff": str(v.coeff), "halfPiExp": v.half_pi_exp}


def piscaled_from_json(obj: dict) -> PiScaledValue:
    try:
        return PiScaledValue(Fraction(obj["coeff"]), int(obj["halfPiExp"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad PiScaledValue JSON: {exc}") from None


def weights_to_json(weights) -> dict:
    return {"a": [str(Fraction(w)) for w in weights]}


def weights_from_json(obj: dict) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(w) for w in obj["a"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad weights JSON: {exc}") from None

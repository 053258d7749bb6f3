"""Text and JSON formats for every object type.

Polynomial text: variable x, integer and a/b rational literals, and
the operators + - * ^ with parentheses, e.g. ``x^2 - 1`` or
``(1/2)*x^3 + 2*x``.  Emission is always canonical descending-degree
form, and parse(print(obj)) is the identity on every object.

Point literals: ``P(inf)``, ``P(x^2+1)``, and the shorthand ``P(3)``
for ``P(x-3)``.  Divisor literals are signed sums of multiples of
point literals, ``0`` for the zero divisor.

JSON schemas (all rationals travel as strings):
  triple   {"total": {"kind": "proper"} | {"kind": "open", "boundary": [...]},
            "plus": "<divisor>", "minus": "<divisor>"}
  map      {"num": "<poly>", "den": "<poly>"} or {"const": "<point>"}
  cycle    {"source": <triple>, "target": <triple>,
            "components": [{"a": <map>, "b": <map>, "mult": 1}, ...]}
  pair     {"total": <total>, "infinity": "<divisor>"}
  iy       {"Y": "<divisor>", "Z": "<divisor>"}
  mlog     {"boundary": "<divisor>", "modulus": "<divisor>"}
  ne       {"infinity": "<divisor>"}
  space    {"kind": "proper"} | {"kind": "open", "boundary": [...]}
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Callable

from .cycles import Component, Cycle
from .divisors import INFINITY, ClosedPoint, CurveSpace, Divisor, RationalMap
from .errors import ParseError
from .functors import IYObject, MlogObject, NePair
from .ratpoly import Poly
from .triples import ModulusPair, ModulusTriple, TripleSum

# ---------------------------------------------------------------------------
# polynomial text
# ---------------------------------------------------------------------------


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, column=self.pos + 1)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, expected: str) -> None:
        if self.peek() != expected:
            raise self.error(f"expected {expected!r}")
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start : self.pos])

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


def _parse_expr(tk: _Tokens) -> Poly:
    sign = 1
    if tk.peek() == "-":
        tk.take("-")
        sign = -1
    elif tk.peek() == "+":
        tk.take("+")
    acc = _parse_term(tk).scale(sign)
    while tk.peek() in ("+", "-"):
        op = tk.peek()
        tk.take(op)
        term = _parse_term(tk)
        acc = acc + term if op == "+" else acc - term
    return acc


def _parse_term(tk: _Tokens) -> Poly:
    acc = _parse_power(tk)
    while tk.peek() == "*":
        tk.take("*")
        acc = acc * _parse_power(tk)
    return acc


def _parse_power(tk: _Tokens) -> Poly:
    base = _parse_atom(tk)
    if tk.peek() == "^":
        tk.take("^")
        exp = tk.integer()
        return base**exp
    return base


def _parse_atom(tk: _Tokens) -> Poly:
    ch = tk.peek()
    if ch == "(":
        tk.take("(")
        inner = _parse_expr(tk)
        tk.take(")")
        return inner
    if ch == "x":
        tk.take("x")
        return Poly.x()
    if ch.isdigit():
        num = tk.integer()
        if tk.peek() == "/":
            tk.take("/")
            den = tk.integer()
            if den == 0:
                raise tk.error("zero denominator")
            return Poly.constant(Fraction(num, den))
        return Poly.constant(num)
    raise tk.error("expected a number, x, or a parenthesized expression")


def parse_poly(text: str) -> Poly:
    tk = _Tokens(text)
    poly = _parse_expr(tk)
    if not tk.at_end():
        raise tk.error("trailing input after polynomial")
    return poly


def _frac_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def poly_to_text(p: Poly) -> str:
    if p.is_zero:
        return "0"
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = _frac_text(mag)
        else:
            xpow = "x" if k == 1 else f"x^{k}"
            body = xpow if mag == 1 else f"{_frac_text(mag)}*{xpow}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# points and divisors
# ---------------------------------------------------------------------------


def parse_point(text: str) -> ClosedPoint:
    text = text.strip()
    if not (text.startswith("P(") and text.endswith(")")):
        raise ParseError(f"point literal must look like P(...): {text!r}")
    inner = text[2:-1].strip()
    if inner == "inf":
        return INFINITY
    poly = parse_poly(inner)
    if poly.is_constant:
        # shorthand: P(c) is the rational point x = c
        return ClosedPoint.rational(poly[0])
    return ClosedPoint.finite(poly)


def point_to_text(p: ClosedPoint) -> str:
    if p.is_infinity:
        return "P(inf)"
    return f"P({poly_to_text(p.minimal_poly)})"


def _split_signed_terms(text: str) -> list[tuple[int, str]]:
    terms = []
    depth = 0
    sign = 1
    start = None
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parentheses", column=i + 1)
        elif depth == 0 and ch in "+-" and start is not None:
            terms.append((sign, text[start:i]))
            sign = 1 if ch == "+" else -1
            start = None
            continue
        if start is None and not ch.isspace():
            if ch == "+" and depth == 0:
                continue
            if ch == "-" and depth == 0:
                sign = -sign
                continue
            start = i
    if start is not None:
        terms.append((sign, text[start:]))
    if depth:
        raise ParseError("unbalanced parentheses")
    return terms


def parse_divisor(text: str) -> Divisor:
    text = text.strip()
    if text == "0" or not text:
        return Divisor.zero()
    entries = []
    for sign, chunk in _split_signed_terms(text):
        chunk = chunk.strip()
        mult = 1
        if "*P(" in chunk:
            mult_text, _, rest = chunk.partition("*")
            try:
                mult = int(mult_text.strip())
            except ValueError as exc:
                raise ParseError(f"bad multiplicity {mult_text!r}") from exc
            chunk = rest.strip()
        entries.append((parse_point(chunk), sign * mult))
    return Divisor(entries)


def divisor_to_text(d: Divisor) -> str:
    if d.is_zero:
        return "0"
    parts = []
    for point, mult in d:
        body = f"{abs(mult)}*{point_to_text(point)}"
        if not parts:
            parts.append(body if mult > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if mult > 0 else f"- {body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# maps
# ---------------------------------------------------------------------------


def map_from_json(data: Any) -> RationalMap:
    if not isinstance(data, dict):
        raise ParseError("a map is a JSON object")
    if "const" in data:
        return RationalMap.constant(parse_point(data["const"]))
    if "num" not in data:
        raise ParseError("a map needs either 'num' or 'const'")
    num = parse_poly(data["num"])
    den = parse_poly(data.get("den", "1"))
    return RationalMap.from_fraction(num, den)


def map_to_json(f: RationalMap) -> dict:
    if f.is_constant:
        return {"const": point_to_text(f.value)}
    return {"num": poly_to_text(f.num), "den": poly_to_text(f.den)}


def map_to_text(f: RationalMap) -> str:
    if f.is_constant:
        return f"const {point_to_text(f.value)}"
    if f.den == Poly.one():
        return poly_to_text(f.num)
    return f"({poly_to_text(f.num)})/({poly_to_text(f.den)})"


# ---------------------------------------------------------------------------
# spaces, triples, pairs, sums
# ---------------------------------------------------------------------------


def space_from_json(data: Any) -> CurveSpace:
    if not isinstance(data, dict) or "kind" not in data:
        raise ParseError("a total space is {'kind': 'proper'|'open', ...}")
    if data["kind"] == "proper":
        return CurveSpace.proper()
    if data["kind"] == "open":
        boundary = [parse_point(t) for t in data.get("boundary", [])]
        if not boundary:
            raise ParseError("an open total space needs a nonempty boundary")
        return CurveSpace.open(boundary)
    raise ParseError(f"unknown total space kind {data['kind']!r}")


def space_to_json(space: CurveSpace) -> dict:
    if space.is_proper:
        return {"kind": "proper"}
    pts = sorted(space.boundary, key=lambda p: p.sort_key())
    return {"kind": "open", "boundary": [point_to_text(p) for p in pts]}


def triple_from_json(data: Any) -> ModulusTriple:
    if not isinstance(data, dict):
        raise ParseError("a triple is a JSON object")
    total = space_from_json(data.get("total", {"kind": "proper"}))
    plus = parse_divisor(data.get("plus", "0"))
    minus = parse_divisor(data.get("minus", "0"))
    return ModulusTriple(total, plus, minus)


def triple_to_json(t: ModulusTriple) -> dict:
    return {
        "total": space_to_json(t.total),
        "plus": divisor_to_text(t.plus),
        "minus": divisor_to_text(t.minus),
    }


def triple_to_text(t: ModulusTriple) -> str:
    total = "P1" if t.total.is_proper else "P1 minus boundary"
    return f"({total}, {divisor_to_text(t.plus)}, {divisor_to_text(t.minus)})"


def pair_from_json(data: Any) -> ModulusPair:
    if not isinstance(data, dict):
        raise ParseError("a pair is a JSON object")
    total = space_from_json(data.get("total", {"kind": "proper"}))
    return ModulusPair(total, parse_divisor(data.get("infinity", "0")))


def pair_to_json(pair: ModulusPair) -> dict:
    return {"total": space_to_json(pair.total), "infinity": divisor_to_text(pair.infinity)}


def triple_sum_from_json(data: Any) -> TripleSum:
    if not isinstance(data, list):
        raise ParseError("a triple sum is a JSON list of triples")
    return TripleSum(tuple(triple_from_json(item) for item in data))


def triple_sum_to_json(ts: TripleSum) -> list:
    return [triple_to_json(t) for t in ts.summands]


# ---------------------------------------------------------------------------
# cycles
# ---------------------------------------------------------------------------


def cycle_from_json(data: Any) -> Cycle:
    if not isinstance(data, dict):
        raise ParseError("a cycle is a JSON object")
    source = triple_from_json(data.get("source", {}))
    target = triple_from_json(data.get("target", {}))
    comps = []
    for item in data.get("components", []):
        a = map_from_json(item["a"])
        b = map_from_json(item["b"])
        mult = int(item.get("mult", 1))
        comps.append(Component(a, b, mult))
    return Cycle(source, target, comps)


def cycle_to_json(cycle: Cycle) -> dict:
    return {
        "source": triple_to_json(cycle.source),
        "target": triple_to_json(cycle.target),
        "components": [
            {"a": map_to_json(c.a), "b": map_to_json(c.b), "mult": c.mult}
            for c in cycle.components
        ],
    }


# ---------------------------------------------------------------------------
# bridge objects
# ---------------------------------------------------------------------------


def iy_from_json(data: Any) -> IYObject:
    if not isinstance(data, dict):
        raise ParseError("a two-divisor object is a JSON object")
    return IYObject(y=parse_divisor(data.get("Y", "0")), z=parse_divisor(data.get("Z", "0")))


def iy_to_json(o: IYObject) -> dict:
    return {"Y": divisor_to_text(o.y), "Z": divisor_to_text(o.z)}


def mlog_from_json(data: Any) -> MlogObject:
    if not isinstance(data, dict):
        raise ParseError("a boundary/modulus object is a JSON object")
    return MlogObject(
        boundary_div=parse_divisor(data.get("boundary", "0")),
        modulus_div=parse_divisor(data.get("modulus", "0")),
    )


def mlog_to_json(o: MlogObject) -> dict:
    return {"boundary": divisor_to_text(o.boundary_div), "modulus": divisor_to_text(o.modulus_div)}


def ne_from_json(data: Any) -> NePair:
    if not isinstance(data, dict):
        raise ParseError("a signed pair is a JSON object")
    return NePair(infinity=parse_divisor(data.get("infinity", "0")))


def ne_to_json(x: NePair) -> dict:
    return {"infinity": divisor_to_text(x.infinity)}


# ---------------------------------------------------------------------------
# entry point used by the CLI
# ---------------------------------------------------------------------------

_JSON_KINDS: dict[str, Callable[[Any], Any]] = {
    "triple": triple_from_json,
    "triples": triple_sum_from_json,
    "cycle": cycle_from_json,
    "map": map_from_json,
    "space": space_from_json,
    "pair": pair_from_json,
    "iy": iy_from_json,
    "mlog": mlog_from_json,
    "ne": ne_from_json,
}

_TEXT_KINDS: dict[str, Callable[[str], Any]] = {
    "divisor": parse_divisor,
    "point": parse_point,
    "poly": parse_poly,
}


def parse_input(text: str, kind: str):
    """Parse inline text (or JSON text) into a typed object."""
    if kind in _TEXT_KINDS:
        return _TEXT_KINDS[kind](text)
    if kind not in _JSON_KINDS:
        raise ParseError(f"unknown object kind {kind!r}")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
    return _JSON_KINDS[kind](data)

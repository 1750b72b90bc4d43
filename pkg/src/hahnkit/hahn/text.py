"""Plain-text syntax for group elements and series.

Elements are written as a rational (one-index groups), a tuple such as
``(1/2, 0)`` whose entries sit at consecutive indices from the group's first
index, or JSON.  Series are sums of terms ``c t^e`` where ``e`` is an
element in the same syntax, for example ``1 - 1/8 t^2 + t^(0,-1)``.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction

from ..arith import rational_str, to_rational
from ..errors import ParseError
from ..oag.element import ZERO, Element
from ..oag.group import GroupDescriptor
from .series import Series

def _single_index(G: GroupDescriptor):
    if G.is_trivial:
        return None
    if G.is_finite and G.last_index == G.start:
        return G.start
    return None


def element_from_values(G: GroupDescriptor, values) -> Element:
    start = 0 if G.is_trivial else G.start
    return Element.from_values(values, start)


def parse_element(text: str, G: GroupDescriptor) -> Element:
    """Parse a hull element; membership in G is not checked here."""
    s = text.strip()
    if not s:
        raise ParseError("empty element", 0)
    if s[0] in "[{":
        try:
            data = json.loads(s)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad element JSON: {exc.msg}", exc.pos) from None
        if isinstance(data, list) and all(not isinstance(v, dict) for v in data):
            return element_from_values(G, [to_rational(str(v)) for v in data])
        return Element.from_json(data)
    if s[0] == "(":
        if not s.endswith(")"):
            raise ParseError("unclosed tuple", len(s))
        parts = s[1:-1].split(",")
        values = []
        pos = 1
        for part in parts:
            try:
                values.append(to_rational(part))
            except ParseError:
                raise ParseError(f"bad tuple entry {part.strip()!r}", pos) from None
            pos += len(part) + 1
        return element_from_values(G, values)
    try:
        q = to_rational(s)
    except ParseError:
        raise ParseError(f"bad element {s!r}", 0) from None
    idx = _single_index(G)
    if idx is None and q != 0:
        raise ParseError("a bare number is an exponent only in a one-index group; use a tuple", 0)
    return Element({idx: q}) if q else ZERO


def format_element(e: Element, G: GroupDescriptor, paren: bool = False) -> str:
    idx = _single_index(G)
    if idx is not None and set(e.support) <= {idx}:
        out = rational_str(e[idx])
        if paren and "/" in out:
            return f"({out})"
        return out
    start = 0 if G.is_trivial else G.start
    top = max([G.last_index if G.last_index is not None else start] + list(e.support))
    lo = min([start] + list(e.support))
    return "(" + ",".join(rational_str(e[i]) for i in range(lo, top + 1)) + ")"


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<op>[+-])|(?P<t>t)|(?P<caret>\^)"
                    r"|(?P<tuple>\([^()]*\))|(?P<bad>\S))")


def parse_series(text: str, G: GroupDescriptor) -> Series:
    """Parse ``c t^e`` terms joined by + and -, e.g. ``3t^-2 + t`` or ``5 + t^(1,2)``."""
    src = text
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            break
        if m.lastgroup == "bad":
            raise ParseError(f"unexpected character {m.group('bad')!r}", m.start("bad"))
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    if not tokens:
        raise ParseError("empty series", 0)

    terms = []
    i = 0
    sign = 1
    expect_term = True
    while i < len(tokens):
        kind, val, at = tokens[i]
        if kind == "op":
            if expect_term and i != 0:
                raise ParseError("unexpected operator", at)
            expect_term = True
            sign = 1 if val == "+" else -1
            i += 1
            continue
        if not expect_term:
            raise ParseError("expected + or - between terms", at)
        coeff = Fraction(1)
        seen_coeff = False
        if kind == "num":
            coeff = to_rational(val.replace(" ", ""))
            seen_coeff = True
            i += 1
        exp = ZERO
        if i < len(tokens) and tokens[i][0] == "t":
            i += 1
            exp = None
            if i < len(tokens) and tokens[i][0] == "caret":
                i += 1
                exp_sign = 1
                if i < len(tokens) and tokens[i][0] == "op":
                    exp_sign = -1 if tokens[i][1] == "-" else 1
                    i += 1
                if i >= len(tokens):
                    raise ParseError("missing exponent", len(src))
                k2, v2, at2 = tokens[i]
                if k2 == "num":
                    exp = parse_element(v2.replace(" ", ""), G) * exp_sign
                elif k2 == "tuple":
                    exp = parse_element(v2, G) * exp_sign
                else:
                    raise ParseError("bad exponent", at2)
                i += 1
            else:
                idx = _single_index(G)
                if idx is None:
                    raise ParseError("bare t needs an explicit exponent in a multi-index group", at)
                exp = Element({idx: 1})
        elif not seen_coeff:
            raise ParseError("expected a coefficient or t", at)
        terms.append((exp, coeff * sign))
        sign = 1
        expect_term = False
    if expect_term:
        raise ParseError("dangling operator", len(src))
    return Series(terms)


def format_series(x: Series, G: GroupDescriptor) -> str:
    if not x:
        return "0"
    parts = []
    for k, (e, c) in enumerate(x.terms):
        neg = c < 0
        a = -c if neg else c
        if not e:
            body = rational_str(a)
        else:
            idx = _single_index(G)
            if idx is not None and e.support == (idx,) and e[idx] == 1:
                mono = "t"
            else:
                mono = "t^" + format_element(e, G, paren=True)
            body = mono if a == 1 else f"{rational_str(a)} {mono}"
        if k == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)

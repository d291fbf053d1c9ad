"""Text grammar for series and polynomial input.

Series: terms joined by "+" or "-", each "c", "t", "t^e", or "c*t^e" with c a
rational (p/q) and e an integer or parenthesized rational, e.g.
"1 + 2*t^(3/2) + -1*t^2".

Polynomials: terms are "*"-joined factors; a factor is a parenthesized series
"(1+t)", a rational, a t-power, or a variable power "x1^2", e.g.
"(1+t)*x1^2 + t^(1/2)*x2 + 3". Exact throughout.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .instances import PuiseuxSeries, puiseux_ring, series, series_mul, t_power
from .trop_poly import Polynomial, poly


class ParseError(ValueError):
    pass


_VAR = re.compile(r"^x(\d+)(?:\^(\d+))?$")
_TPOW = re.compile(r"^t(?:\^(.+))?$")
_RATIONAL = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def _split_top(text: str, seps: str) -> list[str]:
    """Split at depth-0 separators, keeping a leading sign with each chunk.

    A sign right after "^", "*", or "/" belongs to an exponent or
    coefficient, not a term boundary.
    """
    chunks, depth, start, prev = [], 0, 0, ""
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {text!r}")
        elif ch in seps and depth == 0 and i > start and prev not in "^*/+-":
            chunks.append(text[start:i])
            start = i if ch == "-" else i + 1  # keep "-" with the next chunk
        if not ch.isspace():
            prev = ch
    if depth != 0:
        raise ParseError(f"unbalanced parentheses in {text!r}")
    chunks.append(text[start:])
    stripped = [c.strip() for c in chunks]
    if any(not c for c in stripped):
        raise ParseError(f"empty term in {text!r}")
    return stripped


def _parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL.match(text):
        raise ParseError(f"not a rational: {text!r}")
    return Fraction(text)


def _parse_exponent(text: str) -> Fraction:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1].strip()
    return _parse_rational(text)


def _parse_series_factor(text: str, char: int) -> PuiseuxSeries:
    m = _TPOW.match(text)
    if m:
        q = Fraction(1) if m.group(1) is None else _parse_exponent(m.group(1))
        return t_power(q, 1, char)
    return t_power(0, _parse_rational(text), char)


def parse_series(text: str, char: int = 0) -> PuiseuxSeries:
    total = []
    for chunk in _split_top(text, "+-"):
        sign = 1
        if chunk.startswith("-"):
            sign, chunk = -1, chunk[1:].strip()
        acc = t_power(0, sign, char)
        for p in (p.strip() for p in chunk.split("*")):
            if not p:
                raise ParseError(f"empty factor in {text!r}")
            acc = series_mul(acc, _parse_series_factor(p, char), char)
        total.extend(acc.terms)
    return series(total, char)


def parse_polynomial(text: str, nvars: int | None = None,
                     char: int = 0) -> Polynomial:
    """Polynomial with Puiseux-series coefficients; nvars inferred if omitted."""
    ring = puiseux_ring(char)
    raw: list[tuple[dict[int, int], PuiseuxSeries]] = []
    seen = 0
    for chunk in _split_top(text, "+-"):
        sign = 1
        if chunk.startswith("-"):
            sign, chunk = -1, chunk[1:].strip()
        coeff = t_power(0, sign, char)
        degs: dict[int, int] = {}
        for factor in _split_top(chunk, "*"):
            if factor.startswith("(") and factor.endswith(")"):
                coeff = series_mul(coeff, parse_series(factor[1:-1], char), char)
                continue
            m = _VAR.match(factor)
            if m:
                idx = int(m.group(1))
                if idx < 1:
                    raise ParseError(f"variables are 1-indexed: {factor!r}")
                power = 1 if m.group(2) is None else int(m.group(2))
                degs[idx - 1] = degs.get(idx - 1, 0) + power
                seen = max(seen, idx)
                continue
            coeff = series_mul(coeff, _parse_series_factor(factor, char), char)
        raw.append((degs, coeff))
    n = seen if nvars is None else nvars
    if seen > n:
        raise ParseError(f"variable x{seen} exceeds nvars={n}")
    items = []
    for degs, coeff in raw:
        deg = tuple(degs.get(i, 0) for i in range(n))
        items.append((deg, coeff))
    return poly(ring, n, items)


def parse_point(text: str, char: int = 0) -> tuple[PuiseuxSeries, ...]:
    """Comma-separated series literals."""
    return tuple(parse_series(part, char) for part in text.split(","))

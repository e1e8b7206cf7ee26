"""Polynomial text input.

Grammar (whitespace anywhere between tokens)::

    poly  := [sign] term (sign term)* ["mod" INT]
    term  := INT ["*"] "x" ["^" INT] | INT | "x" ["^" INT]
    sign  := "+" | "-" | U+2212

Coefficients are ascending-degree everywhere: "3x^2+2 mod 7" is [2, 0, 3]
over F_7.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import IntPoly, ModPoly, is_prime

_MINUS = ("-", "−")


class PolynomialSyntaxError(ValueError):
    def __init__(self, text: str, offset: int, message: str):
        self.text = text
        self.offset = offset
        super().__init__(f"syntax error at offset {offset}: {message}\n  {text}\n  {' ' * offset}^")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def error(self, message: str):
        raise PolynomialSyntaxError(self.text, self.i, message)

    def integer(self) -> int:
        self.skip()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if start == self.i:
            found = repr(self.text[self.i]) if self.i < len(self.text) else "end of input"
            self.error(f"expected an integer, found {found}")
        return int(self.text[start : self.i])

    def at_keyword(self, word: str) -> bool:
        self.skip()
        return self.text.startswith(word, self.i)


def _term(s: _Scanner) -> tuple[int, int]:
    c = s.peek()
    coeff, has_coeff = 1, False
    if c.isdigit():
        coeff, has_coeff = s.integer(), True
        if s.peek() == "*":
            s.i += 1
            if s.peek() != "x":
                s.error("expected 'x' after '*'")
    if s.peek() != "x":
        if has_coeff:
            return coeff, 0
        s.error("expected a coefficient or 'x'")
    s.i += 1
    if s.peek() != "^":
        return coeff, 1
    s.i += 1
    return coeff, s.integer()


def _parse(text: str) -> tuple[dict[int, int], int | None]:
    s = _Scanner(text)
    terms: dict[int, int] = {}
    sign = 1
    if s.peek() in _MINUS:
        sign, s.i = -1, s.i + 1
    elif s.peek() == "+":
        s.i += 1
    while True:
        coeff, exp = _term(s)
        terms[exp] = terms.get(exp, 0) + sign * coeff
        c = s.peek()
        if c in _MINUS:
            sign, s.i = -1, s.i + 1
        elif c == "+":
            sign, s.i = 1, s.i + 1
        else:
            break
    q = None
    if s.at_keyword("mod"):
        s.i += 3
        s.skip()
        start = s.i
        q = s.integer()
        if not is_prime(q):
            raise PolynomialSyntaxError(text, start, f"modulus {q} is not prime")
    if s.peek():
        s.error(f"unexpected {s.peek()!r}")
    return terms, q


def parse_polynomial(text: str) -> IntPoly | ModPoly:
    """Parse "x^5 - x - 1" to an IntPoly, or "3x^2 + 2 mod 7" to a ModPoly."""
    terms, q = _parse(text)
    coeffs = [0] * (max(terms) + 1)
    for e, c in terms.items():
        coeffs[e] += c
    return IntPoly(coeffs) if q is None else ModPoly(q, coeffs)


@dataclass(frozen=True)
class ParsedInput:
    """Command input after validation; ``base`` is "Q" or "F_q"."""

    text: str
    poly: IntPoly | ModPoly | None
    p: int | None
    seed: int = 0
    prime_budget: int = 200
    mode: str = "Verified"
    json: bool = False

    @property
    def base(self) -> str | None:
        if self.poly is None:
            return None
        return f"F_{self.poly.p}" if isinstance(self.poly, ModPoly) else "Q"

"""Ideal-expression grammar: parsing, evaluation, canonical rendering.

Input form:   n=<int>; <expr>
    expr     := atom | expr "*" expr | expr "^" <int> | expr "[" <int> "]"
    atom     := group | pborel | "(" expr ")"
    group    := "(" monomial ("," monomial)* ")"
    pborel   := "pborel(" monomial ";" <int> ")"
    monomial := factor ("*" factor)*      factor := "x"<int> ("^"<int>)? | "1"

Postfix "^k" is the ordinary ideal power, "[q]" the Frobenius power (every
exponent scaled by q), and pborel(u; p) the smallest p-Borel ideal containing
u.  Variables are x1..xn with n declared up front; indices above n are
rejected with a position-tagged error.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import KoszulkitError
from .ideals import MonomialIdeal, principal_p_borel
from .monomials import render_monomial


class ParseError(KoszulkitError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<int>\d+)
  | (?P<sym>[=;,*^()\[\]-])
    """,
    re.VERBOSE,
)


@dataclass
class Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str):
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        chunk = m.group()
        if kind != "ws":
            tokens.append(Token(kind, chunk, line, col))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            col = len(chunk) - chunk.rfind("\n")
        else:
            col += len(chunk)
        pos = m.end()
    tokens.append(Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.next()
        if tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text or 'end of input'!r}",
                             tok.line, tok.column)
        return tok

    def expect_int(self) -> int:
        tok = self.next()
        if tok.kind == "sym" and tok.text == "-":
            follow = self.peek()
            raise ParseError("negative integers are not allowed", tok.line, tok.column)
        if tok.kind != "int":
            raise ParseError(f"expected an integer, found {tok.text or 'end of input'!r}",
                             tok.line, tok.column)
        return int(tok.text)

    # grammar ---------------------------------------------------------------

    def parse(self) -> MonomialIdeal:
        tok = self.next()
        if tok.kind != "name" or tok.text != "n":
            raise ParseError("input must start with 'n=<count>;'", tok.line, tok.column)
        self.expect("=")
        n = self.expect_int()
        if n < 1:
            tok = self.tokens[self.pos - 1]
            raise ParseError("variable count must be at least 1", tok.line, tok.column)
        self.expect(";")
        self.n = n
        ideal = self.expression()
        tok = self.next()
        if tok.kind != "eof":
            raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.column)
        return ideal

    def expression(self) -> MonomialIdeal:
        left = self.postfixed()
        while self.peek().text == "*":
            self.next()
            right = self.postfixed()
            left = left.product(right)
        return left

    def postfixed(self) -> MonomialIdeal:
        value = self.atom()
        while True:
            tok = self.peek()
            if tok.text == "^":
                self.next()
                value = value.power(self.expect_int())
            elif tok.text == "[":
                self.next()
                q = self.expect_int()
                close = self.next()
                if close.text != "]":
                    raise ParseError("expected ']'", close.line, close.column)
                if q < 1:
                    raise ParseError("frobenius exponent must be >= 1",
                                     close.line, close.column)
                value = value.frobenius(q)
            else:
                return value

    def atom(self) -> MonomialIdeal:
        tok = self.peek()
        if tok.kind == "name" and tok.text == "pborel":
            self.next()
            self.expect("(")
            u = self.monomial()
            self.expect(";")
            p = self.expect_int()
            self.expect(")")
            try:
                return principal_p_borel(u, p).expand()
            except KoszulkitError as exc:
                raise ParseError(str(exc), tok.line, tok.column) from exc
        if tok.text == "(":
            return self.group_or_parenthesized()
        raise ParseError(f"expected '(' or 'pborel', found {tok.text or 'end of input'!r}",
                         tok.line, tok.column)

    def group_or_parenthesized(self) -> MonomialIdeal:
        self.expect("(")
        tok = self.peek()
        if tok.text == ")":
            self.next()
            return MonomialIdeal(self.n)  # empty group: the zero ideal
        # lookahead: a monomial starts with x<int> or the literal 1
        if tok.kind == "name" or (tok.kind == "int" and tok.text == "1"):
            gens = [self.monomial()]
            while self.peek().text == ",":
                self.next()
                gens.append(self.monomial())
            self.expect(")")
            return MonomialIdeal(self.n, gens)
        inner = self.expression()
        self.expect(")")
        return inner

    def monomial(self):
        exps = [0] * self.n
        first = True
        while True:
            tok = self.peek()
            if tok.kind == "int" and tok.text == "1":
                self.next()
            elif tok.kind == "name":
                m = re.fullmatch(r"x(\d+)", tok.text)
                if not m:
                    raise ParseError(f"expected a variable like x1, found {tok.text!r}",
                                     tok.line, tok.column)
                self.next()
                idx = int(m.group(1))
                if not 1 <= idx <= self.n:
                    raise ParseError(f"variable index {idx} exceeds n={self.n}",
                                     tok.line, tok.column)
                power = 1
                if self.peek().text == "^":
                    self.next()
                    power = self.expect_int()
                exps[idx - 1] += power
            else:
                if first:
                    raise ParseError(
                        f"expected a monomial, found {tok.text or 'end of input'!r}",
                        tok.line, tok.column)
                break
            first = False
            if self.peek().text == "*" and self._monomial_continues():
                self.next()
                continue
            break
        return tuple(exps)

    def _monomial_continues(self) -> bool:
        nxt = self.tokens[self.pos + 1]
        return (nxt.kind == "name" and re.fullmatch(r"x\d+", nxt.text) is not None) or (
            nxt.kind == "int" and nxt.text == "1"
        )


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse and evaluate an ideal expression."""
    return _Parser(text).parse()


def render_ideal(ideal: MonomialIdeal) -> str:
    """Canonical text form; parse(render(I)) == I."""
    if ideal.is_zero:
        return f"n={ideal.n}; ()"
    inside = ", ".join(render_monomial(g) for g in ideal.gens)
    return f"n={ideal.n}; ({inside})"

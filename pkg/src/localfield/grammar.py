"""Textual scalar grammar.

    expr  := term (("+" | "-") term)*
    term  := unary (("*" | "/") unary)*
    unary := ("-" | "+") unary | power
    power := atom ("^" ["-" | "+"] INT)?
    atom  := INT | "t" | "pi" | "s" | "X" | "(" expr ")"

`t` exists for kind laurent, `s` only with a quadratic extension datum and `X`
(the residue field generator) only for f > 1. Whitespace is ignored and the
Unicode minus sign is accepted.
"""

import re
from typing import TYPE_CHECKING, List, NamedTuple

from src.errors import MalformedScalarError, ParseError
from src.localfield.scalars import Scalar

if TYPE_CHECKING:
    from src.localfield.field import LocalField

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]+)|(?P<op>[-+*/^()]))")


class Token(NamedTuple):
    kind: str
    text: str
    column: int


def tokenize(text: str) -> List[Token]:
    text = text.replace("−", "-")
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, field: "LocalField", text: str):
        self.field = field
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str, token: Token = None) -> ParseError:
        token = token or self.current
        return ParseError(message, self.text.replace("−", "-"), token.column)

    def accept(self, *ops: str) -> Token:
        tok = self.current
        if tok.kind == "op" and tok.text in ops:
            self.i += 1
            return tok
        return None

    def expect(self, op: str) -> Token:
        tok = self.accept(op)
        if tok is None:
            raise self.error(f"expected {op!r}")
        return tok

    def parse(self) -> Scalar:
        if self.current.kind == "end":
            raise self.error("empty scalar")
        value = self.expr()
        if self.current.kind != "end":
            raise self.error(f"unexpected {self.current.text!r}")
        return value

    def expr(self) -> Scalar:
        value = self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self) -> Scalar:
        value = self.unary()
        while True:
            if self.accept("*"):
                value = value * self.unary()
            elif self.accept("/"):
                tok = self.current
                divisor = self.unary()
                if divisor.is_zero():
                    raise self.error("division by zero", tok)
                value = value / divisor
            else:
                return value

    def unary(self) -> Scalar:
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> Scalar:
        base_token = self.current
        value = self.atom()
        if self.accept("^"):
            sign = -1 if self.accept("-") else 1
            if sign == 1:
                self.accept("+")
            tok = self.current
            if tok.kind != "int":
                raise self.error("exponent must be an integer")
            self.i += 1
            exponent = sign * int(tok.text)
            if exponent < 0 and value.is_zero():
                raise self.error("negative power of zero", base_token)
            value = value**exponent
        return value

    def atom(self) -> Scalar:
        tok = self.current
        field = self.field
        if tok.kind == "int":
            self.i += 1
            try:
                return field.base(int(tok.text))
            except MalformedScalarError as exc:
                raise self.error(str(exc), tok) from exc
        if tok.kind == "name":
            self.i += 1
            if tok.text == "pi":
                return field.uniformiser
            if tok.text == "t":
                if field.kind != "laurent":
                    raise self.error("'t' is only available over F_q((t))", tok)
                return field.uniformiser
            if tok.text == "s":
                if not field.has_ext:
                    raise self.error("'s' needs a quadratic extension datum", tok)
                return field.s
            if tok.text == "X":
                if field.f == 1:
                    raise self.error("'X' needs a residue field of degree f > 1", tok)
                return field.constant(field.residue.generator)
            raise self.error(f"unknown name {tok.text!r}", tok)
        if self.accept("("):
            value = self.expr()
            self.expect(")")
            return value
        if tok.kind == "end":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected {tok.text!r}", tok)


def parse_scalar(field: "LocalField", text: str) -> Scalar:
    if not isinstance(text, str):
        text = str(text)
    try:
        return _Parser(field, text).parse()
    except ZeroDivisionError as exc:
        raise ParseError(f"division by zero ({exc})", text, 0) from exc

"""
Expression Parser.

Grammar, whitespace is insignificant::

    expr   := term (("+"|"-") term)* ;
    term   := factor (("*"|"/") factor)* ;
    factor := ("-" factor) | power ;
    power  := atom ("^" signed-number)? ;
    atom   := number | "i" | "z" | "(" expr ")" | ("exp"|"log") "(" expr ")" ;

A number is a decimal literal, optionally suffixed with `i` for imaginary.
An exponent written with digits only builds an integer power, every other
exponent a principal-branch real power.
"""

import collections
import re

from .exceptions import ExprSyntaxError, UnknownIdentifierError
from .node import ADD, CONST, DIV, EXP, IPOW, LOG, MUL, NEG, POW, SUB, VAR, Expr

Token = collections.namedtuple("Token", ("kind", "text", "position"))

_TOKEN = re.compile(
    r"(?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?i?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/^()])"
    r"|(?P<space>\s+)"
)

_ATOM_START = ("number", "'i'", "'z'", "'('", "'exp'", "'log'", "'-'")
_FUNCTIONS = {"exp": EXP, "log": LOG}


def tokenize(source):
    """
    Split `source` into tokens, the last one of kind `end`.

    >>> [tok.text for tok in tokenize("2.5i*z^-2")]
    ['2.5i', '*', 'z', '^', '-', '2', '']
    """
    tokens = []
    position = 0
    while position < len(source):
        match = _TOKEN.match(source, position)
        if match is None:
            raise ExprSyntaxError(position, ("token",), source[position])
        kind = match.lastgroup
        if kind != "space":
            tokens.append(Token(kind, match.group(), position))
        position = match.end()
    tokens.append(Token("end", "", len(source)))
    return tokens


def parse(source):
    """
    Parse `source` into an :any:`Expr`.

    The tree mirrors the source, nothing is folded.

    >>> parse("1/(1-z)")
    Expr('1/(1 - z)')
    >>> parse("z/(1-z)^2").children[1].exponent
    2
    >>> parse("z^0.5").kind, parse("z^2.0").kind, parse("z^2").kind
    ('pow', 'pow', 'ipow')
    >>> parse("2*3").kind
    'mul'

    Errors carry the offending position:

    >>> parse("1/(1-z")
    Traceback (most recent call last):
      ...
    disknorm.expr.exceptions.ExprSyntaxError: Expected ')' at column 8, found end of input.
    >>> parse("sin(z)")
    Traceback (most recent call last):
      ...
    disknorm.expr.exceptions.UnknownIdentifierError: Unknown identifier 'sin' at column 1.
    """
    try:
        return _Parser(tokenize(source)).parse()
    except (ExprSyntaxError, UnknownIdentifierError) as exc:
        exc.source = source
        raise


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.index = 0

    @property
    def current(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.current
        self.index += 1
        return token

    def fail(self, expected):
        token = self.current
        raise ExprSyntaxError(token.position, expected, token.text if token.kind != "end" else None)

    def accept(self, *texts):
        token = self.current
        if token.kind == "op" and token.text in texts:
            return self.advance()
        return None

    def expect(self, text):
        if self.accept(text) is None:
            self.fail(("'%s'" % text,))

    def parse(self):
        expr = self.expr()
        if self.current.kind != "end":
            self.fail(("operator", "end of input"))
        return expr

    def expr(self):
        node = self.term()
        while True:
            token = self.accept("+", "-")
            if token is None:
                return node
            node = Expr(ADD if token.text == "+" else SUB, (node, self.term()))

    def term(self):
        node = self.factor()
        while True:
            token = self.accept("*", "/")
            if token is None:
                return node
            node = Expr(MUL if token.text == "*" else DIV, (node, self.factor()))

    def factor(self):
        if self.accept("-") is not None:
            return Expr(NEG, (self.factor(),))
        return self.power()

    def power(self):
        base = self.atom()
        if self.accept("^") is None:
            return base
        negative = self.accept("-", "+")
        token = self.current
        if token.kind != "number" or token.text.endswith("i"):
            self.fail(("real number",))
        self.advance()
        sign = -1 if negative is not None and negative.text == "-" else 1
        if token.text.isdigit():
            return Expr(IPOW, (base,), exponent=sign * int(token.text))
        return Expr(POW, (base,), exponent=sign * float(token.text))

    def atom(self):
        token = self.current
        if token.kind == "number":
            self.advance()
            return Expr(CONST, value=_number(token.text))
        if token.kind == "name":
            self.advance()
            if token.text == "z":
                return Expr(VAR)
            if token.text == "i":
                return Expr(CONST, value=1j)
            if token.text in _FUNCTIONS:
                self.expect("(")
                argument = self.expr()
                self.expect(")")
                return Expr(_FUNCTIONS[token.text], (argument,))
            raise UnknownIdentifierError(token.text, token.position)
        if self.accept("(") is not None:
            node = self.expr()
            self.expect(")")
            return node
        return self.fail(_ATOM_START)


def _number(text):
    if text.endswith("i"):
        return complex(0, float(text[:-1]))
    return float(text)

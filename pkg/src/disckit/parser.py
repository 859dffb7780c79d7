"""Text input and output for polynomials and ring descriptors.

Grammar accepted by the polynomial parser (whitespace is free):

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom ('^' exponent)?
    atom   := nat | nat '/' nat | var | '(' expr ')'

Exponents are nonnegative integer literals; a chain like x^2^3 folds
right-associatively to x^8.  Implicit multiplication (2t, 3(x+1)) is a
syntax error, as is '/' applied to anything but two integer literals.
All syntax errors carry a 1-based line and column.

Ring descriptors use the syntax ZZ, QQ, Fp(p), optionally followed by
a variable block: ZZ[b,c], Fp(7)[u0,u1].
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputSyntaxError, ParameterError, RingMismatchError
from .rings import GF, QQ, ZZ, PolynomialRing, Ring, RingElement
from .unipoly import UniPoly

MAX_EXPONENT = 10**6


class TokenKind(enum.Enum):
    NUMBER = "number"
    IDENT = "identifier"
    PLUS = "'+'"
    MINUS = "'-'"
    STAR = "'*'"
    SLASH = "'/'"
    CARET = "'^'"
    LPAREN = "'('"
    RPAREN = "')'"
    EOF = "end of input"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    line: int
    column: int


_SINGLE = {
    "+": TokenKind.PLUS,
    "-": TokenKind.MINUS,
    "*": TokenKind.STAR,
    "/": TokenKind.SLASH,
    "^": TokenKind.CARET,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
}


def tokenize(src: str) -> list[Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(src)
    while i < n:
        ch = src[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch in _SINGLE:
            tokens.append(Token(_SINGLE[ch], ch, line, col))
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            tokens.append(Token(TokenKind.NUMBER, src[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append(Token(TokenKind.IDENT, src[i:j], line, col))
            col += j - i
            i = j
            continue
        raise InputSyntaxError(f"unexpected character {ch!r}", line, col, src)
    tokens.append(Token(TokenKind.EOF, "", line, col))
    return tokens


class _Parser:
    """Recursive-descent evaluator; values come from the supplied scope.

    The scope maps variable names to values, and make_const turns an
    int or Fraction literal into a value.  Values only need +, -, *
    and ** with an int exponent, so the same machinery produces either
    UniPoly or plain RingElement results.
    """

    def __init__(self, src: str, scope: dict, make_const):
        self.src = src
        self.tokens = tokenize(src)
        self.pos = 0
        self.scope = scope
        self.make_const = make_const

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str, tok: Token | None = None):
        tok = tok or self.peek()
        raise InputSyntaxError(message, tok.line, tok.column, self.src)

    def expect(self, kind: TokenKind) -> Token:
        tok = self.peek()
        if tok.kind is not kind:
            self.fail(f"expected {kind.value}, found {self._describe(tok)}")
        return self.advance()

    @staticmethod
    def _describe(tok: Token) -> str:
        if tok.kind is TokenKind.EOF:
            return "end of input"
        return f"{tok.kind.value} {tok.text!r}" if tok.text else tok.kind.value

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok.kind is not TokenKind.EOF:
            if tok.kind is TokenKind.SLASH:
                self.fail("'/' is only allowed between two integer literals", tok)
            if tok.kind in (TokenKind.NUMBER, TokenKind.IDENT, TokenKind.LPAREN):
                self.fail(
                    f"unexpected {self._describe(tok)}; use '*' for multiplication", tok
                )
            self.fail(f"unexpected {self._describe(tok)}", tok)
        return value

    def expr(self):
        value = self.term()
        while self.peek().kind in (TokenKind.PLUS, TokenKind.MINUS):
            op = self.advance()
            rhs = self.term()
            value = value + rhs if op.kind is TokenKind.PLUS else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek().kind is TokenKind.STAR:
            self.advance()
            value = value * self.factor()
        return value

    def factor(self):
        if self.peek().kind is TokenKind.MINUS:
            self.advance()
            return -self.factor()
        value = self.atom()
        if self.peek().kind is TokenKind.CARET:
            self.advance()
            value = value ** self.exponent()
        return value

    def exponent(self) -> int:
        parts = [self.nat(limit=True)]
        while self.peek().kind is TokenKind.CARET:
            self.advance()
            parts.append(self.nat(limit=True))
        acc = parts[-1]
        for x in reversed(parts[:-1]):
            if x > 1:
                if acc > 20 or x**acc > MAX_EXPONENT:
                    self.fail(f"exponent exceeds the limit {MAX_EXPONENT}", self.tokens[self.pos - 1])
                acc = x**acc
            else:
                acc = x**acc
        return acc

    def nat(self, limit: bool = False) -> int:
        tok = self.expect(TokenKind.NUMBER)
        value = int(tok.text)
        if limit and value > MAX_EXPONENT:
            self.fail(f"exponent exceeds the limit {MAX_EXPONENT}", tok)
        return value

    def atom(self):
        tok = self.peek()
        if tok.kind is TokenKind.NUMBER:
            self.advance()
            num = int(tok.text)
            if self.peek().kind is TokenKind.SLASH:
                self.advance()
                den_tok = self.expect(TokenKind.NUMBER)
                den = int(den_tok.text)
                if den == 0:
                    self.fail("zero denominator", den_tok)
                return self.const(Fraction(num, den), tok)
            return self.const(num, tok)
        if tok.kind is TokenKind.IDENT:
            self.advance()
            if tok.text not in self.scope:
                known = ", ".join(sorted(self.scope)) or "none"
                self.fail(f"unknown variable {tok.text!r} (known: {known})", tok)
            return self.scope[tok.text]
        if tok.kind is TokenKind.LPAREN:
            self.advance()
            value = self.expr()
            self.expect(TokenKind.RPAREN)
            return value
        self.fail(f"expected a number, variable, or '(', found {self._describe(tok)}")

    def const(self, literal, tok: Token):
        try:
            return self.make_const(literal)
        except (RingMismatchError, ParameterError) as exc:
            self.fail(str(exc), tok)


def parse_poly(src: str, ring: Ring, main_var: str | None = None):
    """Parse src over ring.

    With main_var set, the result is a UniPoly in that variable whose
    coefficients live in ring (which may itself be a polynomial ring).
    With main_var omitted, ring must be a polynomial ring and the result
    is one of its elements.  Every identifier outside the declared
    variables is rejected with a positioned error.
    """
    if main_var is None:
        if not isinstance(ring, PolynomialRing):
            raise ParameterError(
                "a main variable is required when the ring has no variables"
            )
        return parse_element(src, ring)
    scope: dict = {main_var: UniPoly.monomial(ring, main_var, 1)}
    if isinstance(ring, PolynomialRing):
        for name in ring.names:
            if name == main_var:
                raise ParameterError(
                    f"main variable {main_var!r} collides with a coefficient variable"
                )
            scope[name] = UniPoly.constant(ring, main_var, ring.variable(name))

    def make_const(literal):
        return UniPoly.constant(ring, main_var, ring.element(literal))

    return _Parser(src, scope, make_const).parse()


def parse_element(src: str, ring: Ring) -> RingElement:
    """Parse src as an element of ring (variables allowed for polynomial rings)."""
    scope: dict = {}
    if isinstance(ring, PolynomialRing):
        scope = {name: ring.variable(name) for name in ring.names}
    return _Parser(src, scope, ring.element).parse()


_RING_RE = re.compile(
    r"\s*(?:(ZZ|QQ)|Fp\(\s*([0-9]+)\s*\))\s*(?:\[([^\][]*)\])?\s*\Z"
)


def parse_ring(text: str) -> Ring:
    """Parse a ring descriptor: ZZ, QQ, Fp(p), or any of those with [vars]."""
    m = _RING_RE.match(text)
    if not m:
        raise ParameterError(
            f"bad ring descriptor {text!r}; expected ZZ, QQ, Fp(p), or R[v1,...]"
        )
    scalar_name, prime_text, var_block = m.groups()
    if scalar_name == "ZZ":
        base: Ring = ZZ
    elif scalar_name == "QQ":
        base = QQ
    else:
        base = GF(int(prime_text))
    if var_block is None:
        return base
    names = [v.strip() for v in var_block.split(",")]
    if names == [""]:
        raise ParameterError(f"empty variable block in ring descriptor {text!r}")
    return PolynomialRing(base, names)


def print_poly(poly) -> str:
    """Canonical text form; parse_poly(print_poly(p)) reproduces p.

    Accepts a UniPoly or a (multivariate) ring element.
    """
    return str(poly)


def print_element(elem: RingElement) -> str:
    return str(elem)

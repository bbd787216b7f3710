"""Expression language over one hypercomplex system.

Grammar, lowest precedence first::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/' | '\\') unary)*
    unary   := '-' unary | primary
    primary := NUMBER | BASIS | IDENT '(' expr ')' | '(' expr ')'

``a / b`` is the right quotient (solves ``x b = a``) and ``b \\ a`` the left
quotient (solves ``b x = a``).  Multiplication must be written out: ``2*e2``,
never ``2e2``.  A numeric exponent needs an explicit sign (``1.5e-2``,
``3e+4``) so that ``e2`` after a number is never mistaken for one.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from typing import Callable, Union

from . import algebra
from .algebra import HNSError, HNum, NonFiniteError, SystemDef, ZeroDivisorError
from .functions import exp_closed


class ExprError(HNSError):
    """Lexing, parsing or evaluation failure, with a 1-based column when known."""

    def __init__(self, message: str, column: int | None = None):
        self.column = column
        self.message = message
        super().__init__(f"{message} at column {column}" if column is not None else message)


class LexError(ExprError):
    pass


class ParseError(ExprError):
    pass


class EvalError(ExprError):
    pass


class TokenKind(enum.Enum):
    NUMBER = "number"
    BASIS = "basis"
    PLUS = "'+'"
    MINUS = "'-'"
    STAR = "'*'"
    SLASH = "'/'"
    BACKSLASH = "'\\'"
    LPAREN = "'('"
    RPAREN = "')'"
    IDENT = "identifier"
    END = "end of input"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    lexeme: str
    position: int
    value: float | int | None = None


_PUNCT = {
    "+": TokenKind.PLUS,
    "-": TokenKind.MINUS,
    "*": TokenKind.STAR,
    "/": TokenKind.SLASH,
    "\\": TokenKind.BACKSLASH,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
}

_NUMBER = re.compile(r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]\d+)?")
_BAD_EXPONENT = re.compile(r"[eE][+-](?!\d)")
_DIGITS = frozenset("0123456789")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_BASIS = re.compile(r"[eE][1-4]")


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        col = pos + 1
        if ch.isspace():
            pos += 1
        elif ch in _PUNCT:
            tokens.append(Token(_PUNCT[ch], ch, col))
            pos += 1
        elif ch in _DIGITS or (ch == "." and pos + 1 < n and text[pos + 1] in _DIGITS):
            m = _NUMBER.match(text, pos)
            end = m.end()
            if _BAD_EXPONENT.match(text, end):
                raise LexError(f"malformed number {text[pos:end + 2]!r}", col)
            if end < n and text[end] == ".":
                raise LexError(f"malformed number {text[pos:end + 1]!r}", col)
            value = float(m.group())
            if not math.isfinite(value):
                raise LexError(f"number {m.group()!r} out of range", col)
            tokens.append(Token(TokenKind.NUMBER, m.group(), col, value))
            pos = end
        elif ch.isascii() and (ch.isalpha() or ch == "_"):
            m = _IDENT.match(text, pos)
            word = m.group()
            if _BASIS.fullmatch(word):
                tokens.append(Token(TokenKind.BASIS, word, col, int(word[1])))
            else:
                tokens.append(Token(TokenKind.IDENT, word, col))
            pos = m.end()
        else:
            raise LexError(f"unexpected character {ch!r}", col)
    tokens.append(Token(TokenKind.END, "", n + 1))
    return tokens


# --- syntax tree ---------------------------------------------------------


@dataclass(frozen=True)
class Literal:
    value: float


@dataclass(frozen=True)
class BasisElem:
    index: int


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class DivRight:
    """``left / right``: solves ``x * right = left``."""

    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class DivLeft:
    """``left \\ right``: solves ``left * x = right``."""

    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    name: str
    arg: "Expr"


Expr = Union[Literal, BasisElem, Neg, Add, Sub, Mul, DivRight, DivLeft, Call]

FUNCTIONS = ("exp", "conj", "pnorm", "norm")

_BINARY_SYMBOL = {Add: "+", Sub: "-", Mul: "*", DivRight: "/", DivLeft: "\\"}
_TERM_OPS = {TokenKind.STAR: Mul, TokenKind.SLASH: DivRight, TokenKind.BACKSLASH: DivLeft}
_EXPR_OPS = {TokenKind.PLUS: Add, TokenKind.MINUS: Sub}
_OPERAND_START = (TokenKind.NUMBER, TokenKind.BASIS, TokenKind.IDENT, TokenKind.LPAREN)


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        if t.kind is not TokenKind.END:
            self.i += 1
        return t

    def expect(self, kind: TokenKind) -> Token:
        if self.tok.kind is not kind:
            raise ParseError(f"expected {kind.value}, found {self._describe(self.tok)}", self.tok.position)
        return self.advance()

    @staticmethod
    def _describe(t: Token) -> str:
        return t.kind.value if t.kind is TokenKind.END else repr(t.lexeme)

    def parse(self) -> Expr:
        node = self.expr()
        if self.tok.kind is not TokenKind.END:
            if self.tok.kind in _OPERAND_START:
                raise ParseError(
                    f"expected an operator before {self._describe(self.tok)} "
                    "(implicit multiplication is not supported, write '*')",
                    self.tok.position,
                )
            raise ParseError(f"expected end of input, found {self._describe(self.tok)}", self.tok.position)
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.tok.kind in _EXPR_OPS:
            op = _EXPR_OPS[self.advance().kind]
            node = op(node, self.term())
        return node

    def term(self) -> Expr:
        node = self.unary()
        while self.tok.kind in _TERM_OPS:
            op = _TERM_OPS[self.advance().kind]
            node = op(node, self.unary())
        return node

    def unary(self) -> Expr:
        if self.tok.kind is TokenKind.MINUS:
            self.advance()
            return Neg(self.unary())
        return self.primary()

    def primary(self) -> Expr:
        t = self.tok
        if t.kind is TokenKind.NUMBER:
            self.advance()
            return Literal(t.value)
        if t.kind is TokenKind.BASIS:
            self.advance()
            return BasisElem(t.value)
        if t.kind is TokenKind.IDENT:
            name = t.lexeme.lower()
            if name not in FUNCTIONS:
                raise ParseError(
                    f"unknown function {t.lexeme!r} (known: {', '.join(FUNCTIONS)})", t.position
                )
            self.advance()
            self.expect(TokenKind.LPAREN)
            arg = self.expr()
            self.expect(TokenKind.RPAREN)
            return Call(name, arg)
        if t.kind is TokenKind.LPAREN:
            self.advance()
            node = self.expr()
            self.expect(TokenKind.RPAREN)
            return node
        raise ParseError(f"expected a number, basis element, function or '(', found {self._describe(t)}", t.position)


def parse(tokens: list[Token] | str) -> Expr:
    """Parse a token list (or raw text) into an expression tree."""
    if isinstance(tokens, str):
        tokens = tokenize(tokens)
    try:
        return _Parser(tokens).parse()
    except RecursionError:
        raise ParseError("expression is nested too deeply") from None


def unparse(node: Expr) -> str:
    """Fully parenthesised source text for ``node``."""
    if isinstance(node, Literal):
        return repr(node.value) if node.value >= 0 else f"({node.value!r})"
    if isinstance(node, BasisElem):
        return f"e{node.index}"
    if isinstance(node, Neg):
        return f"-{unparse(node.operand)}"
    if isinstance(node, Call):
        return f"{node.name}({unparse(node.arg)})"
    return f"({unparse(node.left)} {_BINARY_SYMBOL[type(node)]} {unparse(node.right)})"


# --- evaluation ----------------------------------------------------------


def _scalar(system: SystemDef, x: float) -> HNum:
    return algebra.scale(x, system.one())


_CALLS: dict[str, Callable[[HNum], HNum]] = {
    "exp": exp_closed,
    "conj": algebra.conj,
    "pnorm": lambda w: _scalar(w.system, algebra.pseudonorm(w)),
    "norm": lambda w: _scalar(w.system, algebra.norm(w)),
}


def _divide(fn, dividend: HNum, divisor: HNum, divisor_node: Expr) -> HNum:
    try:
        return fn(dividend, divisor)
    except ZeroDivisorError as exc:
        raise EvalError(
            f"divisor {unparse(divisor_node)} = {divisor.render()} is "
            f"{'zero' if divisor.is_zero() else 'a zero divisor'} (pseudonorm {exc.pseudonorm:.6g})"
        ) from exc


def _eval(node: Expr, system: SystemDef) -> HNum:
    if isinstance(node, Literal):
        return _scalar(system, node.value)
    if isinstance(node, BasisElem):
        return system.basis(node.index)
    if isinstance(node, Neg):
        return algebra.neg(_eval(node.operand, system))
    if isinstance(node, Call):
        return _CALLS[node.name](_eval(node.arg, system))
    left, right = _eval(node.left, system), _eval(node.right, system)
    if isinstance(node, Add):
        return algebra.add(left, right)
    if isinstance(node, Sub):
        return algebra.sub(left, right)
    if isinstance(node, Mul):
        return algebra.mul(left, right)
    if isinstance(node, DivRight):
        return _divide(algebra.div_right, left, right, node.right)
    if isinstance(node, DivLeft):
        return _divide(algebra.div_left, right, left, node.left)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(node: Expr, system: SystemDef) -> HNum:
    """Evaluate a tree; all failures surface as :class:`ExprError`."""
    try:
        return _eval(node, system)
    except (NonFiniteError, OverflowError):
        raise EvalError("result is not finite (overflow)") from None
    except RecursionError:
        raise EvalError("expression is nested too deeply") from None


def evaluate_text(text: str, system: SystemDef) -> HNum:
    return evaluate(parse(tokenize(text)), system)

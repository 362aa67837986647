"""
WHQ Engine - Morphism Expression Language

Parses, prints and evaluates composites such as
``(mu # id(1)) . (id(1) # piL # id(1)) . (id(1) # delta)``.

Precedence, tightest first: composition (``.`` or ``∘``), tensor
(``#`` or ``⊗``), convolution (``*``). All three associate to the left.
Atoms are relative to the structure the expression is evaluated on.
"""
import logging
import re
from dataclasses import dataclass, field
from typing import Callable, Dict, List, NamedTuple, Tuple, Union

from .errors import ArityMismatch, ExpressionSyntaxError, MissingAntipode
from .galois import candidate_inverses, galois_maps
from .moncat import Mor, compose, convolve, swap, tensor
from .projections import projection_set
from .splitting import omega_maps
from .structure import WeakStructure

logger = logging.getLogger(__name__)

OPERATORS = {".": ".", "∘": ".", "#": "#", "⊗": "#", "*": "*"}
PRECEDENCE = ("*", "#", ".")

# atom name -> argument kinds
SIGNATURES: Dict[str, Tuple[str, ...]] = {
    "id": ("int",),
    "eta": (),
    "mu": (),
    "eps": (),
    "delta": (),
    "lambda": (),
    "swap": ("int", "int"),
    "piL": (),
    "piR": (),
    "piLbar": (),
    "piRbar": (),
    "omega": ("side", "index"),
    "beta": (),
    "gamma": (),
    "betabar": (),
    "gammabar": (),
}

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[().,#*∘⊗]))")


class Token(NamedTuple):
    kind: str  # int, name, op, "(", ")", ",", end
    text: str
    offset: int  # 1-based byte offset


@dataclass(frozen=True)
class Atom:
    name: str
    args: Tuple[Union[int, str], ...] = ()
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Binary:
    op: str  # ".", "#" or "*"
    left: "Expr"
    right: "Expr"
    offset: int = field(default=0, compare=False)


Expr = Union[Atom, Binary]


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8")) + 1


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ExpressionSyntaxError(
                _byte_offset(text, pos), ("atom", "operator", "parenthesis"), found=text[pos]
            )
        start = m.start(m.lastgroup)
        value = m.group(m.lastgroup)
        offset = _byte_offset(text, start)
        if m.lastgroup == "punct":
            kind = "op" if value in OPERATORS else value
            value = OPERATORS.get(value, value)
        else:
            kind = m.lastgroup
        tokens.append(Token(kind, value, offset))
        pos = m.end()
    tokens.append(Token("end", "", _byte_offset(text, len(text))))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, expected: Tuple[str, ...]) -> Token:
        tok = self.peek
        if tok.kind != kind:
            raise ExpressionSyntaxError(tok.offset, expected, found=tok.text)
        return self.advance()

    def parse(self) -> Expr:
        expr = self.binary(0)
        tok = self.peek
        if tok.kind != "end":
            raise ExpressionSyntaxError(tok.offset, ("operator", "end of input"), found=tok.text)
        return expr

    def binary(self, level: int) -> Expr:
        if level == len(PRECEDENCE):
            return self.primary()
        op = PRECEDENCE[level]
        left = self.binary(level + 1)
        while self.peek.kind == "op" and self.peek.text == op:
            tok = self.advance()
            right = self.binary(level + 1)
            left = Binary(op, left, right, offset=tok.offset)
        return left

    def primary(self) -> Expr:
        tok = self.peek
        if tok.kind == "(":
            self.advance()
            inner = self.binary(0)
            self.expect(")", ("')'",))
            return inner
        if tok.kind != "name":
            raise ExpressionSyntaxError(tok.offset, ("atom", "'('"), found=tok.text)
        self.advance()
        if tok.text not in SIGNATURES:
            raise ExpressionSyntaxError(tok.offset, tuple(SIGNATURES), found=tok.text)
        kinds = SIGNATURES[tok.text]
        if not kinds:
            return Atom(tok.text, (), offset=tok.offset)
        self.expect("(", ("'('",))
        args = []
        for k, kind in enumerate(kinds):
            if k:
                self.expect(",", ("','",))
            args.append(self.argument(kind))
        self.expect(")", ("')'",))
        return Atom(tok.text, tuple(args), offset=tok.offset)

    def argument(self, kind: str) -> Union[int, str]:
        tok = self.peek
        if kind == "side":
            if tok.kind != "name" or tok.text not in ("L", "R"):
                raise ExpressionSyntaxError(tok.offset, ("L", "R"), found=tok.text)
            self.advance()
            return tok.text
        if tok.kind != "int":
            raise ExpressionSyntaxError(tok.offset, ("integer",), found=tok.text)
        value = int(tok.text)
        if kind == "index" and value not in (1, 2):
            raise ExpressionSyntaxError(tok.offset, ("1", "2"), found=tok.text)
        self.advance()
        return value


def parse_expr(text: str) -> Expr:
    return _Parser(text).parse()


def print_expr(expr: Expr) -> str:
    """Canonical ASCII form; binary sub-terms are always parenthesized."""
    if isinstance(expr, Atom):
        if not expr.args:
            return expr.name
        return f"{expr.name}({','.join(str(a) for a in expr.args)})"

    def wrap(sub: Expr) -> str:
        text = print_expr(sub)
        return f"({text})" if isinstance(sub, Binary) else text

    return f"{wrap(expr.left)} {expr.op} {wrap(expr.right)}"


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

class _Environment:
    """Atom values for one structure, built on first use."""

    def __init__(self, S: WeakStructure):
        self.S = S
        self._cache: Dict[str, object] = {}

    def _memo(self, key: str, build: Callable[[], object]):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    def atom(self, node: Atom) -> Mor:
        S = self.S
        name = node.name
        if name == "id":
            return S.id(node.args[0])
        if name == "swap":
            k, pos = node.args
            return swap(k, pos, S.dim, S.field)
        if name in ("eta", "mu", "eps", "delta"):
            return getattr(S, name)
        if name == "lambda":
            if S.antipode is None:
                raise MissingAntipode(f"`lambda` needs an antipode on {S!r}")
            return S.antipode
        if name in ("piL", "piR", "piLbar", "piRbar"):
            return self._memo("pi", lambda: projection_set(S).as_dict())[name]
        if name == "omega":
            return self._memo("omega", lambda: omega_maps(S))[tuple(node.args)]
        if name in ("beta", "gamma"):
            beta, gamma = self._memo("galois", lambda: galois_maps(S))
            return beta if name == "beta" else gamma
        if name in ("betabar", "gammabar"):
            bars = self._memo("bars", lambda: candidate_inverses(S))
            return bars[0] if name == "betabar" else bars[1]
        raise ExpressionSyntaxError(node.offset, tuple(SIGNATURES), found=name)


def _evaluate(env: _Environment, expr: Expr) -> Mor:
    if isinstance(expr, Atom):
        return env.atom(expr)
    left = _evaluate(env, expr.left)
    right = _evaluate(env, expr.right)
    try:
        if expr.op == ".":
            return compose(left, right)
        if expr.op == "#":
            return tensor(left, right)
        return convolve(env.S, left, right)
    except ArityMismatch as e:
        if e.path is not None:
            raise
        raise ArityMismatch(str(e), path=print_expr(expr)) from None


def eval_expr(S: WeakStructure, expr: Union[Expr, str]) -> Mor:
    """Exact value of ``expr`` on S; ArityMismatch carries the offending subtree."""
    if isinstance(expr, str):
        expr = parse_expr(expr)
    result = _evaluate(_Environment(S), expr)
    logger.debug(f"{print_expr(expr)} on {S!r}: {result!r}")
    return result

"""Rational expressions: parsing, evaluation into series, compilation to automata.

Grammar (whitespace ignored)::

    expr := prod ('+' prod)*
    prod := post ('.' post)*
    post := atom ('^*' | '^+')*
    atom := LETTER | NAT | '(' expr ')'
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import reduce
from typing import Optional, Union

from .automata import (
    Automaton,
    aut_plus,
    aut_prod,
    aut_sum,
    behavior,
    coefficient_by_paths,
    const_wrap,
    letter_automaton,
    scale_left,
    scale_right,
    zero_automaton,
)
from .errors import ExprSyntaxError, IllStarred
from .semiring import Semiring
from .series import DEFAULT_MAX_LEN, Series, SeriesSemiring, format_word, is_proper, proper_star


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class Letter:
    symbol: str


@dataclass(frozen=True)
class Add:
    left: "RatExpr"
    right: "RatExpr"


@dataclass(frozen=True)
class Mul:
    left: "RatExpr"
    right: "RatExpr"


@dataclass(frozen=True)
class Plus:
    body: "RatExpr"


@dataclass(frozen=True)
class Star:
    body: "RatExpr"


RatExpr = Union[Const, Letter, Add, Mul, Plus, Star]


# parsing

class _Parser:
    def __init__(self, text: str, alphabet: Optional[str]):
        # keep original offsets for error messages
        self.toks = [(ch, i) for i, ch in enumerate(text) if not ch.isspace()]
        self.pos = 0
        self.end = len(text)
        self.alphabet = alphabet

    def peek(self):
        return self.toks[self.pos][0] if self.pos < len(self.toks) else None

    def where(self):
        return self.toks[self.pos][1] if self.pos < len(self.toks) else self.end

    def take(self):
        ch = self.toks[self.pos][0]
        self.pos += 1
        return ch

    def expr(self):
        node = self.prod()
        while self.peek() == "+":
            self.take()
            node = Add(node, self.prod())
        return node

    def prod(self):
        node = self.post()
        while self.peek() == ".":
            self.take()
            node = Mul(node, self.post())
        return node

    def post(self):
        node = self.atom()
        while self.peek() == "^":
            at = self.where()
            self.take()
            op = self.peek()
            if op == "*":
                node = Star(node)
            elif op == "+":
                node = Plus(node)
            else:
                raise ExprSyntaxError("expected '*' or '+' after '^'", at)
            self.take()
        return node

    def atom(self):
        ch, at = self.peek(), self.where()
        if ch is None:
            raise ExprSyntaxError("unexpected end of expression", at)
        if ch == "(":
            self.take()
            node = self.expr()
            if self.peek() != ")":
                raise ExprSyntaxError("expected ')'", self.where())
            self.take()
            return node
        if ch.isdigit():
            digits = ""
            while self.peek() is not None and self.peek().isdigit():
                digits += self.take()
            return Const(int(digits))
        if "a" <= ch <= "z":
            if self.alphabet is not None and ch not in self.alphabet:
                raise ExprSyntaxError(f"letter {ch!r} not in alphabet {self.alphabet!r}", at)
            self.take()
            return Letter(ch)
        raise ExprSyntaxError(f"unexpected character {ch!r}", at)


def parse(text: str, alphabet: Optional[str] = None) -> RatExpr:
    p = _Parser(text, alphabet)
    node = p.expr()
    if p.peek() is not None:
        raise ExprSyntaxError(f"unexpected character {p.peek()!r}", p.where())
    return node


def to_text(e: RatExpr) -> str:
    """Render with the minimal parentheses the grammar needs."""
    if isinstance(e, Const):
        return str(e.value)
    if isinstance(e, Letter):
        return e.symbol
    if isinstance(e, Add):
        right = to_text(e.right)
        if isinstance(e.right, Add):
            right = f"({right})"
        return f"{to_text(e.left)} + {right}"
    if isinstance(e, Mul):
        def side(x, is_right):
            s = to_text(x)
            if isinstance(x, Add) or (is_right and isinstance(x, Mul)):
                return f"({s})"
            return s
        return f"{side(e.left, False)}.{side(e.right, True)}"
    body = to_text(e.body)
    if isinstance(e.body, (Add, Mul)):
        body = f"({body})"
    return body + ("^+" if isinstance(e, Plus) else "^*")


def depth(e: RatExpr) -> int:
    if isinstance(e, (Const, Letter)):
        return 0
    if isinstance(e, (Add, Mul)):
        return 1 + max(depth(e.left), depth(e.right))
    return 1 + depth(e.body)


# constant part

def decompose(e: RatExpr, coeff: Semiring):
    """The S0-part x of e = x + a with a proper; raises IllStarred."""
    if isinstance(e, Const):
        return coeff.from_int(e.value)
    if isinstance(e, Letter):
        return coeff.zero
    if isinstance(e, Add):
        return coeff.add(decompose(e.left, coeff), decompose(e.right, coeff))
    if isinstance(e, Mul):
        return coeff.mul(decompose(e.left, coeff), decompose(e.right, coeff))
    x = decompose(e.body, coeff)
    if not coeff.is_zero(x):
        raise IllStarred(
            f"{to_text(e)}: operand has nonzero constant part {coeff.format(x)}"
        )
    return coeff.zero if isinstance(e, Plus) else coeff.one


def is_well_starred(e: RatExpr, coeff: Semiring) -> bool:
    try:
        decompose(e, coeff)
    except IllStarred:
        return False
    return True


# evaluation

def eval_series(e: RatExpr, ring: SeriesSemiring) -> Series:
    if isinstance(e, Const):
        return ring.from_int(e.value)
    if isinstance(e, Letter):
        return ring.letter(e.symbol)
    if isinstance(e, Add):
        return eval_series(e.left, ring) + eval_series(e.right, ring)
    if isinstance(e, Mul):
        return eval_series(e.left, ring) * eval_series(e.right, ring)
    v = eval_series(e.body, ring)
    if not is_proper(v):
        raise IllStarred(
            f"{to_text(e)}: operand has nonzero constant part {ring.coeff.format(v[''])}"
        )
    p = v * proper_star(v)
    return p if isinstance(e, Plus) else ring.one + p


# compilation

def _compile(e: RatExpr, coeff: Semiring, alphabet: str):
    """Return (x, aut) with aut recognizing the proper part and alpha beta = 0.

    aut is None when the proper part is zero by construction (no letters).
    """
    if isinstance(e, Const):
        return coeff.from_int(e.value), None
    if isinstance(e, Letter):
        return coeff.zero, letter_automaton(coeff, alphabet, e.symbol)
    if isinstance(e, Add):
        x1, a1 = _compile(e.left, coeff, alphabet)
        x2, a2 = _compile(e.right, coeff, alphabet)
        parts = [a for a in (a1, a2) if a is not None]
        return coeff.add(x1, x2), reduce(aut_sum, parts) if parts else None
    if isinstance(e, Mul):
        x1, a1 = _compile(e.left, coeff, alphabet)
        x2, a2 = _compile(e.right, coeff, alphabet)
        x = coeff.mul(x1, x2)
        if a1 is None and a2 is None:
            return x, None
        if a1 is None:
            return x, scale_left(x1, a2)
        if a2 is None:
            return x, scale_right(a1, x2)
        # (x1 + a1)(x2 + a2) = x1 x2 + (x1 a2 + a1 x2 + a1 a2)
        parts = []
        if not coeff.is_zero(x1):
            parts.append(scale_left(x1, a2))
        if not coeff.is_zero(x2):
            parts.append(scale_right(a1, x2))
        parts.append(aut_prod(a1, a2))
        return x, reduce(aut_sum, parts)
    x, a = _compile(e.body, coeff, alphabet)
    if not coeff.is_zero(x):
        raise IllStarred(f"{to_text(e)}: operand has nonzero constant part {coeff.format(x)}")
    plus_aut = aut_plus(a) if a is not None else None
    return (coeff.zero if isinstance(e, Plus) else coeff.one), plus_aut


def compile_expr(e: RatExpr, coeff: Semiring, alphabet: str) -> Automaton:
    """Automaton whose behavior equals the value of e.

    Star is handled as 1 + plus; the overall constant is attached with a
    fresh initial-and-final state.
    """
    x, aut = _compile(e, coeff, alphabet)
    if aut is None:
        aut = zero_automaton(coeff, alphabet)
    if coeff.is_zero(x):
        return aut
    return const_wrap(x, aut)


@dataclass
class Verdict:
    expr: str
    passed: bool
    stage: str = ""
    word: Optional[str] = None
    left: object = None
    right: object = None
    dim: int = 0

    def __str__(self):
        if self.passed:
            return f"PASS {self.expr} (dim {self.dim})"
        return (f"FAIL {self.expr}: {self.stage} differ at {format_word(self.word)}: "
                f"{self.left} != {self.right}")


def kleene_round_trip(e: RatExpr, coeff: Semiring, alphabet: str,
                      max_len: int = DEFAULT_MAX_LEN) -> Verdict:
    """Compare direct evaluation, automaton behavior and the path oracle."""
    ring = SeriesSemiring(coeff, alphabet, max_len)
    text = to_text(e)
    direct = eval_series(e, ring)
    aut = compile_expr(e, coeff, alphabet)
    beh = behavior(aut, max_len)
    for w in ring.words():
        d, b = direct[w], beh[w]
        if not coeff.eq(d, b):
            return Verdict(text, False, "evaluation vs behavior", w,
                           coeff.format(d), coeff.format(b), aut.dim)
        p = coefficient_by_paths(aut, w)
        if not coeff.eq(b, p):
            return Verdict(text, False, "behavior vs paths", w,
                           coeff.format(b), coeff.format(p), aut.dim)
    return Verdict(text, True, dim=aut.dim)


def random_expr(rng: random.Random, max_depth: int, alphabet: str,
                coeff: Semiring, max_const: int = 3) -> RatExpr:
    """Random well-starred expression of depth at most max_depth.

    Star and plus nodes whose operand has a nonzero constant part are
    re-rolled; after a few attempts the operand becomes a letter.
    """
    def leaf():
        if rng.random() < 0.3:
            return Const(rng.randint(0, max_const))
        return Letter(rng.choice(alphabet))

    def gen(d):
        if d == 0 or rng.random() < 0.3:
            return leaf()
        kind = rng.choice(("add", "add", "mul", "mul", "plus", "star"))
        if kind == "add":
            return Add(gen(d - 1), gen(d - 1))
        if kind == "mul":
            return Mul(gen(d - 1), gen(d - 1))
        for _ in range(5):
            body = gen(d - 1)
            if is_well_starred(body, coeff) and coeff.is_zero(decompose(body, coeff)):
                break
        else:
            body = Letter(rng.choice(alphabet))
        return Plus(body) if kind == "plus" else Star(body)

    return gen(max_depth)

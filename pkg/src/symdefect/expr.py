"""A small expression language for graded representations.

    expr    := term ("+" term)*
    term    := [int "*"] primary | "0"
    primary := "V(" nat "," ("+"|"-") ")" | "V(" nat ")" | func "(" args ")"
    func    := dual | tensor | wedge2 | barsum | bartensor

Ungraded atoms ``V(n)`` may only appear inside ``barsum``/``bartensor``,
whose arguments must be sums of ungraded atoms.  ``0`` is the zero
representation.  Errors carry the byte offset of the offending token.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce

from . import reps
from .reps import GradedRep, Sign, UngradedRep

__all__ = [
    "ExprError",
    "Atom",
    "UAtom",
    "Sum",
    "Scale",
    "Dual",
    "Tensor",
    "Wedge2",
    "BarSum",
    "BarTensor",
    "parse",
    "to_source",
    "evaluate",
]


class ExprError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.message = message
        self.offset = offset


@dataclass(frozen=True)
class Atom:
    lam: int
    sign: Sign


@dataclass(frozen=True)
class UAtom:
    lam: int


@dataclass(frozen=True)
class Sum:
    items: tuple


@dataclass(frozen=True)
class Scale:
    k: int
    expr: object


@dataclass(frozen=True)
class Dual:
    expr: object


@dataclass(frozen=True)
class Tensor:
    left: object
    right: object


@dataclass(frozen=True)
class Wedge2:
    expr: object


@dataclass(frozen=True)
class BarSum:
    expr: object


@dataclass(frozen=True)
class BarTensor:
    expr: object


_FUNCS = {"dual": (Dual, 1), "tensor": (Tensor, 2), "wedge2": (Wedge2, 1), "barsum": (BarSum, 1), "bartensor": (BarTensor, 1)}
_NAMES = {cls: name for name, (cls, _) in _FUNCS.items()}
_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[()+,*-]))")


@dataclass(frozen=True)
class _Tok:
    kind: str  # int | name | op | end
    text: str
    offset: int


def _tokenize(src: str) -> list:
    toks = []
    pos = 0
    byte = 0
    while True:
        m = _TOKEN.match(src, pos)
        if m is None:
            rest = src[pos:]
            stripped = rest.lstrip()
            if not stripped:
                toks.append(_Tok("end", "", len(src.encode())))
                return toks
            off = byte + len(rest[: len(rest) - len(stripped)].encode())
            raise ExprError(f"unexpected character {stripped[0]!r}", off)
        kind = m.lastgroup
        text = m.group(kind)
        start = byte + len(src[pos : m.start(kind)].encode())
        toks.append(_Tok(kind, text, start))
        byte += len(src[pos : m.end()].encode())
        pos = m.end()


class _Parser:
    def __init__(self, src: str):
        self.toks = _tokenize(src)
        self.i = 0

    @property
    def cur(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> _Tok:
        t = self.cur
        if t.text != text or t.kind == "end":
            found = "end of input" if t.kind == "end" else repr(t.text)
            raise ExprError(f"expected {text!r}, found {found}", t.offset)
        return self.take()

    def parse(self):
        e = self.expr(None)
        if self.cur.kind != "end":
            raise ExprError(f"unexpected {self.cur.text!r}", self.cur.offset)
        return e

    # ``inside`` is the enclosing barsum/bartensor name, or None when graded
    def expr(self, inside):
        terms = [self.term(inside)]
        while self.cur.text == "+" and self.cur.kind == "op":
            self.take()
            terms.append(self.term(inside))
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self, inside):
        t = self.cur
        if t.kind == "int":
            self.take()
            if self.cur.text == "*" and self.cur.kind == "op":
                self.take()
                k = int(t.text)
                if k < 1:
                    raise ExprError("scale factor must be >= 1", t.offset)
                return Scale(k, self.primary(inside))
            if int(t.text) == 0:
                return Sum(())
            raise ExprError("expected '*' after integer", self.cur.offset)
        return self.primary(inside)

    def primary(self, inside):
        t = self.cur
        if t.kind != "name":
            found = "end of input" if t.kind == "end" else repr(t.text)
            raise ExprError(f"expected an atom or function, found {found}", t.offset)
        if t.text == "V":
            return self.atom(inside)
        if t.text not in _FUNCS:
            raise ExprError(f"unknown function {t.text!r}", t.offset)
        if inside is not None:
            raise ExprError(f"function {t.text} inside {inside}", t.offset)
        cls, arity = _FUNCS[t.text]
        self.take()
        self.expect("(")
        inner = t.text if cls in (BarSum, BarTensor) else None
        args = [self.expr(inner)]
        while self.cur.text == "," and self.cur.kind == "op":
            self.take()
            args.append(self.expr(inner))
        close = self.cur
        self.expect(")")
        if len(args) != arity:
            raise ExprError(f"{t.text} takes {arity} argument{'s' if arity > 1 else ''}, got {len(args)}", close.offset)
        return cls(*args)

    def atom(self, inside):
        start = self.take()
        self.expect("(")
        n = self.cur
        if n.kind != "int":
            raise ExprError("expected a highest weight", n.offset)
        self.take()
        lam = int(n.text)
        if self.cur.text == ",":
            self.take()
            s = self.cur
            if s.text not in ("+", "-") or s.kind != "op":
                raise ExprError("expected '+' or '-'", s.offset)
            self.take()
            self.expect(")")
            if inside is not None:
                raise ExprError(f"graded atom inside {inside}", start.offset)
            return Atom(lam, Sign.of(s.text))
        self.expect(")")
        if inside is None:
            raise ExprError(f"ungraded atom V({lam}) outside barsum/bartensor", start.offset)
        return UAtom(lam)


def parse(src: str):
    return _Parser(src).parse()


def to_source(e) -> str:
    """Canonical source text; ``parse(to_source(e)) == e``."""
    if isinstance(e, Atom):
        return f"V({e.lam},{e.sign.symbol})"
    if isinstance(e, UAtom):
        return f"V({e.lam})"
    if isinstance(e, Sum):
        if not e.items:
            return "0"
        return " + ".join(to_source(x) for x in e.items)
    if isinstance(e, Scale):
        if isinstance(e.expr, Sum):
            raise ValueError("a scaled sum has no source form")
        return f"{e.k}*{to_source(e.expr)}"
    if isinstance(e, Tensor):
        return f"tensor({to_source(e.left)}, {to_source(e.right)})"
    name = _NAMES.get(type(e))
    if name is None:
        raise TypeError(f"not an expression node: {e!r}")
    return f"{name}({to_source(e.expr)})"


def _ungraded(e) -> UngradedRep:
    if isinstance(e, UAtom):
        return UngradedRep.of(e.lam)
    if isinstance(e, Sum):
        return reduce(lambda a, b: a + b, (_ungraded(x) for x in e.items), UngradedRep())
    if isinstance(e, Scale):
        return e.k * _ungraded(e.expr)
    raise TypeError(f"not an ungraded expression: {e!r}")


def evaluate(e) -> GradedRep:
    if isinstance(e, str):
        e = parse(e)
    if isinstance(e, Atom):
        return reps.irrep(e.lam, e.sign)
    if isinstance(e, Sum):
        return reduce(lambda a, b: a + b, (evaluate(x) for x in e.items), GradedRep())
    if isinstance(e, Scale):
        return e.k * evaluate(e.expr)
    if isinstance(e, Dual):
        return reps.dual(evaluate(e.expr))
    if isinstance(e, Tensor):
        return reps.tensor(evaluate(e.left), evaluate(e.right))
    if isinstance(e, Wedge2):
        return reps.wedge2(evaluate(e.expr))
    if isinstance(e, BarSum):
        return reps.bar_sum_graded(_ungraded(e.expr))
    if isinstance(e, BarTensor):
        return reps.bar_tensor_graded(_ungraded(e.expr))
    raise TypeError(f"not a graded expression: {e!r}")

"""Kleene partial recursive function codes and their delay interpreter.

Codes are built from zero, successor, projections, composition,
primitive recursion, and minimization.  ``evaluate`` interprets a code
as a strict partial function on delayed naturals; ``oracle_eval`` is an
independent big-step evaluator over plain integers with a global step
budget, used to cross-check the delay interpreter.

Concrete syntax (whitespace-insensitive)::

    Z | S | P i n | C(f; g1, ..., gk) | R(f; g) | M(f)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .delay import Delay, Later, Now, fmap, later, now, strict_proj, strict_tuple

__all__ = [
    "RecCode",
    "Zero",
    "Succ",
    "Proj",
    "Comp",
    "PrimRec",
    "Min",
    "IllFormed",
    "ParseError",
    "arity",
    "evaluate",
    "oracle_eval",
    "parse_code",
    "print_code",
    "CORPUS",
]


class IllFormed(Exception):
    """The code violates the arity discipline; carries the code path."""

    def __init__(self, path: str, reason: str):
        self.path = path
        self.reason = reason
        super().__init__(f"{path}: {reason}")


class ParseError(Exception):
    def __init__(self, position: int, message: str):
        self.position = position
        super().__init__(f"at {position}: {message}")


@dataclass(frozen=True)
class Zero:
    """The unary constant-zero function."""


@dataclass(frozen=True)
class Succ:
    """The unary successor function."""


@dataclass(frozen=True)
class Proj:
    i: int
    n: int


@dataclass(frozen=True)
class Comp:
    f: "RecCode"
    gs: Tuple["RecCode", ...]


@dataclass(frozen=True)
class PrimRec:
    f: "RecCode"
    g: "RecCode"


@dataclass(frozen=True)
class Min:
    f: "RecCode"


RecCode = Zero | Succ | Proj | Comp | PrimRec | Min


def arity(code: RecCode, _path: str = "top") -> int:
    """Number of arguments, validating the arity discipline throughout."""
    if isinstance(code, (Zero, Succ)):
        return 1
    if isinstance(code, Proj):
        if not 1 <= code.i <= code.n:
            raise IllFormed(_path, f"projection index {code.i} not in 1..{code.n}")
        return code.n
    if isinstance(code, Comp):
        af = arity(code.f, _path + ".f")
        if not code.gs:
            raise IllFormed(_path, "composition needs at least one inner code")
        if af != len(code.gs):
            raise IllFormed(_path, f"outer arity {af} != {len(code.gs)} inner codes")
        ags = [arity(g, f"{_path}.g{j+1}") for j, g in enumerate(code.gs)]
        if len(set(ags)) != 1:
            raise IllFormed(_path, f"inner codes disagree on arity: {ags}")
        return ags[0]
    if isinstance(code, PrimRec):
        af = arity(code.f, _path + ".f")
        ag = arity(code.g, _path + ".g")
        if ag != af + 2:
            raise IllFormed(_path, f"recursion step arity {ag} != base arity {af} + 2")
        return af + 1
    if isinstance(code, Min):
        af = arity(code.f, _path + ".f")
        if af < 1:
            raise IllFormed(_path, "minimization needs a body of arity >= 1")
        return af - 1
    raise IllFormed(_path, f"unknown code node {code!r}")


def evaluate(code: RecCode, args: Sequence[Delay[int]]) -> Delay[int]:
    """Interpret ``code`` on delayed naturals; strict in every argument."""
    n = arity(code)
    xs = tuple(args)
    if len(xs) != n:
        raise ValueError(f"arity mismatch: code takes {n} arguments, got {len(xs)}")
    return _eval(code, xs)


def _eval(code: RecCode, xs: Tuple[Delay[int], ...]) -> Delay[int]:
    if isinstance(code, Zero):
        return fmap(lambda _v: 0, xs[0])
    if isinstance(code, Succ):
        return fmap(lambda v: v + 1, xs[0])
    if isinstance(code, Proj):
        return strict_proj(code.i, xs)
    if isinstance(code, Comp):
        return _eval(code.f, tuple(_eval(g, xs) for g in code.gs))
    if isinstance(code, PrimRec):
        return _eval_primrec(code, xs)
    if isinstance(code, Min):
        return _eval_min(code, xs)
    raise IllFormed("top", f"unknown code node {code!r}")


def _eval_primrec(code: PrimRec, xs: Tuple[Delay[int], ...]) -> Delay[int]:
    head, y = xs[:-1], xs[-1]

    def on_numeral(m: int) -> Delay[int]:
        # Base-first unrolling of the recursion on a fully-run numeral.
        acc = _eval(code.f, head)
        for k in range(m):
            acc = _eval(code.g, head + (now(k), acc))
        return acc

    def drain(d: Delay[int]) -> Delay[int]:
        if isinstance(d, Now):
            return on_numeral(d.value)
        return later(lambda: drain(d.rest()))

    return drain(y)


def _eval_min(code: Min, xs: Tuple[Delay[int], ...]) -> Delay[int]:
    # Search upward from 0 for the least zero of the body, spending one
    # step per tested index and passing inner steps through.
    def search(i: int, cur: Delay[int]) -> Delay[int]:
        if isinstance(cur, Now):
            if cur.value == 0:
                return now(i)
            return later(lambda: search(i + 1, _eval(code.f, xs + (now(i + 1),))))
        return later(lambda: search(i, cur.rest()))

    return search(0, _eval(code.f, xs + (now(0),)))


class _Budget:
    __slots__ = ("left",)

    def __init__(self, fuel: int):
        self.left = fuel

    def tick(self) -> None:
        if self.left <= 0:
            raise _OutOfFuel()
        self.left -= 1


class _OutOfFuel(Exception):
    pass


def oracle_eval(code: RecCode, args: Sequence[int], fuel: int) -> Optional[int]:
    """Classical big-step evaluation under a global step budget.

    Independent of the delay machinery: plain recursion over plain
    integers.  Returns the value, or ``None`` once the budget runs out.
    """
    n = arity(code)
    vals = tuple(args)
    if len(vals) != n:
        raise ValueError(f"arity mismatch: code takes {n} arguments, got {len(vals)}")
    budget = _Budget(fuel)
    try:
        return _oracle(code, vals, budget)
    except _OutOfFuel:
        return None


def _oracle(code: RecCode, xs: Tuple[int, ...], budget: _Budget) -> int:
    budget.tick()
    if isinstance(code, Zero):
        return 0
    if isinstance(code, Succ):
        return xs[0] + 1
    if isinstance(code, Proj):
        return xs[code.i - 1]
    if isinstance(code, Comp):
        return _oracle(code.f, tuple(_oracle(g, xs, budget) for g in code.gs), budget)
    if isinstance(code, PrimRec):
        head, y = xs[:-1], xs[-1]
        acc = _oracle(code.f, head, budget)
        for k in range(y):
            acc = _oracle(code.g, head + (k, acc), budget)
        return acc
    if isinstance(code, Min):
        y = 0
        while _oracle(code.f, xs + (y,), budget) != 0:
            y += 1
        return y
    raise IllFormed("top", f"unknown code node {code!r}")


_TOKEN = re.compile(r"\s*(Z|S|P|C|R|M|\(|\)|;|,|\d+)")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ParseError(pos, f"unexpected character {text[pos]!r}")
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, int]], length: int):
        self.tokens = tokens
        self.k = 0
        self.length = length

    def peek(self) -> Optional[str]:
        return self.tokens[self.k][0] if self.k < len(self.tokens) else None

    def pos(self) -> int:
        return self.tokens[self.k][1] if self.k < len(self.tokens) else self.length

    def take(self, expected: str) -> None:
        if self.peek() != expected:
            raise ParseError(self.pos(), f"expected {expected!r}, found {self.peek()!r}")
        self.k += 1

    def number(self) -> int:
        tok = self.peek()
        if tok is None or not tok.isdigit():
            raise ParseError(self.pos(), f"expected a number, found {tok!r}")
        self.k += 1
        return int(tok)

    def code(self) -> RecCode:
        tok = self.peek()
        if tok == "Z":
            self.k += 1
            return Zero()
        if tok == "S":
            self.k += 1
            return Succ()
        if tok == "P":
            self.k += 1
            return Proj(self.number(), self.number())
        if tok == "C":
            self.k += 1
            self.take("(")
            f = self.code()
            self.take(";")
            gs = [self.code()]
            while self.peek() == ",":
                self.k += 1
                gs.append(self.code())
            self.take(")")
            return Comp(f, tuple(gs))
        if tok == "R":
            self.k += 1
            self.take("(")
            f = self.code()
            self.take(";")
            g = self.code()
            self.take(")")
            return PrimRec(f, g)
        if tok == "M":
            self.k += 1
            self.take("(")
            f = self.code()
            self.take(")")
            return Min(f)
        raise ParseError(self.pos(), f"expected a code, found {tok!r}")


def parse_code(text: str) -> RecCode:
    """Parse the concrete syntax; arity-checks the result."""
    parser = _Parser(_tokenize(text), len(text))
    code = parser.code()
    if parser.peek() is not None:
        raise ParseError(parser.pos(), f"trailing input {parser.peek()!r}")
    arity(code)
    return code


def print_code(code: RecCode) -> str:
    """Inverse of ``parse_code``."""
    if isinstance(code, Zero):
        return "Z"
    if isinstance(code, Succ):
        return "S"
    if isinstance(code, Proj):
        return f"P {code.i} {code.n}"
    if isinstance(code, Comp):
        inner = ", ".join(print_code(g) for g in code.gs)
        return f"C({print_code(code.f)}; {inner})"
    if isinstance(code, PrimRec):
        return f"R({print_code(code.f)}; {print_code(code.g)})"
    if isinstance(code, Min):
        return f"M({print_code(code.f)})"
    raise IllFormed("top", f"unknown code node {code!r}")


def _corpus() -> dict[str, RecCode]:
    plus = PrimRec(Proj(1, 1), Comp(Succ(), (Proj(3, 3),)))
    mult = PrimRec(Zero(), Comp(plus, (Proj(1, 3), Proj(3, 3))))
    pred = Comp(PrimRec(Zero(), Proj(2, 3)), (Proj(1, 1), Proj(1, 1)))
    monus = PrimRec(Proj(1, 1), Comp(pred, (Proj(3, 3),)))
    return {
        "plus": plus,
        "mult": mult,
        "pred": pred,
        "monus": monus,
        "ident_by_min": Min(monus),
        "always_diverge": Min(Comp(Succ(), (Proj(2, 2),))),
    }


CORPUS: dict[str, RecCode] = _corpus()

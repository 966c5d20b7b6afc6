"""Least fixed points of finitary operators on partial functions.

An ``Operator`` transforms partial functions ``A -> Delay[B]``.  The
combinator ``fix`` dovetails the iterates ``F^n(bottom)`` and returns
the first convergent run, which for finitary (continuous) operators is
the least fixed point.  Finitarity and compatibility of the iterates are
documented caller contracts; they are not checkable at runtime.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Generic, TypeVar

from .delay import Delay, bind, fmap, never, now, parallel_search

A = TypeVar("A")
B = TypeVar("B")

PartialFn = Callable[[A], Delay[B]]

__all__ = [
    "Operator",
    "bottom",
    "iterate",
    "fix",
    "factorial_operator",
    "mccarthy91_operator",
    "ackermann_operator",
    "diverging_operator",
    "division_operator",
    "SAMPLE_OPERATORS",
]


@dataclass(frozen=True)
class Operator(Generic[A, B]):
    """An endo-map on partial functions with a human-readable name.

    Contract (unchecked): ``apply`` is pure and finitary, and its
    iterates never converge to conflicting values at the same argument.
    """

    apply: Callable[[PartialFn], PartialFn]
    name: str = "operator"


def bottom() -> PartialFn:
    """The everywhere-diverging partial function."""
    return lambda a: never()


def iterate(op: Operator, n: int) -> PartialFn:
    """The n-th iterate of ``op`` on ``bottom``."""
    if n < 0:
        raise ValueError("iteration count must be non-negative")
    f = bottom()
    for _ in range(n):
        f = op.apply(f)
    return f


def _memoized(f: PartialFn) -> PartialFn:
    # Purity of the operator makes per-argument caching unobservable;
    # it keeps the dovetail from re-running shared recursive calls.
    cache: dict = {}

    def g(a):
        if a not in cache:
            cache[a] = f(a)
        return cache[a]

    return g


def fix(op: Operator) -> PartialFn:
    """Least fixed point of a finitary operator, by dovetailing.

    ``fix(op)(a)`` converges to ``b`` exactly when some iterate does;
    the iterate ``F^n(bottom)`` joins the race after ``n + 1`` steps.
    """
    iterates: list[PartialFn] = [_memoized(bottom())]

    def kth(n: int) -> PartialFn:
        while len(iterates) <= n:
            iterates.append(_memoized(op.apply(iterates[-1])))
        return iterates[n]

    return lambda a: parallel_search(lambda n: kth(n)(a))


def factorial_operator() -> Operator[int, int]:
    def step(f: PartialFn) -> PartialFn:
        def g(n: int) -> Delay[int]:
            if n == 0:
                return now(1)
            return fmap(lambda r: r * n, f(n - 1))

        return g

    return Operator(step, "factorial")


def mccarthy91_operator() -> Operator[int, int]:
    def step(f: PartialFn) -> PartialFn:
        def g(n: int) -> Delay[int]:
            if n > 100:
                return now(n - 10)
            return bind(f, f(n + 11))

        return g

    return Operator(step, "mccarthy91")


def ackermann_operator() -> Operator[tuple, int]:
    """Ackermann on argument pairs; keep inputs small."""

    def step(f: PartialFn) -> PartialFn:
        def g(args: tuple) -> Delay[int]:
            m, n = args
            if m == 0:
                return now(n + 1)
            if n == 0:
                return f((m - 1, 1))
            return bind(lambda r: f((m - 1, r)), f((m, n - 1)))

        return g

    return Operator(step, "ackermann")


def diverging_operator() -> Operator[A, B]:
    """The identity operator: every iterate is bottom."""
    return Operator(lambda f: f, "diverging")


def division_operator() -> Operator[tuple, int]:
    """Floor division by repeated subtraction; diverges on divisor 0."""

    def step(f: PartialFn) -> PartialFn:
        def g(args: tuple) -> Delay[int]:
            a, b = args
            if b == 0:
                return never()
            if a < b:
                return now(0)
            return fmap(lambda r: r + 1, f((a - b, b)))

        return g

    return Operator(step, "division")


def SAMPLE_OPERATORS() -> dict[str, Operator]:
    return {
        "factorial": factorial_operator(),
        "mccarthy91": mccarthy91_operator(),
        "ackermann": ackermann_operator(),
        "diverging": diverging_operator(),
        "division": division_operator(),
    }

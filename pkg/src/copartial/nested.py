"""Nested recursive functions encoded as delayed computations.

Nested recursion (a recursive call applied to the result of another
recursive call) is flattened with an accumulation counter that tracks
how many applications are still pending, or with an explicit
continuation when a post-processing function wraps the recursive call.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Generic, TypeVar

from .delay import Delay, later, now

A = TypeVar("A")

__all__ = ["DevilSpec", "nest", "cnest", "devil", "cps_fix", "mccarthy91_devil_spec"]


@dataclass(frozen=True)
class DevilSpec(Generic[A]):
    """Data for ``d(a) = g(a) if in_base(a) else h(d(d(i(a))))``.

    ``in_base`` must be total and decidable; ``g`` is only ever applied
    to arguments satisfying ``in_base``.
    """

    in_base: Callable[[A], bool]
    i: Callable[[A], A]
    g: Callable[[A], A]
    h: Callable[[A], A]


def cnest(n: int, m: int) -> Delay[int]:
    """Compute the m-fold self-application of ``nest`` at ``n``.

    The counter ``m`` holds the number of pending nested applications;
    one step per transition.
    """
    if m == 0:
        return now(n)
    if n == 0:
        return later(lambda: cnest(0, m - 1))
    return later(lambda: cnest(n - 1, m + 1))


def nest(n: int) -> Delay[int]:
    """``nest(0) = 0; nest(n+1) = nest(nest(n))`` — constantly zero."""
    return cnest(n, 1)


def devil(spec: DevilSpec[A], a: A, nesting: int = 1) -> Delay[A]:
    """The devil's nest: doubly-nested recursion with a post-map.

    ``nesting`` is the number of extra pending recursive applications
    opened by one unfolding (1 for the doubly-nested form); pending
    applications are counted rather than nested, and the post-map ``h``
    is accumulated in a continuation.
    """

    def aux(k: Callable[[A], Delay[A]], m: int, x: A) -> Delay[A]:
        if spec.in_base(x):
            gx = spec.g(x)
            if m == 0:
                return k(gx)
            return later(lambda: aux(k, m - 1, gx))
        return later(lambda: aux(lambda v: k(spec.h(v)), m + nesting, spec.i(x)))

    return aux(now, 0, a)


def cps_fix(
    in_base: Callable[[A], bool],
    g: Callable[[A], A],
    i: Callable[[A], A],
    h: Callable[[A], A],
    a: A,
) -> Delay[A]:
    """``d(a) = g(a) if in_base(a) else h(d(i(a)))`` via a continuation."""

    def aux(k: Callable[[A], Delay[A]], x: A) -> Delay[A]:
        if in_base(x):
            return k(g(x))
        return later(lambda: aux(lambda v: k(h(v)), i(x)))

    return aux(now, a)


def mccarthy91_devil_spec() -> DevilSpec[int]:
    """McCarthy's 91 function as a devil's nest instance."""
    return DevilSpec(
        in_base=lambda n: n > 100,
        i=lambda n: n + 11,
        g=lambda n: n - 10,
        h=lambda n: n,
    )

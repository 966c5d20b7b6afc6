"""Lazy partial naturals: observe part of a result before it is done.

``LazyNat`` interleaves an explicit computation-step constructor with
the ordinary zero/successor constructors, so a diverging computation can
still reveal finitely many successors.  The sloth example shows the
payoff: its lazy version answers where the strict delay version loops.
"""

from __future__ import annotations

import enum
from typing import Callable, Tuple

from .delay import Again, Delay, Done, unfold
from .semantics import FAILS, HOLDS, Verdict, unknown

__all__ = [
    "LazyNat",
    "ZERO",
    "succ",
    "step",
    "never_lazy",
    "omega",
    "lazy_of",
    "Ended",
    "observe",
    "lazy_plus",
    "lazy_le",
    "sloth_f",
    "sloth_g",
    "sloth_strict_f",
    "sloth_strict_g",
]


class LazyNat:
    __slots__ = ()


class _Zero(LazyNat):
    __slots__ = ()

    def __repr__(self) -> str:
        return "Zero"


class _Succ(LazyNat):
    __slots__ = ("_thunk", "_forced")

    def __init__(self, thunk: Callable[[], LazyNat]):
        self._thunk = thunk
        self._forced = None

    def pred(self) -> LazyNat:
        if self._forced is None:
            self._forced = self._thunk()
        return self._forced

    def __repr__(self) -> str:
        return "Succ(...)"


class _Step(LazyNat):
    __slots__ = ("_thunk", "_forced")

    def __init__(self, thunk: Callable[[], LazyNat]):
        self._thunk = thunk
        self._forced = None

    def rest(self) -> LazyNat:
        if self._forced is None:
            self._forced = self._thunk()
        return self._forced

    def __repr__(self) -> str:
        return "Step(...)"


ZERO: LazyNat = _Zero()


def succ(thunk: Callable[[], LazyNat]) -> LazyNat:
    return _Succ(thunk)


def step(thunk: Callable[[], LazyNat]) -> LazyNat:
    return _Step(thunk)


class _NeverLazy(_Step):
    __slots__ = ()

    def __init__(self):
        _Step.__init__(self, lambda: self)

    def rest(self) -> LazyNat:
        return self


class _Omega(_Succ):
    __slots__ = ()

    def __init__(self):
        _Succ.__init__(self, lambda: self)

    def pred(self) -> LazyNat:
        return self


_NEVER_LAZY = _NeverLazy()
_OMEGA = _Omega()


def never_lazy() -> LazyNat:
    """All steps, no information: the silently diverging lazy natural."""
    return _NEVER_LAZY


def omega() -> LazyNat:
    """All successors: the infinite lazy natural."""
    return _OMEGA


def lazy_of(n: int) -> LazyNat:
    """Embed a plain natural as a step-free lazy natural."""
    if n < 0:
        raise ValueError("lazy naturals are non-negative")
    x = ZERO
    for _ in range(n):
        x = _Succ(lambda x=x: x)
    return x


class Ended(enum.Enum):
    ZERO = "zero"
    EXHAUSTED = "exhausted"


def observe(x: LazyNat, fuel: int) -> Tuple[int, Ended]:
    """Peel constructors, counting successors; one fuel per peel.

    Reaching the zero constructor costs nothing; the count is the number
    of successors seen before the end or before the fuel ran out.
    """
    succs = 0
    while True:
        if isinstance(x, _Zero):
            return succs, Ended.ZERO
        if fuel == 0:
            return succs, Ended.EXHAUSTED
        fuel -= 1
        if isinstance(x, _Succ):
            succs += 1
            x = x.pred()
        else:
            x = x.rest()


def lazy_plus(x: LazyNat, y: LazyNat) -> LazyNat:
    """Addition by corecursion on the right argument."""
    if isinstance(y, _Zero):
        return x
    if isinstance(y, _Succ):
        return _Succ(lambda: lazy_plus(x, y.pred()))
    return _Step(lambda: lazy_plus(x, y.rest()))


def lazy_le(x: LazyNat, y: LazyNat, fuel: int) -> Verdict:
    """Semi-decide the inductive order on lazy naturals.

    A derivation strips matching successors and skips steps on either
    side until the left reaches zero (``Holds``) or a successor on the
    left faces a zero on the right, which no rule can conclude
    (``Fails``).  One fuel per stripped constructor.
    """
    while True:
        if isinstance(x, _Zero):
            return HOLDS
        if isinstance(x, _Succ) and isinstance(y, _Zero):
            return FAILS
        if fuel == 0:
            return unknown(fuel)
        fuel -= 1
        if isinstance(x, _Step):
            x = x.rest()
        elif isinstance(y, _Step):
            y = y.rest()
        else:
            x, y = x.pred(), y.pred()


def _plus_deferred(xt: Callable[[], LazyNat], y: LazyNat) -> LazyNat:
    # Addition whose left summand stays a thunk until the right one is
    # used up.  The host language is strict, so without this the mutual
    # recursion below would unfold its whole call tree up front and
    # diverge exactly where the strict transcription does.
    if isinstance(y, _Zero):
        return xt()
    if isinstance(y, _Succ):
        return _Succ(lambda: _plus_deferred(xt, y.pred()))
    return _Step(lambda: _plus_deferred(xt, y.rest()))


def _drain(x: LazyNat) -> int:
    # Read off the value of a lazy natural known to end in zero.
    n = 0
    while not isinstance(x, _Zero):
        if isinstance(x, _Succ):
            n += 1
            x = x.pred()
        else:
            x = x.rest()
    return n


# Memo tables for the sloth pair, filled bottom-up.  Building level k
# only ever consults levels below k: the guard of g(k) peels at most k+1
# constructors of f(k-1), and whenever f(k-1)'s tail jumps to a higher
# level the lower part already supplies more constructors than the guard
# can ask for.  Higher levels are demanded only while observing a
# result, when no level is under construction.
_f_memo: dict = {}
_g_memo: dict = {}


def _build_f(n: int) -> LazyNat:
    # f 0 = 0;  f (succ n) = f (g n) + g n
    if n == 0:
        return ZERO
    gn = _g_memo[n - 1]
    # The recursive call's argument is the value of g(n-1).  It is only
    # needed once gn's own constructors are exhausted, and at that point
    # gn is known finite and can be drained.
    return _plus_deferred(lambda: _sloth_f(_drain(gn)), gn)


def _build_g(n: int) -> LazyNat:
    # g 0 = 0;  g (succ m) = g (f m) + m  if f m <= m,  else 0
    if n == 0:
        return ZERO
    m = n - 1
    fm = _f_memo[m]
    # fm and lazy_of(m) carry no step constructors, so the comparison is
    # decided within m+1 strips: either fm runs out first (Holds) or its
    # (m+1)-st successor surfaces against zero (Fails).  Refutation only
    # peels finitely many constructors of fm, which is what lets g(14)
    # answer although f(13) never finishes.
    if lazy_le(fm, lazy_of(m), 2 * m + 2).is_holds():
        return _plus_deferred(lambda: _sloth_g(_drain(fm)), lazy_of(m))
    return ZERO


def _build_upto(n: int) -> None:
    # Iterative so that large levels, reached when a deep observation
    # crosses into a tower's tail, do not nest host stack frames.
    for k in range(n + 1):
        if k not in _f_memo:
            _f_memo[k] = _build_f(k)
        if k not in _g_memo:
            _g_memo[k] = _build_g(k)


def _sloth_f(n: int) -> LazyNat:
    if n not in _f_memo:
        _build_upto(n)
    return _f_memo[n]


def _sloth_g(n: int) -> LazyNat:
    if n not in _g_memo:
        _build_upto(n)
    return _g_memo[n]


def sloth_f(n: int) -> LazyNat:
    """Lazy evaluation of the first sloth function at a plain natural."""
    if n < 0:
        raise ValueError("lazy naturals are non-negative")
    return _sloth_f(n)


def sloth_g(n: int) -> LazyNat:
    """Lazy evaluation of the second sloth function at a plain natural."""
    if n < 0:
        raise ValueError("lazy naturals are non-negative")
    return _sloth_g(n)


# Strict transcription: the same mutual recursion over Delay[int],
# defunctionalized into a step machine so each observable step is O(1).
# The stack is a cons list of frames.

_EMPTY = None


def _sloth_strict(entry: str, n: int) -> Delay[int]:
    def machine(state):
        task, stack = state
        op = task[0]
        if op == "call_f":
            m = task[1]
            if m == 0:
                return Again((("ret", 0), stack))
            return Again((("call_g", m - 1), (("f_after_g", m - 1), stack)))
        if op == "call_g":
            m = task[1]
            if m == 0:
                return Again((("ret", 0), stack))
            return Again((("call_f", m - 1), (("g_after_f", m - 1), stack)))
        v = task[1]
        if stack is _EMPTY:
            return Done(v)
        frame, below = stack
        tag = frame[0]
        if tag == "f_after_g":
            # v = g(m); still need f(v) + v
            return Again((("call_f", v), (("add", v), below)))
        if tag == "g_after_f":
            m = frame[1]
            if v <= m:
                return Again((("call_g", v), (("add", m), below)))
            return Again((("ret", 0), below))
        # add
        return Again((("ret", v + frame[1]), below))

    return unfold(((entry, n), _EMPTY), machine)


def sloth_strict_f(n: int) -> Delay[int]:
    """Strict sloth f; diverges wherever full evaluation does."""
    return _sloth_strict("call_f", n)


def sloth_strict_g(n: int) -> Delay[int]:
    """Strict sloth g; diverges at 14 where the lazy version answers."""
    return _sloth_strict("call_g", n)

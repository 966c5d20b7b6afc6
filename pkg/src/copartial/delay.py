"""Possibly-nonterminating computations as first-class lazy values.

A ``Delay`` is either a value available now or one observable computation
step followed by another ``Delay``.  All combinators here are productive:
peeling a single constructor always terminates, so a fuel-bounded runner
can observe any ``Delay`` safely.  Deferred computations must be pure;
forcing is memoized, which is unobservable under that assumption.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Generic, Sequence, TypeVar, Union

A = TypeVar("A")
B = TypeVar("B")
S = TypeVar("S")

__all__ = [
    "Delay",
    "Now",
    "Later",
    "Done",
    "Again",
    "Converged",
    "Exhausted",
    "RunResult",
    "now",
    "later",
    "never",
    "delay_by",
    "unfold",
    "bind",
    "fmap",
    "strength",
    "strict_pair",
    "strict_tuple",
    "strict_proj",
    "race",
    "parallel_search",
    "run_for",
]


class Delay(Generic[A]):
    """Base class; concrete values are ``Now`` or ``Later``."""

    __slots__ = ()

    def map(self, f: Callable[[A], B]) -> "Delay[B]":
        return fmap(f, self)

    def bind(self, f: "Callable[[A], Delay[B]]") -> "Delay[B]":
        return bind(f, self)

    def run(self, fuel: int) -> "RunResult[A]":
        return run_for(self, fuel)


class Now(Delay[A]):
    """A computation that already finished with ``value``."""

    __slots__ = ("value",)

    def __init__(self, value: A):
        self.value = value

    def __repr__(self) -> str:
        return f"Now({self.value!r})"


class Later(Delay[A]):
    """One computation step; ``rest()`` forces the next stage."""

    __slots__ = ("_thunk", "_forced")

    def __init__(self, thunk: Callable[[], Delay[A]]):
        self._thunk = thunk
        self._forced: Delay[A] | None = None

    def rest(self) -> Delay[A]:
        if self._forced is None:
            self._forced = self._thunk()
        return self._forced

    def __repr__(self) -> str:
        return "Later(...)"


class _Never(Later[Any]):
    """The canonical diverging computation; its own tail."""

    __slots__ = ()

    def __init__(self):
        Later.__init__(self, lambda: self)

    def rest(self) -> Delay[Any]:
        return self

    def __repr__(self) -> str:
        return "Never"


_NEVER: _Never = _Never()


@dataclass(frozen=True)
class Done(Generic[B]):
    """Unfold step outcome: the computation finishes with ``value``."""

    value: B


@dataclass(frozen=True)
class Again(Generic[S]):
    """Unfold step outcome: take one step and continue from ``state``."""

    state: S


@dataclass(frozen=True)
class Converged(Generic[A]):
    value: A
    steps: int


@dataclass(frozen=True)
class Exhausted(Generic[A]):
    rest: Delay[A]


RunResult = Union[Converged[A], Exhausted[A]]


def now(value: A) -> Delay[A]:
    """Embed a plain value as a zero-step computation."""
    return Now(value)


def later(thunk: Callable[[], Delay[A]]) -> Delay[A]:
    """Prefix one computation step; ``thunk`` must be pure."""
    return Later(thunk)


def never() -> Delay[Any]:
    """The computation that steps forever and has no value."""
    return _NEVER


def delay_by(value: A, steps: int) -> Delay[A]:
    """``value`` behind exactly ``steps`` computation steps."""
    if steps < 0:
        raise ValueError("steps must be non-negative")
    d: Delay[A] = Now(value)
    for _ in range(steps):
        d = Later(lambda d=d: d)
    return d


def unfold(seed: S, step: Callable[[S], Union[Again[S], Done[B]]]) -> Delay[B]:
    """Iterate a pure step function, one observable step per ``Again``.

    ``step`` plays the role of a coalgebra: ``Done(b)`` finishes with
    ``b``, ``Again(s)`` emits a step and continues from ``s``.
    """
    r = step(seed)
    if isinstance(r, Done):
        return Now(r.value)
    return Later(lambda: unfold(r.state, step))


def fmap(f: Callable[[A], B], x: Delay[A]) -> Delay[B]:
    """Apply a pure function under the steps; step count is preserved."""
    if x is _NEVER:
        return _NEVER
    if isinstance(x, Now):
        return Now(f(x.value))
    return Later(lambda: fmap(f, x.rest()))


def bind(f: Callable[[A], Delay[B]], x: Delay[A]) -> Delay[B]:
    """Sequence: run ``x``, then run ``f`` on its value.

    Step counts add; if ``x`` diverges the result diverges.
    """
    if x is _NEVER:
        return _NEVER
    if isinstance(x, Now):
        return f(x.value)
    return Later(lambda: bind(f, x.rest()))


def strength(a: A, y: Delay[B]) -> Delay[tuple[A, B]]:
    """Pair a ready value with a computation, keeping the steps of ``y``."""
    if isinstance(y, Now):
        return Now((a, y.value))
    return Later(lambda: strength(a, y.rest()))


def strict_pair(x: Delay[A], y: Delay[B]) -> Delay[tuple[A, B]]:
    """Move all steps of both components outside the pair.

    Converges iff both components converge; the steps of ``x`` are spent
    first, then the steps of ``y``.
    """
    if isinstance(x, Now):
        return strength(x.value, y)
    return Later(lambda: strict_pair(x.rest(), y))


def strict_tuple(xs: Sequence[Delay[A]]) -> Delay[tuple[A, ...]]:
    """n-ary ``strict_pair``; the empty tuple converges immediately."""
    items = tuple(xs)
    if not items:
        return Now(())

    def go(i: int, acc: tuple, cur: Delay[A]) -> Delay[tuple[A, ...]]:
        if isinstance(cur, Now):
            acc2 = acc + (cur.value,)
            if i + 1 == len(items):
                return Now(acc2)
            return go(i + 1, acc2, items[i + 1])
        return Later(lambda: go(i, acc, cur.rest()))

    return go(0, (), items[0])


def strict_proj(i: int, xs: Sequence[Delay[A]]) -> Delay[A]:
    """1-based projection that is strict in every component.

    Raises ``IndexError`` on a bad index; that is a caller error, distinct
    from the represented nontermination.
    """
    items = tuple(xs)
    if not 1 <= i <= len(items):
        raise IndexError(f"strict_proj index {i} out of range 1..{len(items)}")
    return fmap(lambda t: t[i - 1], strict_tuple(items))


def race(x: Delay[B], y: Delay[B]) -> Delay[B]:
    """First of two computations to converge; left-biased on ties.

    Converges iff either argument converges.  Note that this is the one
    combinator that does not respect weak bisimilarity: if the arguments
    converge to different values the winner depends on step counts.
    Callers (the fixed-point search) must only race compatible arguments.
    """
    if isinstance(x, Now):
        return x
    if isinstance(y, Now):
        return y
    # The canonical never is its own tail, so it can be dropped from the
    # race without changing any observable step.
    if x is _NEVER:
        return y
    if y is _NEVER:
        return x
    return Later(lambda: race(x.rest(), y.rest()))


def parallel_search(f: Callable[[int], Delay[B]]) -> Delay[B]:
    """Dovetail the sequence ``f(0), f(1), ...``; first convergent wins.

    ``f(n)`` joins the race after ``n + 1`` outer steps, so the search
    emits one step per round even when every entrant is still stepping.
    """

    def aux(n: int, x: Delay[B]) -> Delay[B]:
        if isinstance(x, Now):
            return x
        return Later(lambda: aux(n + 1, race(x.rest(), f(n))))

    return aux(0, _NEVER)


def run_for(x: Delay[A], fuel: int) -> RunResult[A]:
    """Peel at most ``fuel`` steps; report the value or the remainder."""
    if fuel < 0:
        raise ValueError("fuel must be non-negative")
    steps = 0
    while True:
        if isinstance(x, Now):
            return Converged(x.value, steps)
        if steps == fuel:
            return Exhausted(x)
        x = x.rest()
        steps += 1

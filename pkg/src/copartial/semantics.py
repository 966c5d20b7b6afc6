"""Fuel-bounded semi-decisions for the undecidable delay predicates.

Convergence, divergence, finiteness, weak bisimilarity, and the
convergence order are undecidable in general, so every checker returns a
three-valued ``Verdict``: ``Holds`` and ``Fails`` are definitive and
monotone in fuel, ``Unknown`` carries no claim beyond the fuel spent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, TypeVar, Union

from .delay import Again, Converged, Delay, Done, run_for

A = TypeVar("A")
S = TypeVar("S")
B = TypeVar("B")

__all__ = [
    "Verdict",
    "HOLDS",
    "FAILS",
    "unknown",
    "converges_to",
    "diverges_bounded",
    "diverges_finite_state",
    "is_finite",
    "bisim",
    "leq",
]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a fuel-bounded semi-decision.

    ``kind`` is one of ``"holds"``, ``"fails"``, ``"unknown"``;
    ``fuel_spent`` is set only for unknown verdicts.
    """

    kind: str
    fuel_spent: Optional[int] = None

    def is_holds(self) -> bool:
        return self.kind == "holds"

    def is_fails(self) -> bool:
        return self.kind == "fails"

    def is_unknown(self) -> bool:
        return self.kind == "unknown"

    def __str__(self) -> str:
        if self.is_unknown():
            return f"Unknown(fuel_spent={self.fuel_spent})"
        return self.kind.capitalize()


HOLDS = Verdict("holds")
FAILS = Verdict("fails")


def unknown(fuel_spent: int) -> Verdict:
    return Verdict("unknown", fuel_spent)


def converges_to(x: Delay[A], a: A, fuel: int) -> Verdict:
    """Does ``x`` reach exactly the value ``a`` within ``fuel`` steps?"""
    r = run_for(x, fuel)
    if isinstance(r, Converged):
        return HOLDS if r.value == a else FAILS
    return unknown(fuel)


def diverges_bounded(x: Delay[A], fuel: int) -> Verdict:
    """Refute divergence by observing convergence; never affirms it.

    Divergence cannot be confirmed by any finite observation, so the
    only definitive answer available here is ``Fails``.
    """
    r = run_for(x, fuel)
    if isinstance(r, Converged):
        return FAILS
    return unknown(fuel)


def diverges_finite_state(
    seed: S,
    step: Callable[[S], Union[Again[S], Done[B]]],
    state_bound: int,
) -> Verdict:
    """Affirm divergence of an unfold by detecting a seed cycle.

    ``Holds`` if iteration revisits a seed before producing a value,
    ``Fails`` if a value is produced, ``Unknown`` once ``state_bound``
    distinct seeds have been seen.  Seeds must be hashable with a
    meaningful equality.
    """
    seen = set()
    s = seed
    while True:
        if s in seen:
            return HOLDS
        if len(seen) >= state_bound:
            return unknown(len(seen))
        seen.add(s)
        r = step(s)
        if isinstance(r, Done):
            return FAILS
        s = r.state


def is_finite(x: Delay[A], fuel: int) -> Verdict:
    """Does ``x`` have a value at all?  Never ``Fails``."""
    r = run_for(x, fuel)
    if isinstance(r, Converged):
        return HOLDS
    return unknown(fuel)


def bisim(x: Delay[A], y: Delay[A], fuel: int) -> Verdict:
    """Weak bisimilarity: same convergence behavior, steps ignored.

    Each side gets the full fuel budget.  If only one side converges
    within fuel the answer is ``Unknown``: ruling the pair apart would
    require a divergence proof for the other side.
    """
    rx = run_for(x, fuel)
    ry = run_for(y, fuel)
    if isinstance(rx, Converged) and isinstance(ry, Converged):
        return HOLDS if rx.value == ry.value else FAILS
    return unknown(fuel)


def leq(x: Delay[A], y: Delay[A], fuel: int) -> Verdict:
    """Convergence order: every value of ``x`` is also a value of ``y``."""
    rx = run_for(x, fuel)
    if not isinstance(rx, Converged):
        return unknown(fuel)
    ry = run_for(y, fuel)
    if isinstance(ry, Converged):
        return HOLDS if rx.value == ry.value else FAILS
    return unknown(fuel)

"""Executable checks of the Kleisli-triple and strength equations.

Laws are checked up to weak bisimilarity over sampled finite delays
(plus, optionally, the diverging element), so a step-miscounting but
value-correct implementation still passes; a value-corrupting one is
reported with a counterexample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .delay import Delay, bind, delay_by, fmap, never, now, strength
from .semantics import FAILS, HOLDS, Verdict, bisim, unknown

__all__ = ["DelayGen", "LawResult", "check_kleisli_laws", "check_strength_laws"]


@dataclass(frozen=True)
class DelayGen:
    """Sampling distribution for test inputs.

    Generates ``delay_by(a, k)`` with ``a`` drawn from ``values`` and
    ``k <= max_delay``, plus the diverging element when enabled.
    """

    values: Sequence[int] = tuple(range(0, 50))
    max_delay: int = 8
    include_never: bool = False

    def sample(self, rng: random.Random) -> Delay[int]:
        if self.include_never and rng.random() < 0.1:
            return never()
        return delay_by(rng.choice(self.values), rng.randint(0, self.max_delay))

    def sample_value(self, rng: random.Random) -> int:
        return rng.choice(self.values)

    def sample_fn(self, rng: random.Random) -> Callable[[int], Delay[int]]:
        """A pure step-padded function on naturals."""
        pad = rng.randint(0, self.max_delay)
        base = rng.choice(
            (
                lambda a: a + 1,
                lambda a: 2 * a,
                lambda a: a * a,
                lambda a: 0,
                lambda a: max(0, a - 3),
            )
        )
        return lambda a: delay_by(base(a), pad)


@dataclass
class LawResult:
    name: str
    verdict: Verdict = HOLDS
    holds: int = 0
    unknown: int = 0
    fails: int = 0
    counterexample: Optional[str] = None

    def record(self, v: Verdict, describe: Callable[[], str]) -> None:
        if v.is_fails():
            self.fails += 1
            if self.counterexample is None:
                self.counterexample = describe()
        elif v.is_holds():
            self.holds += 1
        else:
            self.unknown += 1

    def finish(self, fuel: int) -> "LawResult":
        if self.fails:
            self.verdict = FAILS
        elif self.holds == 0:
            self.verdict = unknown(fuel)
        else:
            self.verdict = HOLDS
        return self


BindImpl = Callable[[Callable[[int], Delay[int]], Delay[int]], Delay[int]]


def check_kleisli_laws(
    gen: DelayGen,
    samples: int,
    fuel: int,
    seed: int = 0,
    bind_impl: BindImpl = bind,
) -> dict[str, LawResult]:
    """Check the three Kleisli-triple equations on sampled inputs.

    ``bind_impl`` exists for mutation testing: substituting a broken
    extension operator must produce a ``Fails`` with a counterexample.
    """
    rng = random.Random(seed)
    right_unit = LawResult("kleisli-right-unit")
    left_unit = LawResult("kleisli-left-unit")
    assoc = LawResult("kleisli-associativity")
    for _ in range(samples):
        x = gen.sample(rng)
        a = gen.sample_value(rng)
        f = gen.sample_fn(rng)
        g = gen.sample_fn(rng)

        right_unit.record(
            bisim(bind_impl(now, x), x, fuel),
            lambda: f"bind(now, x) !~ x for x={_shape(x, fuel)}",
        )
        left_unit.record(
            bisim(bind_impl(f, now(a)), f(a), fuel),
            lambda: f"bind(f, now({a})) !~ f({a})",
        )
        assoc.record(
            bisim(
                bind_impl(g, bind_impl(f, x)),
                bind_impl(lambda v: bind_impl(g, f(v)), x),
                fuel,
            ),
            lambda: f"associativity broken at x={_shape(x, fuel)}",
        )
    return {
        r.name: r.finish(fuel)
        for r in (right_unit, left_unit, assoc)
    }


def check_strength_laws(
    gen: DelayGen,
    samples: int,
    fuel: int,
    seed: int = 0,
) -> dict[str, LawResult]:
    """Check the four strength equations, with multiplication taken as
    ``bind`` of the identity."""
    rng = random.Random(seed)
    unit_left = LawResult("strength-unit-projection")
    assoc = LawResult("strength-associativity")
    unit = LawResult("strength-unit")
    mult = LawResult("strength-multiplication")

    def join(zz: Delay[Delay[int]]) -> Delay[int]:
        return bind(lambda z: z, zz)

    for _ in range(samples):
        y = gen.sample(rng)
        a = gen.sample_value(rng)
        b = gen.sample_value(rng)

        unit_left.record(
            bisim(fmap(lambda p: p[1], strength((), y)), y, fuel),
            lambda: f"projecting strength((), y) !~ y for y={_shape(y, fuel)}",
        )
        assoc.record(
            bisim(
                fmap(lambda p: (p[0][0], (p[0][1], p[1])), strength((a, b), y)),
                strength(a, strength(b, y)),
                fuel,
            ),
            lambda: f"associativity broken at a={a}, b={b}, y={_shape(y, fuel)}",
        )
        unit.record(
            bisim(strength(a, now(b)), now((a, b)), fuel),
            lambda: f"strength({a}, now({b})) !~ now(({a}, {b}))",
        )
        zz = delay_by(y, rng.randint(0, gen.max_delay))
        mult.record(
            bisim(
                strength(a, join(zz)),
                join(fmap(lambda p: strength(p[0], p[1]), strength(a, zz))),
                fuel,
            ),
            lambda: f"multiplication law broken at a={a}, inner={_shape(y, fuel)}",
        )
    return {
        r.name: r.finish(fuel)
        for r in (unit_left, assoc, unit, mult)
    }


def _shape(x: Delay[int], fuel: int) -> str:
    from .delay import Converged, run_for

    r = run_for(x, fuel)
    if isinstance(r, Converged):
        return f"delay_by({r.value}, {r.steps})"
    return f"<no value within {fuel} steps>"

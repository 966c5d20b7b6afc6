#!/usr/bin/env python3
"""Tabulate the sloth pair: lazy observation next to the strict run.

Usage: python scripts/sloth_table.py [--max-n N] [--fuel F]
"""

import argparse

from copartial import Converged, run_for
from copartial.lazy import (
    Ended,
    observe,
    sloth_f,
    sloth_g,
    sloth_strict_f,
    sloth_strict_g,
)


def lazy_cell(x, fuel):
    succs, ended = observe(x, fuel)
    return str(succs) if ended is Ended.ZERO else f">={succs}?"


def strict_cell(d, fuel):
    r = run_for(d, fuel)
    if isinstance(r, Converged):
        return f"{r.value} ({r.steps} steps)"
    return "exhausted"


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=14)
    parser.add_argument("--fuel", type=int, default=1000)
    opts = parser.parse_args()

    print(f"fuel={opts.fuel}; '>=k?' means k successors seen, then fuel ran out")
    print(f"{'n':>3} {'lazy f':>8} {'lazy g':>8} {'strict f':>16} {'strict g':>16}")
    for n in range(opts.max_n + 1):
        print(
            f"{n:>3}"
            f" {lazy_cell(sloth_f(n), opts.fuel):>8}"
            f" {lazy_cell(sloth_g(n), opts.fuel):>8}"
            f" {strict_cell(sloth_strict_f(n), opts.fuel):>16}"
            f" {strict_cell(sloth_strict_g(n), opts.fuel):>16}"
        )


if __name__ == "__main__":
    main()

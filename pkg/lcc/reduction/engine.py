"""
Normalisation driver.

Strategies:
    lo           leftmost-outermost (deterministic; golden traces use it)
    random:SEED  uniform choice among all enabled redexes, seeded
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Optional

from lcc.reduction.models import FuelExhausted, NormalForm, Outcome, RuleSet, Step
from lcc.reduction.rules import iter_redexes
from lcc.syntax import Term, replace_at

logger = logging.getLogger(__name__)

DEFAULT_FUEL = 1000


class UnknownStrategyError(ValueError):
    """Raised for a strategy string other than `lo` or `random:SEED`."""


@dataclass(frozen=True)
class Strategy:
    seed: Optional[int] = None  # None means leftmost-outermost

    @classmethod
    def parse(cls, text: str) -> Strategy:
        text = text.strip().lower()
        if text in ("lo", "leftmost-outermost"):
            return LEFTMOST_OUTERMOST
        name, _, seed = text.partition(":")
        if name == "random" and seed.lstrip("-").isdigit():
            return cls(seed=int(seed))
        raise UnknownStrategyError(f"unknown strategy {text!r}: expected 'lo' or 'random:SEED'")

    @property
    def is_random(self) -> bool:
        return self.seed is not None

    def __str__(self) -> str:
        return "lo" if self.seed is None else f"random:{self.seed}"


LEFTMOST_OUTERMOST = Strategy()


def normalize(
    t: Term,
    rules: RuleSet,
    strategy: Strategy = LEFTMOST_OUTERMOST,
    fuel: int = DEFAULT_FUEL,
) -> Outcome:
    """Reduce `t` until no enabled redex remains or `fuel` steps have been taken."""
    if fuel < 0:
        raise ValueError(f"fuel must be >= 0, got {fuel}")
    rng = random.Random(strategy.seed) if strategy.is_random else None
    trace: list[Step] = []
    current = t
    while True:
        if rng is None:
            chosen = next(iter_redexes(current, rules), None)
        else:
            candidates = list(iter_redexes(current, rules))
            chosen = rng.choice(candidates) if candidates else None
        if chosen is None:
            logger.debug(f"normal form after {len(trace)} steps ({rules.label}, {strategy})")
            return NormalForm(current, tuple(trace))
        if len(trace) >= fuel:
            logger.info(f"fuel exhausted after {fuel} steps ({rules.label}, {strategy})")
            return FuelExhausted(current, tuple(trace))
        redex, contractum = chosen
        current = replace_at(current, redex.position, contractum)
        trace.append(Step(redex, current))

"""Rewrite-step accounting shared by the combing and level-n stages."""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field

DEFAULT_MAX_STEPS = 10**7


class StepLimitExceeded(RuntimeError):
    """Raised when a computation exceeds its rewrite budget."""


def max_steps_from_env() -> int:
    raw = os.environ.get("SBW_MAX_STEPS")
    if not raw:
        return DEFAULT_MAX_STEPS
    try:
        value = int(float(raw))
    except ValueError:
        raise ValueError(f"SBW_MAX_STEPS must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError("SBW_MAX_STEPS must be positive")
    return value


@dataclass
class Budget:
    """Counts work by category and aborts once the total passes ``limit``.

    One step is one letter handled by a rewrite (a conjugation image, a
    Dehn replacement, a sigma absorption).
    """

    limit: int = field(default_factory=max_steps_from_env)
    used: int = 0
    stats: Counter = field(default_factory=Counter)

    def tick(self, category: str, amount: int = 1) -> None:
        self.used += amount
        self.stats[category] += amount
        if self.used > self.limit:
            raise StepLimitExceeded(
                f"rewrite budget of {self.limit} steps exhausted "
                f"(counts so far: {dict(self.stats)}); raise SBW_MAX_STEPS to continue"
            )

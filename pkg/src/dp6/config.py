from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_SOLVER_BOUND = 200


def solver_bound(default: int = DEFAULT_SOLVER_BOUND) -> int:
    """Witness-search cap, overridable through ``DP6_SOLVER_BOUND``."""
    raw = os.environ.get("DP6_SOLVER_BOUND")
    if raw is None or raw.strip() == "":
        return default
    value = int(raw)
    if value <= 0:
        raise ValueError("DP6_SOLVER_BOUND must be positive")
    return value


@dataclass(frozen=True)
class RunOptions:
    solver_bound: int = DEFAULT_SOLVER_BOUND
    random_checks: int = 50
    seed: int = 0

    def __post_init__(self):
        if self.solver_bound <= 0 or self.random_checks <= 0:
            raise ValueError("solver_bound and random_checks must be positive")

"""Vertex-count budgets for the exponential-time solvers."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

BUDGET_ENV = "CHORDAL_POWERS_ORACLE_BUDGET"


class BudgetExceeded(RuntimeError):
    """An exact solver refused an input larger than its configured budget."""


@dataclass(frozen=True)
class OracleBudget:
    """Largest vertex count each oracle accepts."""

    chi: int = 16
    clique: int = 24
    stable: int = 24
    cycles: int = 14
    antihole: int = 12

    def __post_init__(self) -> None:
        for name in ("chi", "clique", "stable", "cycles", "antihole"):
            if getattr(self, name) <= 0:
                raise ValueError(f"budget {name} must be positive")

    def scaled(self, **changes: int) -> "OracleBudget":
        return replace(self, **changes)

    @classmethod
    def from_env(cls) -> "OracleBudget":
        """Defaults, overridden by ``CHORDAL_POWERS_ORACLE_BUDGET``.

        The variable is either a single integer applied to every problem
        class or a comma list such as ``chi=18,cycles=16``.
        """
        raw = os.environ.get(BUDGET_ENV, "").strip()
        if not raw:
            return cls()
        return cls.parse(raw)

    @classmethod
    def parse(cls, raw: str) -> "OracleBudget":
        if raw.isdigit():
            v = int(raw)
            return cls(v, v, v, v, v)
        fields = {}
        for part in raw.split(","):
            key, _, val = part.partition("=")
            key = key.strip()
            if key not in ("chi", "clique", "stable", "cycles", "antihole") or not val.strip().isdigit():
                raise ValueError(f"bad oracle budget entry {part!r}")
            fields[key] = int(val)
        return cls(**fields)

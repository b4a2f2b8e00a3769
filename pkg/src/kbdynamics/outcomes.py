from __future__ import annotations

import enum
from dataclasses import dataclass


class Kind(enum.Enum):
    DIVERGES = "diverges"
    CONVERGES = "converges"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class Behavior:
    """Classification of a graph under iterated KB.

    ``limit`` and ``steps`` are set only for convergent graphs. ``limit`` is
    ``"K1"`` or ``"K3"``; any other fixpoint is reported by its graph6 code so
    that a checker can flag it.
    """

    kind: Kind
    limit: str | None = None
    steps: int | None = None

    def __post_init__(self):
        if (self.kind is Kind.CONVERGES) != (self.limit is not None and self.steps is not None):
            raise ValueError("limit and steps are present iff the graph converges")

    @classmethod
    def diverges(cls) -> "Behavior":
        return cls(Kind.DIVERGES)

    @classmethod
    def converges(cls, limit: str, steps: int) -> "Behavior":
        return cls(Kind.CONVERGES, limit, steps)

    @classmethod
    def indeterminate(cls) -> "Behavior":
        return cls(Kind.INDETERMINATE)

    @property
    def converged(self) -> bool:
        return self.kind is Kind.CONVERGES

    def __str__(self) -> str:
        if self.converged:
            return f"converges limit={self.limit} steps={self.steps}"
        return self.kind.value

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "limit": self.limit, "steps": self.steps}

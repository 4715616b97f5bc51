from __future__ import annotations

import enum
from dataclasses import dataclass


class Verdict(enum.Enum):
    YES = "YES"
    NO = "NO"
    UNKNOWN = "UNKNOWN"

    @property
    def exit_code(self) -> int:
        return {"YES": 0, "NO": 1, "UNKNOWN": 2}[self.value]


@dataclass(frozen=True)
class Result:
    """Outcome of a solver.

    ``mapping[u]`` is the host image of guest vertex ``u`` when the verdict
    is YES. ``reason`` is a short machine-friendly code for NO/UNKNOWN.
    """

    verdict: Verdict
    mapping: tuple[int, ...] | None = None
    reason: str | None = None
    algorithm: str = ""
    nodes: int = 0

    def __bool__(self) -> bool:
        return self.verdict is Verdict.YES

    @classmethod
    def yes(cls, mapping, algorithm="", nodes=0) -> "Result":
        return cls(Verdict.YES, tuple(mapping), None, algorithm, nodes)

    @classmethod
    def no(cls, reason=None, algorithm="", nodes=0) -> "Result":
        return cls(Verdict.NO, None, reason, algorithm, nodes)

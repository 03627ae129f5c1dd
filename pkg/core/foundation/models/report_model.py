from __future__ import annotations

from typing import Any, Optional

from pydantic import Field

from core.foundation.models.strict_mode import StrictModel
from core.foundation.models.trace_model import TraceStep


class InputSummary(StrictModel):
    kind: str = Field(description="'graph' or 'clutter'")
    n: int
    edge_count: int


class LabelingSummary(StrictModel):
    strategy: Optional[str] = Field(description="Strategy that produced the labeling, None for a search result", default=None)
    pairs: list[tuple[int, int]] = Field(description="(original, working) label pairs", default_factory=list)


class PrimeRow(StrictModel):
    T: list[int]
    c: int
    height: int
    generators: str


class RunReport(StrictModel):
    """One command run. Every key is always present so the JSON layout is stable."""
    command: str
    input: InputSummary
    labeling: LabelingSummary = Field(default_factory=LabelingSummary)
    trace: list[TraceStep] = Field(default_factory=list)
    verdicts: dict[str, Any] = Field(default_factory=dict)
    primes: list[PrimeRow] = Field(default_factory=list)
    timing: dict[str, float] = Field(description="Wall-clock seconds per phase", default_factory=dict)
    output: dict[str, Any] = Field(description="Resulting graph/clutter or audit entries", default_factory=dict)

from __future__ import annotations

from enum import Enum
from typing import Optional

from pydantic import Field

from core.foundation.models.graph_model import Edge, Labeling
from core.foundation.models.strict_mode import FrozenModel


class RuleEnum(Enum):
    CLOSE_SHARED_MIN = "CLOSE_SHARED_MIN"
    CLOSE_SHARED_MAX = "CLOSE_SHARED_MAX"
    CLOSE_SPAN = "CLOSE_SPAN"
    CM_COMPOSE = "CM_COMPOSE"


class LabelingStrategyEnum(Enum):
    IDENTITY = "identity"
    BFS = "bfs"
    EXHAUSTIVE_MIN = "exhaustive-min"


class OrderingStatusEnum(Enum):
    FOUND = "FOUND"
    CERTIFIED_NONE = "CERTIFIED_NONE"
    UNKNOWN = "UNKNOWN"


class TraceStep(FrozenModel):
    added_edge: Edge = Field(description="Edge added at this step, (u, v) with u < v")
    rule: RuleEnum = Field(description="Rule instance that forced the addition")
    witnesses: tuple[Edge, ...] = Field(description="The one or two pre-existing edges that forced the addition")


class ConstructionTrace(FrozenModel):
    steps: tuple[TraceStep, ...] = Field(description="Forced edge additions in the order they were made", default=())

    def added_edges(self) -> tuple[Edge, ...]:
        return tuple(step.added_edge for step in self.steps)

    def __len__(self) -> int:
        return len(self.steps)


class OrderingResult(FrozenModel):
    status: OrderingStatusEnum = Field(description="Outcome of the proper interval ordering search")
    labeling: Optional[Labeling] = Field(description="Witness labeling when status is FOUND", default=None)
    explored: int = Field(description="Search nodes visited by the complete search", default=0)

"""
@description: Labeling strategies applied before [G] is constructed. The construction depends on the
             labeling; these strategies trade effort for fewer added edges without any optimality claim.
"""
from __future__ import annotations

from itertools import permutations

from closure.closure_engine import construct_edge_count
from core.foundation.errors import PreconditionError
from core.foundation.models.graph_model import Graph, Labeling
from core.foundation.models.trace_model import LabelingStrategyEnum
from core.utils.log import get_logger
from graph.graph_core import bfs_order

logger = get_logger(__name__)


def exhaustive_min_labeling(graph: Graph, limit: int = 8) -> Labeling:
    """
    Try every labeling and keep the one whose [G] has the fewest edges; ties go to the
    lexicographically first permutation.
    """
    if graph.n > limit:
        raise PreconditionError(f"exhaustive-min labeling is limited to n <= {limit} (got n = {graph.n})")
    best: tuple[int, tuple[int, ...]] | None = None
    for perm in permutations(range(1, graph.n + 1)):
        labeling = Labeling.from_order(perm)
        count = construct_edge_count(labeling.apply(graph))
        if best is None or count < best[0]:
            best = (count, perm)
    logger.info("exhaustive-min: best [G] has %d edges", best[0] if best else 0)
    return Labeling.from_order(best[1]) if best else Labeling.identity(0)


def choose_labeling(graph: Graph, strategy: LabelingStrategyEnum, exhaustive_limit: int = 8) -> Labeling:
    match strategy:
        case LabelingStrategyEnum.IDENTITY:
            return Labeling.identity(graph.n)
        case LabelingStrategyEnum.BFS:
            return Labeling.from_order(bfs_order(graph, 1))
        case LabelingStrategyEnum.EXHAUSTIVE_MIN:
            return exhaustive_min_labeling(graph, exhaustive_limit)
    raise PreconditionError(f"unknown labeling strategy {strategy}")

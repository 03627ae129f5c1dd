"""
@description: Clutters, their associated graph and the clutter construction [C].
             A pair {a, b} is "present" in a clutter when some edge contains it, which is exactly adjacency in the
             associated graph; the graph rules therefore run unchanged on a clutter-aware edge state that records
             every forced pair as a fresh 2-element edge.
"""
from __future__ import annotations

from core.config.settings import DEFAULT_ENUMERATION_CAP
from core.foundation.errors import InvariantViolation
from core.foundation.models.clutter_model import Clutter, ClutterVerdict
from core.foundation.models.graph_model import Graph, Labeling
from core.foundation.models.oracle_model import CMStatusEnum
from core.foundation.models.trace_model import ConstructionTrace, TraceStep
from core.utils.bitsets import VertexSet, bit, from_mask, iter_bits
from core.utils.log import get_logger
from closure.closure_engine import (
    EdgeState,
    is_closed_labeled,
    run_closure,
    run_cm_augment,
)
from graph.graph_core import components
from oracle.ideal_oracle import DEFAULT_PI_BUDGET, cm_status, is_unmixed

logger = get_logger(__name__)


def associated_graph(clutter: Clutter) -> Graph:
    """Graph on the same vertices whose edges are all 2-subsets of clutter edges."""
    adjacency = [0] * (clutter.n + 1)
    for mask in clutter.masks:
        for v in iter_bits(mask):
            adjacency[v] |= mask & ~bit(v)
    return Graph.from_adjacency(clutter.n, adjacency)


def is_closed_clutter(clutter: Clutter) -> bool:
    """Closed under the given labeling, decided on the associated graph."""
    return is_closed_labeled(associated_graph(clutter))


def direct_closed_clutter(clutter: Clutter) -> bool:
    """
    Literal clutter-level definition: whenever {i, j} and {i, l} (i < j, i < l) lie in edges, some edge
    contains {j, l}; whenever {i, j} and {k, j} (i < j, k < j) do, some edge contains {i, k}.
    Agrees with ``is_closed_clutter`` on connected clutters.
    """
    for e1 in clutter.masks:
        for e2 in clutter.masks:
            shared = e1 & e2
            for a in iter_bits(shared):
                higher = (e1 | e2) & ~((bit(a) << 1) - 1)
                lower = (e1 | e2) & (bit(a) - 1)
                for side in (higher, lower):
                    for u in iter_bits(side & e1):
                        for w in iter_bits(side & e2):
                            if u != w and not clutter.contains_pair(u, w):
                                return False
    return True


def clutter_condition_d(clutter: Clutter) -> bool:
    """Whenever {i, j+1} (i < j) and {j, k+1} (j < k) lie in edges, some edge contains {i, k+1}."""
    for e1 in clutter.masks:
        for i in iter_bits(e1):
            for m in iter_bits(e1 & ~((bit(i) << 2) - 1)):
                j = m - 1
                for e2 in clutter.masks:
                    if not e2 & bit(j):
                        continue
                    for p in iter_bits(e2 & ~((bit(j) << 2) - 1)):
                        if not clutter.contains_pair(i, p):
                            return False
    return True


def clutter_components(clutter: Clutter) -> list[VertexSet]:
    """Vertex sets of the connected components; two vertices are adjacent when an edge contains both."""
    return components(associated_graph(clutter))


def is_connected_clutter(clutter: Clutter) -> bool:
    return len(clutter_components(clutter)) == 1


def sub_clutter(clutter: Clutter, vertices: VertexSet) -> tuple[Clutter, Labeling]:
    """Edges inside ``vertices``, relabeled order-preservingly onto 1..|vertices|."""
    labeling = Labeling.from_order(vertices)
    keep = set(vertices)
    inside = Clutter(n=clutter.n, edges=tuple(e for e in clutter.edges if keep.issuperset(e)))
    return inside.relabel(labeling), labeling


class ClutterEdgeState(EdgeState):
    """Edge state over a clutter: adjacency is the associated graph, and each new pair becomes a 2-edge."""

    def __init__(self, clutter: Clutter):
        super().__init__(clutter.n, associated_graph(clutter).adjacency)
        self.clutter_edges: list[int] = list(clutter.masks)

    def add(self, u: int, v: int) -> bool:
        if not super().add(u, v):
            return False
        self.clutter_edges.append(bit(u) | bit(v))
        return True


def _saturate(clutter: Clutter, augment: bool) -> tuple[Clutter, ConstructionTrace]:
    edges = list(clutter.edges)
    steps: list[TraceStep] = []
    for comp in clutter_components(clutter):
        if len(comp) < 3:
            continue
        sub, labeling = sub_clutter(clutter, comp)
        back = labeling.backward()
        state = ClutterEdgeState(sub)
        raw = run_closure(state)
        if augment:
            raw += run_cm_augment(state)
        edges.extend(tuple(back[v] for v in from_mask(m)) for m in state.clutter_edges[len(sub.edges):])
        for added, rule, witnesses in raw:
            lifted = (back[added[0]], back[added[1]])
            steps.append(TraceStep(added_edge=lifted, rule=rule,
                                   witnesses=tuple((back[a], back[b]) for a, b in witnesses)))
            logger.debug("clutter: added 2-edge %s by %s", lifted, rule.value)
    return Clutter(n=clutter.n, edges=tuple(edges)), ConstructionTrace(steps=tuple(steps))


def close_clutter(clutter: Clutter) -> tuple[Clutter, ConstructionTrace]:
    """Closure only: the forced pairs of the closure rules, each added as a 2-element edge."""
    return _saturate(clutter, augment=False)


def construct_clutter(clutter: Clutter) -> tuple[Clutter, ConstructionTrace]:
    """
    Build [C]: close and augment every connected component on its order-preserving relabeling, adding each
    forced pair as a new 2-element edge when no existing edge contains it.
    The associated graph of the result equals construct(associated_graph(C)).
    """
    return _saturate(clutter, augment=True)


def clutter_status(clutter: Clutter, cap: int = DEFAULT_ENUMERATION_CAP,
                   budget: int = DEFAULT_PI_BUDGET) -> list[ClutterVerdict]:
    """
    Per-component verdicts. Closed components report unmixedness, the composition condition and the CM
    status, which must agree; non-closed components report unmixedness only.
    """
    verdicts = []
    for comp in clutter_components(clutter):
        sub, _ = sub_clutter(clutter, comp)
        graph = associated_graph(sub)
        unmixed = is_unmixed(graph, cap)
        if not is_closed_labeled(graph):
            verdicts.append(ClutterVerdict(vertices=comp, closed=False, unmixed=unmixed))
            continue
        condition_d = clutter_condition_d(sub)
        status = cm_status(graph, cap, budget)
        if condition_d != unmixed or (status is CMStatusEnum.CM) != unmixed:
            raise InvariantViolation(f"clutter verdicts disagree on component {comp}")
        verdicts.append(ClutterVerdict(vertices=comp, closed=True, unmixed=unmixed, condition_d=condition_d,
                                       cm_status=status, condition_c="implied"))
    return verdicts

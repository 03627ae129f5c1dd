"""
@description: Closedness under a labeling, the closure fixpoint, the Cohen-Macaulay augmentation [G]
             and the proper interval ordering search.

Closedness here always means the proper interval (PI) condition under the current labels: for every
edge {i, k} with i < k, every j with i < j < k is adjacent to both i and k. The shared-endpoint form
(edges {i, j}, {i, l} force {j, l}; edges {i, j}, {k, j} force {i, k}) is implied by it and agrees with
it on connected graphs.
"""
from __future__ import annotations

import heapq
import random
from collections import deque
from typing import Callable, Iterator, Optional

from core.foundation.errors import InvariantViolation, PreconditionError
from core.foundation.models.graph_model import Edge, Graph, Labeling, normalize_edge
from core.foundation.models.trace_model import (
    ConstructionTrace,
    LabelingStrategyEnum,
    OrderingResult,
    OrderingStatusEnum,
    RuleEnum,
    TraceStep,
)
from core.utils.bitsets import bit, iter_bits
from core.utils.log import get_logger
from graph.graph_core import bfs_order, components, induced_subgraph

logger = get_logger(__name__)

RawStep = tuple[Edge, RuleEnum, tuple[Edge, ...]]


def _below(v: int) -> int:
    """Mask of the vertices 1..v-1."""
    return (1 << (v - 1)) - 1


def _above(v: int) -> int:
    """Mask of the vertices v+1, v+2, ... (unbounded)."""
    return ~((1 << v) - 1)


def _between(i: int, k: int) -> int:
    """Mask of the vertices strictly between i and k (i < k)."""
    return ((1 << (k - 1)) - 1) ^ ((1 << i) - 1)


class EdgeState:
    """Mutable adjacency that forced edges are added to. Vertex v's neighbours are ``adj[v]``."""

    def __init__(self, n: int, adjacency: tuple[int, ...] | list[int]):
        self.n = n
        self.adj = list(adjacency) if adjacency else [0] * (n + 1)

    @classmethod
    def of(cls, graph: Graph) -> EdgeState:
        return cls(graph.n, graph.adjacency)

    def has(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & bit(v))

    def add(self, u: int, v: int) -> bool:
        if self.has(u, v):
            return False
        self.adj[u] |= bit(v)
        self.adj[v] |= bit(u)
        return True

    def edges(self) -> Iterator[Edge]:
        for u in range(1, self.n + 1):
            for v in iter_bits(self.adj[u] & _above(u)):
                yield u, v

    def to_graph(self) -> Graph:
        return Graph.from_adjacency(self.n, self.adj)


def _pi_ok(adj: list[int] | tuple[int, ...], n: int) -> bool:
    for i in range(1, n + 1):
        for k in iter_bits(adj[i] & _above(i)):
            between = _between(i, k)
            if (adj[i] & between) != between or (adj[k] & between) != between:
                return False
    return True


def is_closed_labeled(graph: Graph) -> bool:
    """True iff ``graph`` satisfies the proper interval condition under its own labels."""
    return _pi_ok(graph.adjacency, graph.n)


def satisfies_shared_endpoint_rules(graph: Graph) -> bool:
    """
    The quadratic Groebner basis criterion: all neighbours of a vertex above it are pairwise adjacent,
    and so are all neighbours below it.
    """
    adj = graph.adjacency
    for a in range(1, graph.n + 1):
        for side in (adj[a] & _above(a), adj[a] & _below(a)):
            for b in iter_bits(side):
                rest = side & ~bit(b)
                if adj[b] & rest != rest:
                    return False
    return True


def edge_addition_keeps_closed(graph: Graph, e: Edge) -> bool:
    """
    For a closed graph and a missing edge {i, k}, i < k: the graph plus the edge is closed iff every j
    strictly between i and k is adjacent to both i and k (counting the new edge).
    """
    i, k = normalize_edge(*e)
    if not is_closed_labeled(graph):
        raise PreconditionError("edge_addition_keeps_closed requires a graph closed under its labeling")
    if i == k or not 1 <= i < k <= graph.n:
        raise PreconditionError(f"edge {e} is not a pair of distinct vertices of the graph")
    if graph.has_edge(i, k):
        raise PreconditionError(f"edge {e} is already present")
    between = _between(i, k)
    adj = graph.adjacency
    return (adj[i] & between) == between and (adj[k] & between) == between


# ---------------------------------------------------------------------------
# closure fixpoint
# ---------------------------------------------------------------------------

def _shared_endpoint_consequences(state: EdgeState, a: int, b: int) -> list[RawStep]:
    out: list[RawStep] = []
    for c in iter_bits(state.adj[a] & _above(a) & ~bit(b)):
        if not state.has(b, c):
            out.append((normalize_edge(b, c), RuleEnum.CLOSE_SHARED_MIN, tuple(sorted(((a, b), (a, c))))))
    for c in iter_bits(state.adj[b] & _below(b) & ~bit(a)):
        if not state.has(a, c):
            out.append((normalize_edge(a, c), RuleEnum.CLOSE_SHARED_MAX, tuple(sorted(((a, b), (c, b))))))
    return out


def _span_violations(state: EdgeState) -> Iterator[RawStep]:
    for i, k in state.edges():
        between = _between(i, k)
        missing = between & ~state.adj[i]
        if missing:
            j = (missing & -missing).bit_length()
            yield (i, j), RuleEnum.CLOSE_SPAN, ((i, k),)
            continue
        missing = between & ~state.adj[k]
        if missing:
            j = (missing & -missing).bit_length()
            yield (j, k), RuleEnum.CLOSE_SPAN, ((i, k),)


def run_closure(state: EdgeState, rng: Optional[random.Random] = None) -> list[RawStep]:
    """
    Saturate ``state`` under the shared-endpoint rules; when they are exhausted and a PI violation
    remains (only possible on disconnected graphs), add one spanned edge and saturate again.
    With ``rng`` the worklist and the candidate order are shuffled.
    """
    steps: list[RawStep] = []
    queue: deque[Edge] = deque(state.edges())
    while True:
        while queue:
            if rng is not None:
                idx = rng.randrange(len(queue))
                queue.rotate(-idx)
            a, b = queue.popleft()
            forced = _shared_endpoint_consequences(state, a, b)
            if rng is not None:
                rng.shuffle(forced)
            for added, rule, witnesses in forced:
                if state.add(*added):
                    steps.append((added, rule, witnesses))
                    queue.append(added)
        violations = list(_span_violations(state))
        if not violations:
            return steps
        added, rule, witnesses = rng.choice(violations) if rng is not None else violations[0]
        state.add(*added)
        steps.append((added, rule, witnesses))
        queue.append(added)


def _as_trace(raw: list[RawStep]) -> ConstructionTrace:
    return ConstructionTrace(steps=tuple(TraceStep(added_edge=e, rule=r, witnesses=w) for e, r, w in raw))


def close(graph: Graph, order_seed: Optional[int] = None) -> tuple[Graph, ConstructionTrace]:
    """
    Least supergraph of ``graph`` on the same vertices that is closed under the identity labeling.
    :param order_seed: when given, rule applications are made in a pseudorandom order; the result is the same
    :return: the closed graph and the trace of forced additions
    """
    state = EdgeState.of(graph)
    raw = run_closure(state, random.Random(order_seed) if order_seed is not None else None)
    for added, rule, _ in raw:
        logger.debug("close: added %s by %s", added, rule.value)
    return state.to_graph(), _as_trace(raw)


# ---------------------------------------------------------------------------
# Cohen-Macaulay augmentation
# ---------------------------------------------------------------------------

def _cm_consequences(state: EdgeState, a: int, b: int) -> list[RawStep]:
    """Edges forced by (a, b) in either role of the composition {i, j+1}, {j, k+1} -> {i, k+1}."""
    out: list[RawStep] = []
    if b - a < 2:
        return out
    # (a, b) = {i, j+1}
    j = b - 1
    for p in iter_bits(state.adj[j] & _above(b)):
        if not state.has(a, p):
            out.append(((a, p), RuleEnum.CM_COMPOSE, ((a, b), (j, p))))
    # (a, b) = {j, k+1}
    for i in iter_bits(state.adj[a + 1] & _below(a)):
        if not state.has(i, b):
            out.append(((i, b), RuleEnum.CM_COMPOSE, ((i, a + 1), (a, b))))
    return out


def run_cm_augment(state: EdgeState, rng: Optional[random.Random] = None) -> list[RawStep]:
    """
    Saturate a closed ``state`` under the composition rule.
    The canonical schedule always adds a forced edge of least span (k + 1 - i); every edge that the new one
    needs for closedness is itself forced with a smaller span, so the graph stays closed after every step,
    and that is asserted. A shuffled schedule (``rng``) reaches the same fixpoint without the per-step check.
    """
    steps: list[RawStep] = []
    if rng is None:
        heap: list[tuple[int, Edge, tuple[Edge, ...]]] = []
        for a, b in list(state.edges()):
            for added, _, witnesses in _cm_consequences(state, a, b):
                heapq.heappush(heap, (added[1] - added[0], added, witnesses))
        while heap:
            _, added, witnesses = heapq.heappop(heap)
            if not state.add(*added):
                continue
            steps.append((added, RuleEnum.CM_COMPOSE, witnesses))
            if not _pi_ok(state.adj, state.n):
                raise InvariantViolation(f"graph stopped being closed after adding {added}")
            for new, _, w in _cm_consequences(state, *added):
                heapq.heappush(heap, (new[1] - new[0], new, w))
        return steps

    pending: list[RawStep] = []
    for a, b in list(state.edges()):
        pending.extend(_cm_consequences(state, a, b))
    while pending:
        added, rule, witnesses = pending.pop(rng.randrange(len(pending)))
        if state.add(*added):
            steps.append((added, rule, witnesses))
            pending.extend(_cm_consequences(state, *added))
    return steps


def cm_augment(graph: Graph, order_seed: Optional[int] = None) -> tuple[Graph, ConstructionTrace]:
    """
    Least supergraph of a closed graph satisfying the composition condition: whenever {i, j+1} (i < j) and
    {j, k+1} (j < k) are edges, so is {i, k+1}.
    :raises PreconditionError: the graph is not closed under its labeling
    """
    if not is_closed_labeled(graph):
        raise PreconditionError("cm_augment requires a graph closed under its labeling")
    state = EdgeState.of(graph)
    raw = run_cm_augment(state, random.Random(order_seed) if order_seed is not None else None)
    for added, _, witnesses in raw:
        logger.debug("cm_augment: added %s from %s", added, witnesses)
    return state.to_graph(), _as_trace(raw)


# ---------------------------------------------------------------------------
# construction of [G]
# ---------------------------------------------------------------------------

def _construct_working(graph: Graph) -> tuple[list[Edge], list[RawStep]]:
    """Close and augment every connected component on its own order-preserving relabeling."""
    edges: list[Edge] = list(graph.edges)
    steps: list[RawStep] = []
    for comp in components(graph):
        if len(comp) < 3:
            continue
        sub, sub_labeling = induced_subgraph(graph, comp)
        back = sub_labeling.backward()

        def lift(e: Edge) -> Edge:
            return back[e[0]], back[e[1]]

        state = EdgeState.of(sub)
        local = run_closure(state)
        local += run_cm_augment(state)
        for added, rule, witnesses in local:
            edges.append(lift(added))
            steps.append((lift(added), rule, tuple(lift(w) for w in witnesses)))
    return edges, steps


def construct(graph: Graph, strategy: LabelingStrategyEnum = LabelingStrategyEnum.IDENTITY,
              exhaustive_limit: int = 8) -> tuple[Graph, ConstructionTrace, Labeling]:
    """
    Build [G]: relabel by ``strategy``, then close and augment each connected component.
    :return: [G] in working labels, the trace (working labels, components in order) and the labeling
             original -> working
    """
    from closure.labeling_strategies import choose_labeling

    labeling = choose_labeling(graph, strategy, exhaustive_limit)
    working = labeling.apply(graph)
    edges, raw = _construct_working(working)
    result = Graph(n=graph.n, edges=tuple(edges))
    logger.info("construct: %d edges added under %s labeling", len(raw), strategy.value)
    return result, _as_trace(raw), labeling


def construct_edge_count(graph: Graph) -> int:
    """Edge count of [G] under the graph's own labels, without building a trace."""
    edges, _ = _construct_working(graph)
    return len(edges)


# ---------------------------------------------------------------------------
# proper interval ordering search
# ---------------------------------------------------------------------------

def _is_pi_order(graph: Graph, order: list[int]) -> bool:
    return is_closed_labeled(Labeling.from_order(order).apply(graph))


def lex_bfs(graph: Graph, prefer: Callable[[int], int]) -> list[int]:
    """
    Lexicographic breadth-first ordering; among vertices with equal labels the one with the largest
    ``prefer`` value is taken.
    """
    labels: dict[int, list[int]] = {v: [] for v in range(1, graph.n + 1)}
    unvisited = set(labels)
    order: list[int] = []
    for step in range(graph.n, 0, -1):
        v = max(unvisited, key=lambda u: (labels[u], prefer(u)))
        order.append(v)
        unvisited.discard(v)
        for u in iter_bits(graph.neighbors(v)):
            if u in unvisited:
                labels[u].append(step)
    return order


def _sweep_candidates(graph: Graph, sweeps: int = 4) -> Iterator[list[int]]:
    """Identity, breadth-first and repeated LexBFS+ sweeps (each followed by its reverse)."""
    yield list(range(1, graph.n + 1))
    for start in range(1, graph.n + 1):
        yield bfs_order(graph, start)
    order = lex_bfs(graph, prefer=lambda u: -u)
    for _ in range(sweeps):
        yield order
        yield order[::-1]
        position = {v: idx for idx, v in enumerate(order)}
        order = lex_bfs(graph, prefer=lambda u: position[u])


def _complete_search(graph: Graph, budget: int) -> tuple[Optional[list[int]], bool, int]:
    """
    Depth-first search over orderings of a connected graph, extending a prefix only while it stays a
    PI prefix. Consecutive vertices of a PI ordering of a connected graph are adjacent, so each
    extension is a neighbour of the last placed vertex.
    :return: (ordering or None, finished, nodes visited)
    """
    adj = graph.adjacency
    n = graph.n
    order: list[int] = []
    nodes = 0

    def fits(v: int) -> bool:
        for q, a in enumerate(order):
            if adj[a] & bit(v):
                return all(adj[a] & bit(b) and adj[v] & bit(b) for b in order[q + 1:])
        return True

    def extend(placed: int) -> Optional[bool]:
        nonlocal nodes
        if len(order) == n:
            return True
        pool = adj[order[-1]] & ~placed if order else (1 << n) - 1
        for v in iter_bits(pool):
            nodes += 1
            if nodes > budget:
                return None
            if not fits(v):
                continue
            order.append(v)
            found = extend(placed | bit(v))
            if found is None or found:
                return found
            order.pop()
        return False

    outcome = extend(0)
    if outcome is None:
        return None, False, nodes
    return (list(order) if outcome else None), True, nodes


def find_pi_ordering(graph: Graph, budget: int = 2_000_000) -> OrderingResult:
    """
    Search a labeling under which ``graph`` is closed, one connected component at a time.
    FOUND carries the witness; CERTIFIED_NONE is returned only after the complete search of some
    component finished without a witness; UNKNOWN when the budget ran out first.
    """
    order: list[int] = []
    explored = 0
    unknown = False
    for comp in components(graph):
        sub, sub_labeling = induced_subgraph(graph, comp)
        back = sub_labeling.backward()
        local = next((c for c in _sweep_candidates(sub) if _is_pi_order(sub, c)), None)
        if local is None:
            local, finished, nodes = _complete_search(sub, max(budget - explored, 0))
            explored += nodes
            if local is None and finished:
                logger.info("no proper interval ordering for component %s", comp)
                return OrderingResult(status=OrderingStatusEnum.CERTIFIED_NONE, explored=explored)
            if local is None:
                unknown = True
                continue
        order.extend(back[v] for v in local)
    if unknown:
        return OrderingResult(status=OrderingStatusEnum.UNKNOWN, explored=explored)
    labeling = Labeling.from_order(order)
    if not is_closed_labeled(labeling.apply(graph)):
        raise InvariantViolation("ordering search returned a labeling that is not closed")
    return OrderingResult(status=OrderingStatusEnum.FOUND, labeling=labeling, explored=explored)

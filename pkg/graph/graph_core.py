"""
@description: Canonical graph primitives shared by every other package: order-preserving normalization,
             vertex deletion with label shift, and connectivity / cut-point queries over induced subsets.
             All queries run on adjacency bitsets so they stay cheap inside the 2^n subset scans of the oracle.
"""
from __future__ import annotations

from typing import Iterable

from pydantic import ValidationError

from core.foundation.errors import InputError, PreconditionError
from core.foundation.models.graph_model import Graph, Labeling, normalize_edge
from core.utils.bitsets import VertexSet, bit, from_mask, iter_bits, to_mask
from core.utils.log import get_logger

logger = get_logger(__name__)


def normalize(raw_edges: Iterable[tuple[int, int]], raw_vertices: Iterable[int]) -> tuple[Graph, Labeling]:
    """
    Relabel arbitrary integer vertex identifiers onto 1..n, preserving their order.
    :param raw_edges: pairs of declared vertex identifiers, in any orientation
    :param raw_vertices: distinct vertex identifiers (isolated vertices allowed)
    :return: the normalized graph and the labeling original -> working label
    :raises InputError: loop edge, undeclared vertex or repeated vertex identifier
    """
    vertices = list(raw_vertices)
    if len(set(vertices)) != len(vertices):
        raise InputError("vertex identifiers must be distinct")
    labeling = Labeling.from_order(sorted(vertices))
    fwd = labeling.forward()

    seen: set[tuple[int, int]] = set()
    for u, v in raw_edges:
        if u == v:
            raise InputError(f"loop edge ({u}, {v})")
        if u not in fwd or v not in fwd:
            raise InputError(f"edge ({u}, {v}) references an undeclared vertex")
        edge = normalize_edge(fwd[u], fwd[v])
        if edge in seen:
            logger.warning("duplicate edge (%s, %s) ignored", u, v)
        seen.add(edge)
    try:
        return Graph(n=len(vertices), edges=tuple(seen)), labeling
    except ValidationError as e:
        raise InputError(str(e)) from e


def induced_delete(graph: Graph, m: int) -> Graph:
    """Delete vertex m; labels k > m shift down to k - 1, so the order of the survivors is kept."""
    if not 1 <= m <= graph.n:
        raise PreconditionError(f"vertex {m} outside 1..{graph.n}")

    def shift(x: int) -> int:
        return x - 1 if x > m else x

    edges = tuple((shift(u), shift(v)) for u, v in graph.edges if m not in (u, v))
    return Graph(n=graph.n - 1, edges=edges)


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> tuple[Graph, Labeling]:
    """Induced subgraph relabeled order-preservingly onto 1..|vertices|; the labeling maps old -> new labels."""
    keep = sorted(set(vertices))
    labeling = Labeling.from_order(keep)
    fwd = labeling.forward()
    edges = tuple((fwd[u], fwd[v]) for u, v in graph.edges if u in fwd and v in fwd)
    return Graph(n=len(keep), edges=edges), labeling


def components_mask(adjacency: tuple[int, ...] | list[int], restrict: int) -> list[int]:
    """Connected components of the subgraph induced on ``restrict``, ordered by smallest vertex."""
    out: list[int] = []
    remaining = restrict
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= adjacency[v]
            frontier = reach & restrict & ~comp
            comp |= frontier
        out.append(comp)
        remaining &= ~comp
    return out


def components(graph: Graph, restrict: Iterable[int] | None = None) -> list[VertexSet]:
    """
    Partition ``restrict`` (default: all vertices) into the vertex sets of the connected components
    of the induced subgraph. Isolated vertices are singleton components; the empty set has none.
    """
    mask = graph.vertex_mask if restrict is None else to_mask(restrict)
    if mask & ~graph.vertex_mask:
        raise PreconditionError(f"restriction is not a subset of 1..{graph.n}")
    return [from_mask(c) for c in components_mask(graph.adjacency, mask)]


def is_connected(graph: Graph) -> bool:
    return len(components_mask(graph.adjacency, graph.vertex_mask)) == 1


def is_cut_point_mask(adjacency: tuple[int, ...] | list[int], restrict: int, i: int) -> bool:
    """
    True iff deleting i from the subgraph induced on ``restrict`` increases the component count.
    Vertex i joins exactly the components of restrict - {i} it is adjacent to, so the count grows
    precisely when i touches at least two of them.
    """
    rest = restrict & ~bit(i)
    touched = 0
    for comp in components_mask(adjacency, rest):
        if adjacency[i] & comp:
            touched += 1
            if touched >= 2:
                return True
    return False


def is_cut_point(graph: Graph, restrict: Iterable[int], i: int) -> bool:
    mask = to_mask(restrict)
    if mask & ~graph.vertex_mask:
        raise PreconditionError(f"restriction is not a subset of 1..{graph.n}")
    if not mask & bit(i):
        raise PreconditionError(f"vertex {i} is not in the restriction")
    return is_cut_point_mask(graph.adjacency, mask, i)


def bfs_order(graph: Graph, start: int = 1) -> list[int]:
    """Breadth-first visiting order from ``start``, neighbours in increasing label; other components follow by smallest vertex."""
    order: list[int] = []
    if graph.n == 0:
        return order
    seen = 0
    for root in [start] + list(range(1, graph.n + 1)):
        if seen & bit(root):
            continue
        seen |= bit(root)
        queue = [root]
        while queue:
            v = queue.pop(0)
            order.append(v)
            fresh = graph.neighbors(v) & ~seen
            seen |= fresh
            queue.extend(iter_bits(fresh))
    return order

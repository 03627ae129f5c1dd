"""
@description: Facets (maximal cliques) and free vertices of the clique complex, by Bron-Kerbosch with
             pivoting over adjacency bitsets.
"""
from __future__ import annotations

from core.foundation.models.graph_model import Graph
from core.foundation.models.oracle_model import CliqueComplexSummary
from core.utils.bitsets import bit, from_mask, iter_bits, popcount


def maximal_cliques(graph: Graph) -> list[int]:
    """Maximal cliques as bitmasks. Isolated vertices are singleton cliques."""
    adj = graph.adjacency
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(iter_bits(p | x), key=lambda u: popcount(p & adj[u]))
        for v in iter_bits(p & ~adj[pivot]):
            expand(r | bit(v), p & adj[v], x & adj[v])
            p &= ~bit(v)
            x |= bit(v)

    if graph.n:
        expand(0, graph.vertex_mask, 0)
    return out


def clique_summary(graph: Graph) -> CliqueComplexSummary:
    facets = sorted(from_mask(m) for m in maximal_cliques(graph))
    counts = [0] * (graph.n + 1)
    for facet in facets:
        for v in facet:
            counts[v] += 1
    free = tuple(v for v in range(1, graph.n + 1) if counts[v] == 1)
    return CliqueComplexSummary(facets=tuple(facets), free_vertices=free)

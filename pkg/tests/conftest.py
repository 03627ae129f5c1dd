from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

import networkx as nx
import pytest

from core.foundation.models.clutter_model import Clutter
from core.foundation.models.graph_model import Graph
from graph.graph_core import is_connected

SEVEN_VERTEX_EDGES = ((1, 2), (1, 3), (2, 4), (3, 4), (4, 5), (4, 6), (5, 6), (6, 7))
SEVEN_VERTEX_CM_EDGES = SEVEN_VERTEX_EDGES + ((1, 4), (2, 3))


def all_pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(1, n + 1), 2))


def all_graphs(n: int) -> Iterator[Graph]:
    pairs = all_pairs(n)
    for mask in range(1 << len(pairs)):
        yield Graph(n=n, edges=tuple(p for k, p in enumerate(pairs) if mask >> k & 1))


def connected_graphs(n: int) -> Iterator[Graph]:
    return (g for g in all_graphs(n) if is_connected(g))


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    return Graph(n=n, edges=tuple(e for e in all_pairs(n) if rng.random() < p))


def random_connected_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if is_connected(g):
            return g


def random_clutter(rng: random.Random, n: int, max_edges: int = 6) -> Clutter:
    """Random antichain of edges of size 2..4: candidate edges that would break the antichain are skipped."""
    edges: list[frozenset[int]] = []
    for _ in range(rng.randint(1, max_edges)):
        size = rng.randint(2, min(4, n))
        e = frozenset(rng.sample(range(1, n + 1), size))
        if any(e <= f or f <= e for f in edges):
            continue
        edges.append(e)
    return Clutter(n=n, edges=tuple(tuple(sorted(e)) for e in edges))


def to_nx(graph: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(1, graph.n + 1))
    g.add_edges_from(graph.edges)
    return g


@pytest.fixture
def seven_vertex() -> Graph:
    return Graph(n=7, edges=SEVEN_VERTEX_EDGES)


@pytest.fixture
def seven_vertex_cm() -> Graph:
    return Graph(n=7, edges=SEVEN_VERTEX_CM_EDGES)


@pytest.fixture
def p3() -> Graph:
    return Graph(n=3, edges=((1, 2), (2, 3)))


@pytest.fixture
def claw() -> Graph:
    """Star with centre 1."""
    return Graph(n=4, edges=((1, 2), (1, 3), (1, 4)))


@pytest.fixture
def claw_centre_2() -> Graph:
    return Graph(n=4, edges=((1, 2), (2, 3), (2, 4)))


@pytest.fixture
def c4() -> Graph:
    return Graph(n=4, edges=((1, 2), (2, 3), (3, 4), (1, 4)))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240917)

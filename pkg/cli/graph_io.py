"""
@description: Text formats for graphs and clutters.

    graph <n>            clutter <n>
    u v                  v1 v2 ... vk
    ...                  ...

Vertices are 1..n, ``#`` starts a comment, blank lines are ignored.
"""
from __future__ import annotations

from pydantic import ValidationError

from core.foundation.errors import InputError
from core.foundation.models.clutter_model import Clutter
from core.foundation.models.graph_model import Graph, Labeling
from core.utils.log import get_logger
from graph.graph_core import normalize

logger = get_logger(__name__)


def _lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split("#", 1)[0].split()
        if tokens:
            out.append((number, tokens))
    return out


def _header(lines: list[tuple[int, list[str]]], keyword: str) -> int:
    if not lines:
        raise InputError(f"empty input: expected a '{keyword} <n>' header")
    number, tokens = lines[0]
    if len(tokens) != 2 or tokens[0] != keyword or not tokens[1].isdecimal():
        raise InputError(f"line {number}: malformed header, expected '{keyword} <n>'")
    n = int(tokens[1])
    if n < 1:
        raise InputError(f"line {number}: vertex count must be positive, got {n}")
    return n


def _vertices(number: int, tokens: list[str], n: int) -> list[int]:
    try:
        vertices = [int(t) for t in tokens]
    except ValueError:
        raise InputError(f"line {number}: vertices must be integers") from None
    for v in vertices:
        if not 1 <= v <= n:
            raise InputError(f"line {number}: vertex {v} out of range 1..{n}")
    return vertices


def parse_graph(text: str) -> tuple[Graph, Labeling]:
    """
    Parse the graph format. Duplicate edges are logged and dropped.
    :raises InputError: malformed header or edge line, vertex out of range, loop
    """
    lines = _lines(text)
    n = _header(lines, "graph")
    edges = []
    for number, tokens in lines[1:]:
        if len(tokens) != 2:
            raise InputError(f"line {number}: expected 'u v'")
        u, v = _vertices(number, tokens, n)
        if u == v:
            raise InputError(f"line {number}: loop edge ({u}, {v})")
        edges.append((u, v))
    return normalize(edges, range(1, n + 1))


def parse_clutter(text: str) -> Clutter:
    """
    Parse the clutter format. Repeated edges are logged and dropped.
    :raises InputError: malformed header, edge with fewer than two distinct vertices, vertex out of range,
                        an edge contained in another
    """
    lines = _lines(text)
    n = _header(lines, "clutter")
    edges: list[tuple[int, ...]] = []
    for number, tokens in lines[1:]:
        vertices = _vertices(number, tokens, n)
        if len(set(vertices)) != len(vertices):
            raise InputError(f"line {number}: repeated vertex in clutter edge")
        if len(vertices) < 2:
            raise InputError(f"line {number}: clutter edges need at least two vertices")
        edge = tuple(sorted(vertices))
        if edge in edges:
            logger.warning("duplicate clutter edge %s ignored", list(edge))
            continue
        edges.append(edge)
    try:
        return Clutter(n=n, edges=tuple(edges))
    except ValidationError as e:
        raise InputError(e.errors()[0]["msg"]) from e


def serialize_graph(graph: Graph) -> str:
    return "".join([f"graph {graph.n}\n"] + [f"{u} {v}\n" for u, v in graph.edges])


def serialize_clutter(clutter: Clutter) -> str:
    return "".join([f"clutter {clutter.n}\n"] + [" ".join(map(str, e)) + "\n" for e in clutter.edges])

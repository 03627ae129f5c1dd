from __future__ import annotations

from typing import Iterable

from pydantic import Field, PrivateAttr, field_validator, model_validator

from core.foundation.models.strict_mode import FrozenModel
from core.utils.bitsets import bit, full_mask, iter_bits

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph(FrozenModel):
    """
    Labeled simple graph on the vertex set {1, ..., n}.
    Edges are stored normalized (u < v), sorted and deduplicated. Per-vertex adjacency
    bitsets are computed once at validation time so induced-subset queries are mask operations.
    """
    n: int = Field(description="Number of vertices; labels are exactly 1..n", ge=0)
    edges: tuple[Edge, ...] = Field(description="Sorted edge list, each pair (u, v) with u < v", default=())

    _adjacency: tuple[int, ...] = PrivateAttr(default=())

    @field_validator("edges", mode="before")
    @classmethod
    def sort_edges(cls, v):
        if isinstance(v, (list, tuple, set, frozenset)):
            return tuple(sorted({normalize_edge(int(a), int(b)) for a, b in v}))
        return v

    @model_validator(mode="after")
    def check_edges(self) -> Graph:
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop edge ({u}, {v})")
            if u < 1 or v > self.n:
                raise ValueError(f"edge ({u}, {v}) references a vertex outside 1..{self.n}")
        return self

    def model_post_init(self, __context) -> None:
        adjacency = [0] * (self.n + 1)
        for u, v in self.edges:
            adjacency[u] |= bit(v)
            adjacency[v] |= bit(u)
        self._adjacency = tuple(adjacency)

    @classmethod
    def from_adjacency(cls, n: int, adjacency: list[int]) -> Graph:
        edges = [(u, v) for u in range(1, n + 1) for v in iter_bits(adjacency[u]) if u < v]
        return cls(n=n, edges=tuple(edges))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n=n, edges=tuple((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)))

    @property
    def adjacency(self) -> tuple[int, ...]:
        """Index v holds the neighbour bitmask of vertex v; index 0 is unused."""
        return self._adjacency

    @property
    def vertex_mask(self) -> int:
        return full_mask(self.n)

    def neighbors(self, v: int) -> int:
        return self._adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adjacency[u] & bit(v))

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def number_of_edges(self) -> int:
        return len(self.edges)


class Labeling(FrozenModel):
    """
    Bijection from original vertex identifiers to working labels 1..n.
    Stored as (original, working) pairs sorted by original identifier.
    """
    pairs: tuple[tuple[int, int], ...] = Field(description="(original identifier, working label) pairs")

    @field_validator("pairs", mode="before")
    @classmethod
    def sort_pairs(cls, v):
        if isinstance(v, dict):
            v = v.items()
        return tuple(sorted((int(a), int(b)) for a, b in v))

    @model_validator(mode="after")
    def check_bijection(self) -> Labeling:
        originals = [a for a, _ in self.pairs]
        working = sorted(b for _, b in self.pairs)
        if len(set(originals)) != len(originals):
            raise ValueError("labeling maps one original identifier twice")
        if working != list(range(1, len(self.pairs) + 1)):
            raise ValueError("working labels must be exactly 1..n")
        return self

    @classmethod
    def identity(cls, n: int) -> Labeling:
        return cls(pairs=tuple((v, v) for v in range(1, n + 1)))

    @classmethod
    def from_order(cls, order: Iterable[int]) -> Labeling:
        """``order[k]`` is the original vertex receiving working label k+1."""
        return cls(pairs=tuple((v, k + 1) for k, v in enumerate(order)))

    def forward(self) -> dict[int, int]:
        return dict(self.pairs)

    def backward(self) -> dict[int, int]:
        return {b: a for a, b in self.pairs}

    def to_working(self, original: int) -> int:
        return self.forward()[original]

    def to_original(self, label: int) -> int:
        return self.backward()[label]

    def inverse(self) -> Labeling:
        return Labeling(pairs=tuple((b, a) for a, b in self.pairs))

    def is_identity(self) -> bool:
        return all(a == b for a, b in self.pairs)

    def apply(self, graph: Graph) -> Graph:
        """Relabel ``graph`` (whose labels are the original identifiers) into working labels."""
        fwd = self.forward()
        return Graph(n=graph.n, edges=tuple(normalize_edge(fwd[u], fwd[v]) for u, v in graph.edges))

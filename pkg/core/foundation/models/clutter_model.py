from __future__ import annotations

from typing import Optional

from pydantic import Field, PrivateAttr, field_validator, model_validator

from core.foundation.models.graph_model import Labeling
from core.foundation.models.oracle_model import CMStatusEnum
from core.foundation.models.strict_mode import FrozenModel
from core.utils.bitsets import VertexSet, to_mask


class Clutter(FrozenModel):
    """
    Hypergraph on {1, ..., n} whose edges form an antichain under inclusion.
    Edges are sorted vertex tuples of size >= 2, kept in sorted order.
    """
    n: int = Field(description="Number of vertices; labels are exactly 1..n", ge=0)
    edges: tuple[VertexSet, ...] = Field(description="Sorted edges, each a sorted tuple of at least two vertices", default=())

    _masks: tuple[int, ...] = PrivateAttr(default=())

    @field_validator("edges", mode="before")
    @classmethod
    def sort_edges(cls, v):
        if isinstance(v, (list, tuple, set, frozenset)):
            return tuple(sorted({tuple(sorted(set(int(x) for x in e))) for e in v}))
        return v

    @model_validator(mode="after")
    def check_edges(self) -> Clutter:
        for e in self.edges:
            if len(e) < 2:
                raise ValueError(f"clutter edge {list(e)} has fewer than two vertices")
            if e[0] < 1 or e[-1] > self.n:
                raise ValueError(f"clutter edge {list(e)} references a vertex outside 1..{self.n}")
        masks = [to_mask(e) for e in self.edges]
        for a, ma in enumerate(masks):
            for b, mb in enumerate(masks):
                if a != b and ma & mb == ma:
                    raise ValueError(f"clutter edge {list(self.edges[a])} is contained in {list(self.edges[b])}")
        return self

    def model_post_init(self, __context) -> None:
        self._masks = tuple(to_mask(e) for e in self.edges)

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    def contains_pair(self, u: int, v: int) -> bool:
        pair = (1 << (u - 1)) | (1 << (v - 1))
        return any(m & pair == pair for m in self._masks)

    def relabel(self, labeling: Labeling) -> Clutter:
        """Clutter on the working labels of ``labeling``; every vertex of every edge must be mapped."""
        fwd = labeling.forward()
        return Clutter(n=len(fwd), edges=tuple(tuple(fwd[v] for v in e) for e in self.edges))


class ClutterVerdict(FrozenModel):
    """Verdicts for one connected component of a clutter, on its order-preserving relabeling."""
    vertices: VertexSet
    closed: bool = Field(description="Closed under the inherited labeling")
    unmixed: bool
    condition_d: Optional[bool] = Field(description="Clutter-level composition condition; closed components only", default=None)
    cm_status: Optional[CMStatusEnum] = Field(description="Closed components only", default=None)
    condition_c: Optional[str] = Field(description="Initial-ideal condition, implied by the others", default=None)

from __future__ import annotations

from enum import Enum
from typing import Optional

from pydantic import Field

from core.foundation.models.strict_mode import FrozenModel
from core.utils.bitsets import VertexSet


class CMStatusEnum(Enum):
    CM = "CM"
    NOT_CM = "NOT_CM"
    UNKNOWN = "UNKNOWN"


class CutSetRecord(FrozenModel):
    T: VertexSet = Field(description="The vertex set T, sorted")
    components: tuple[VertexSet, ...] = Field(description="Connected components of the induced subgraph on the complement of T")
    c: int = Field(description="Number of components c(T)")
    height: int = Field(description="Height of P_T, n + |T| - c(T)")
    in_cutset_family: bool = Field(description="True when every i in T is a cut point of G restricted to the complement of T plus i")


class MinimalPrime(FrozenModel):
    record: CutSetRecord
    variables: VertexSet = Field(description="Indices i whose x_i, y_i generate part of P_T")
    binomial_blocks: tuple[VertexSet, ...] = Field(description="Components of size >= 2; each contributes all f_kl with k < l inside it")
    generators_description: str = Field(description="Textual listing of the generators of P_T(G)")


class CliqueComplexSummary(FrozenModel):
    facets: tuple[VertexSet, ...] = Field(description="Maximal cliques, sorted")
    free_vertices: VertexSet = Field(description="Vertices lying in exactly one facet")

    def facet_of(self, v: int) -> Optional[VertexSet]:
        """The unique facet containing a free vertex, None otherwise."""
        if v not in self.free_vertices:
            return None
        return next(f for f in self.facets if v in f)


class AuditEntry(FrozenModel):
    vertex: int
    deleted_graph_closed: bool = Field(description="G minus v is closed under the inherited labeling")
    deleted_connected: bool
    deleted_unmixed: bool
    deleted_cm: CMStatusEnum
    v_free: bool = Field(description="v is a free vertex of the clique complex of G")
    facet_condition: bool = Field(description="v free and F minus v is contained in no T of C(G) with |T| != 1")


class AuditReport(FrozenModel):
    entries: tuple[AuditEntry, ...] = Field(description="One entry per vertex, in vertex order")

    def entry(self, v: int) -> AuditEntry:
        return self.entries[v - 1]


class ComponentVerdict(FrozenModel):
    """Verdicts for one connected component, computed on its order-preserving relabeling."""
    vertices: VertexSet
    closed: bool
    unmixed: bool
    condition_iv: bool
    cm_status: CMStatusEnum
    condition_iii: str = Field(default="equivalent, not computed")

"""
@description: Brute-force ground truth for binomial edge ideals. Enumerates the cut-point sets C(G),
             materializes the minimal primes P_T(G) with their heights, decides unmixedness and, for closed
             graphs, Cohen-Macaulayness through the combinatorial edge criterion.
             No polynomial arithmetic happens here; generators are described as text only.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from core.config.settings import DEFAULT_ENUMERATION_CAP
from core.foundation.errors import EnumerationCapError, InvariantViolation, PreconditionError
from core.foundation.models.graph_model import Graph
from core.foundation.models.oracle_model import (
    AuditEntry,
    AuditReport,
    CMStatusEnum,
    ComponentVerdict,
    CutSetRecord,
    MinimalPrime,
)
from core.foundation.models.trace_model import OrderingStatusEnum
from core.utils.bitsets import bit, from_mask, full_mask, iter_bits, popcount, to_mask
from core.utils.log import get_logger
from closure.closure_engine import find_pi_ordering, is_closed_labeled
from graph.graph_core import components, components_mask, induced_delete, induced_subgraph, is_connected, is_cut_point
from oracle.clique_complex import clique_summary

logger = get_logger(__name__)

DEFAULT_PI_BUDGET = 2_000_000


def _scan_range(n: int, adjacency: tuple[int, ...], start: int, stop: int) -> list[tuple[int, list[int]]]:
    """Members T of C(G) with start <= T < stop, each with the components of its complement."""
    full = full_mask(n)
    found: list[tuple[int, list[int]]] = []
    for t in range(start, stop):
        rest = full & ~t
        if not rest:
            continue
        # a cut point of G[rest + i] needs neighbours in two different components of G[rest]
        if any(popcount(adjacency[i] & rest) < 2 for i in iter_bits(t)):
            continue
        comps = components_mask(adjacency, rest)
        ok = True
        for i in iter_bits(t):
            touched = 0
            for comp in comps:
                if adjacency[i] & comp:
                    touched += 1
                    if touched == 2:
                        break
            if touched < 2:
                ok = False
                break
        if ok:
            found.append((t, comps))
    return found


def _record(n: int, t: int, comps: list[int], member: bool) -> CutSetRecord:
    T = from_mask(t)
    return CutSetRecord(
        T=T,
        components=tuple(from_mask(c) for c in comps),
        c=len(comps),
        height=n + len(T) - len(comps),
        in_cutset_family=member,
    )


def _check_cap(graph: Graph, cap: int) -> None:
    if graph.n > cap:
        logger.warning("enumeration refused: n = %d exceeds cap %d", graph.n, cap)
        raise EnumerationCapError(graph.n, cap)


def cut_point_sets(graph: Graph, cap: int = DEFAULT_ENUMERATION_CAP, workers: int = 1) -> list[CutSetRecord]:
    """
    Every T with nonempty complement that has the cut point property, sorted by |T| then lexicographically.
    The empty set is always a member.
    :param workers: split the subset range into contiguous slices scanned by worker processes
    :raises EnumerationCapError: n exceeds ``cap``
    """
    _check_cap(graph, cap)
    total = 1 << graph.n
    if workers <= 1 or graph.n < 12:
        raw = _scan_range(graph.n, graph.adjacency, 0, total)
    else:
        step = -(-total // workers)
        bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_scan_range, [graph.n] * len(bounds), [graph.adjacency] * len(bounds),
                             [b[0] for b in bounds], [b[1] for b in bounds])
            raw = [item for part in parts for item in part]
    records = [_record(graph.n, t, comps, True) for t, comps in raw]
    records.sort(key=lambda r: (len(r.T), r.T))
    return records


def has_cut_point_property(graph: Graph, T: tuple[int, ...] | list[int]) -> bool:
    """Literal definition: each i in T is a cut point of the subgraph induced on the complement of T plus i."""
    rest = [v for v in range(1, graph.n + 1) if v not in set(T)]
    return all(is_cut_point(graph, rest + [i], i) for i in T)


def cut_set_record(graph: Graph, T: tuple[int, ...] | list[int]) -> CutSetRecord:
    """Record for an arbitrary T (member of C(G) or not), computed through the literal predicate."""
    t = to_mask(T)
    if t & ~graph.vertex_mask or t == graph.vertex_mask:
        raise PreconditionError("T must be a proper subset of the vertex set")
    comps = components_mask(graph.adjacency, graph.vertex_mask & ~t)
    return _record(graph.n, t, comps, has_cut_point_property(graph, from_mask(t)))


def _describe(record: CutSetRecord) -> tuple[tuple[int, ...], str]:
    blocks = tuple(c for c in record.components if len(c) >= 2)
    parts = [f"x_{i}, y_{i}" for i in record.T]
    for block in blocks:
        parts.extend(f"f_{{{k},{l}}}" for idx, k in enumerate(block) for l in block[idx + 1:])
    return blocks, "<" + (", ".join(parts) if parts else "0") + ">"


def minimal_primes(graph: Graph, cap: int = DEFAULT_ENUMERATION_CAP, workers: int = 1) -> list[MinimalPrime]:
    """One minimal prime P_T(G) per T in C(G), height n + |T| - c(T)."""
    primes = []
    for record in cut_point_sets(graph, cap, workers):
        blocks, text = _describe(record)
        primes.append(MinimalPrime(record=record, variables=record.T, binomial_blocks=blocks,
                                   generators_description=text))
    return primes


def _require_connected(graph: Graph, what: str) -> None:
    if not is_connected(graph):
        raise PreconditionError(f"{what} requires a connected graph; split it into components first")


def is_unmixed(graph: Graph, cap: int = DEFAULT_ENUMERATION_CAP, workers: int = 1) -> bool:
    """
    For connected G: every T in C(G) has c(T) = |T| + 1. Cross-checked against the height form
    (all minimal primes of height n - 1).
    """
    _require_connected(graph, "is_unmixed")
    records = cut_point_sets(graph, cap, workers)
    by_count = all(r.c == len(r.T) + 1 for r in records)
    by_height = all(r.height == graph.n - 1 for r in records)
    if by_count != by_height:
        raise InvariantViolation("component-count and height forms of unmixedness disagree")
    return by_count


def is_unmixed_by_height(graph: Graph, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    """All minimal primes share one height; valid for disconnected graphs too."""
    heights = {r.height for r in cut_point_sets(graph, cap)}
    return len(heights) <= 1


def satisfies_condition_iv(graph: Graph) -> bool:
    """Whenever {i, j+1} (i < j) and {j, k+1} (j < k) are edges, {i, k+1} is an edge."""
    for i, m in graph.edges:
        if m - i < 2:
            continue
        j = m - 1
        for p in iter_bits(graph.neighbors(j)):
            if p >= j + 2 and not graph.has_edge(i, p):
                return False
    return True


def cm_status(graph: Graph, cap: int = DEFAULT_ENUMERATION_CAP, budget: int = DEFAULT_PI_BUDGET,
              workers: int = 1) -> CMStatusEnum:
    """
    NOT_CM when not unmixed. Otherwise CM when a PI ordering exists, after checking that the edge
    condition under that ordering agrees with unmixedness; UNKNOWN when no ordering is available.
    """
    _require_connected(graph, "cm_status")
    unmixed = is_unmixed(graph, cap, workers)
    ordering = find_pi_ordering(graph, budget)
    if ordering.status is OrderingStatusEnum.FOUND:
        iv = satisfies_condition_iv(ordering.labeling.apply(graph))
        if iv != unmixed:
            raise InvariantViolation("edge condition and unmixedness disagree on a closed graph")
        return CMStatusEnum.CM if unmixed else CMStatusEnum.NOT_CM
    return CMStatusEnum.UNKNOWN if unmixed else CMStatusEnum.NOT_CM


def component_verdicts(graph: Graph, cap: int = DEFAULT_ENUMERATION_CAP, budget: int = DEFAULT_PI_BUDGET,
                       workers: int = 1) -> list[ComponentVerdict]:
    """Verdicts per connected component, each on its order-preserving relabeling."""
    verdicts = []
    for comp in components(graph):
        sub, _ = induced_subgraph(graph, comp)
        verdicts.append(ComponentVerdict(
            vertices=comp,
            closed=is_closed_labeled(sub),
            unmixed=is_unmixed(sub, cap, workers),
            condition_iv=satisfies_condition_iv(sub),
            cm_status=cm_status(sub, cap, budget, workers),
        ))
    return verdicts


def combined_cm_status(graph: Graph, cap: int = DEFAULT_ENUMERATION_CAP, budget: int = DEFAULT_PI_BUDGET) -> CMStatusEnum:
    """CM iff every component is CM; NOT_CM as soon as one component is not."""
    statuses = [v.cm_status for v in component_verdicts(graph, cap, budget)]
    if CMStatusEnum.NOT_CM in statuses:
        return CMStatusEnum.NOT_CM
    if CMStatusEnum.UNKNOWN in statuses:
        return CMStatusEnum.UNKNOWN
    return CMStatusEnum.CM


def facet_condition(graph: Graph, v: int, family: list[CutSetRecord], skip_singletons: bool = True) -> bool:
    """
    v is free with facet F and F - {v} is contained in no T of ``family``
    (T with |T| = 1 ignored when ``skip_singletons``).
    """
    facet = clique_summary(graph).facet_of(v)
    if facet is None:
        return False
    rest = to_mask(facet) & ~bit(v)
    for record in family:
        if skip_singletons and len(record.T) == 1:
            continue
        if rest & ~to_mask(record.T) == 0:
            return False
    return True


def audit_subgraphs(graph: Graph, cap: int = DEFAULT_ENUMERATION_CAP, budget: int = DEFAULT_PI_BUDGET) -> AuditReport:
    """Closedness, unmixedness and CM status of every single-vertex deletion, with the freeness data of v."""
    _require_connected(graph, "audit_subgraphs")
    family = cut_point_sets(graph, cap)
    summary = clique_summary(graph)
    entries = []
    for v in range(1, graph.n + 1):
        deleted = induced_delete(graph, v)
        if deleted.n == 0:
            unmixed, cm, connected = True, CMStatusEnum.CM, False
        else:
            connected = is_connected(deleted)
            unmixed = is_unmixed_by_height(deleted, cap)
            cm = combined_cm_status(deleted, cap, budget)
        entries.append(AuditEntry(
            vertex=v,
            deleted_graph_closed=is_closed_labeled(deleted),
            deleted_connected=connected,
            deleted_unmixed=unmixed,
            deleted_cm=cm,
            v_free=v in summary.free_vertices,
            facet_condition=facet_condition(graph, v, family),
        ))
        logger.debug("audit: vertex %d -> %s", v, entries[-1].deleted_cm.value)
    return AuditReport(entries=tuple(entries))


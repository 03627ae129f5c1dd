from __future__ import annotations

from itertools import permutations

import pytest

from closure.closure_engine import (
    close,
    cm_augment,
    construct,
    construct_edge_count,
    edge_addition_keeps_closed,
    find_pi_ordering,
    is_closed_labeled,
    satisfies_shared_endpoint_rules,
)
from closure.labeling_strategies import choose_labeling, exhaustive_min_labeling
from core.foundation.errors import PreconditionError
from core.foundation.models.graph_model import Graph, Labeling
from core.foundation.models.trace_model import LabelingStrategyEnum, OrderingStatusEnum, RuleEnum
from graph.graph_core import components, induced_subgraph
from oracle.ideal_oracle import satisfies_condition_iv
from tests.conftest import SEVEN_VERTEX_CM_EDGES, all_graphs, all_pairs, random_connected_graph, random_graph


def test_close_adds_the_shared_minimum_edge(seven_vertex):
    closed, trace = close(seven_vertex)
    assert trace.added_edges() == ((2, 3),)
    assert trace.steps[0].rule is RuleEnum.CLOSE_SHARED_MIN
    assert trace.steps[0].witnesses == ((1, 2), (1, 3))
    assert is_closed_labeled(closed)


def test_cm_augment_adds_the_composed_edge(seven_vertex):
    closed, _ = close(seven_vertex)
    augmented, trace = cm_augment(closed)
    assert trace.added_edges() == ((1, 4),)
    assert trace.steps[0].rule is RuleEnum.CM_COMPOSE
    assert trace.steps[0].witnesses == ((1, 3), (2, 4))
    assert augmented.edge_set() == frozenset(SEVEN_VERTEX_CM_EDGES)
    assert satisfies_condition_iv(augmented)


def test_construct_reproduces_the_seven_vertex_example(seven_vertex):
    result, trace, labeling = construct(seven_vertex)
    assert labeling.is_identity()
    assert result.number_of_edges() == 10
    assert result.edge_set() == frozenset(SEVEN_VERTEX_CM_EDGES)
    assert [s.rule for s in trace.steps] == [RuleEnum.CLOSE_SHARED_MIN, RuleEnum.CM_COMPOSE]


def test_claw_with_centre_one_closes_to_k4(claw):
    closed, trace = close(claw)
    assert closed == Graph.complete(4)
    assert set(trace.added_edges()) == {(2, 3), (2, 4), (3, 4)}


def test_claw_with_centre_two_closes_to_paw(claw_centre_2):
    closed, trace = close(claw_centre_2)
    assert trace.added_edges() == ((3, 4),)
    assert closed.edge_set() == {(1, 2), (2, 3), (2, 4), (3, 4)}
    augmented, more = cm_augment(closed)
    assert len(more) == 0
    assert augmented == closed


def test_complete_graph_and_path_are_already_closed(p3):
    for graph in (Graph.complete(5), p3, Graph(n=1), Graph(n=0)):
        closed, trace = close(graph)
        assert closed == graph
        assert len(trace) == 0


def test_span_rule_closes_interleaved_components():
    graph = Graph(n=3, edges=((1, 3),))
    assert satisfies_shared_endpoint_rules(graph)
    assert not is_closed_labeled(graph)
    closed, trace = close(graph)
    assert closed == Graph.complete(3)
    assert [s.rule for s in trace.steps] == [RuleEnum.CLOSE_SPAN, RuleEnum.CLOSE_SHARED_MIN]
    assert trace.steps[0].witnesses == ((1, 3),)


def test_cm_augment_requires_a_closed_graph(c4):
    with pytest.raises(PreconditionError):
        cm_augment(c4)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_closed_implies_shared_endpoint_and_agrees_when_connected(n):
    for graph in all_graphs(n):
        pi = is_closed_labeled(graph)
        shared = satisfies_shared_endpoint_rules(graph)
        if pi:
            assert shared
        if len(components(graph)) == 1:
            assert pi == shared


def _edge_mask(graph: Graph, index: dict[tuple[int, int], int]) -> int:
    return sum(1 << index[e] for e in graph.edges)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_close_is_the_least_closed_supergraph(n):
    pairs = all_pairs(n)
    index = {p: k for k, p in enumerate(pairs)}
    closed_masks = [_edge_mask(g, index) for g in all_graphs(n) if is_closed_labeled(g)]
    for graph in all_graphs(n):
        mask = _edge_mask(graph, index)
        least = (1 << len(pairs)) - 1
        for candidate in closed_masks:
            if candidate & mask == mask:
                least &= candidate
        closed, _ = close(graph)
        assert _edge_mask(closed, index) == least


def test_rule_order_does_not_change_the_fixpoints(rng):
    for _ in range(30):
        graph = random_graph(rng, rng.randint(3, 8), p=rng.choice([0.2, 0.3, 0.45]))
        expected_closed, _ = close(graph)
        expected_cm, _ = cm_augment(expected_closed)
        for seed in range(100):
            closed, _ = close(graph, order_seed=seed)
            assert closed == expected_closed
            augmented, _ = cm_augment(closed, order_seed=seed)
            assert augmented == expected_cm


def test_close_and_augment_are_idempotent(rng):
    for _ in range(50):
        graph = random_graph(rng, rng.randint(2, 8))
        closed, _ = close(graph)
        again, trace = close(closed)
        assert again == closed and len(trace) == 0
        augmented, _ = cm_augment(closed)
        again, trace = cm_augment(augmented)
        assert again == augmented and len(trace) == 0


def test_construct_output_is_closed_and_satisfies_the_edge_condition_per_component(rng):
    for _ in range(100):
        graph = random_graph(rng, rng.randint(1, 8), p=rng.choice([0.15, 0.3, 0.5]))
        result, trace, _ = construct(graph)
        assert graph.edge_set() <= result.edge_set()
        assert set(trace.added_edges()) == result.edge_set() - graph.edge_set()
        for comp in components(result):
            sub, _ = induced_subgraph(result, comp)
            assert is_closed_labeled(sub)
            assert satisfies_condition_iv(sub)


def test_construct_trace_witnesses_precede_their_edge(rng):
    for _ in range(50):
        graph = random_connected_graph(rng, rng.randint(3, 8))
        _, trace, _ = construct(graph)
        present = set(graph.edges)
        for step in trace.steps:
            assert all(w in present for w in step.witnesses)
            present.add(step.added_edge)


def test_bfs_strategy_relabels_before_constructing(rng):
    for _ in range(30):
        graph = random_connected_graph(rng, rng.randint(3, 8))
        result, _, labeling = construct(graph, LabelingStrategyEnum.BFS)
        assert labeling == choose_labeling(graph, LabelingStrategyEnum.BFS)
        assert labeling.apply(graph).edge_set() <= result.edge_set()
        assert is_closed_labeled(result)


def test_exhaustive_min_never_loses_to_identity(rng):
    for _ in range(10):
        graph = random_connected_graph(rng, rng.randint(3, 6))
        result, _, labeling = construct(graph, LabelingStrategyEnum.EXHAUSTIVE_MIN)
        assert result.number_of_edges() <= construct_edge_count(graph)
        assert result.number_of_edges() == construct_edge_count(labeling.apply(graph))


def test_exhaustive_min_picks_first_permutation_on_ties():
    # every labeling of a complete graph gives the same [G]
    assert exhaustive_min_labeling(Graph.complete(4)).is_identity()


def test_exhaustive_min_refuses_large_graphs():
    with pytest.raises(PreconditionError):
        exhaustive_min_labeling(Graph(n=9), limit=8)


def test_edge_addition_keeps_closed(p3):
    assert edge_addition_keeps_closed(p3, (1, 3))
    two_edges = Graph(n=4, edges=((1, 2), (3, 4)))
    assert edge_addition_keeps_closed(two_edges, (2, 3))
    assert not edge_addition_keeps_closed(two_edges, (1, 3))
    with pytest.raises(PreconditionError):
        edge_addition_keeps_closed(p3, (1, 2))


def test_edge_addition_requires_closed_graph(c4):
    with pytest.raises(PreconditionError):
        edge_addition_keeps_closed(c4, (1, 3))


def test_ordering_search_certifies_non_proper_interval_graphs(c4, claw):
    for graph in (c4, claw):
        result = find_pi_ordering(graph)
        assert result.status is OrderingStatusEnum.CERTIFIED_NONE
        assert result.labeling is None


def test_ordering_search_reports_unknown_when_budget_runs_out(claw):
    assert find_pi_ordering(claw, budget=1).status is OrderingStatusEnum.UNKNOWN


def test_ordering_search_recovers_scrambled_closed_graphs(rng):
    for _ in range(50):
        n = rng.randint(2, 8)
        closed, _ = close(random_connected_graph(rng, n))
        order = list(range(1, n + 1))
        rng.shuffle(order)
        scrambled = Labeling.from_order(order).apply(closed)
        result = find_pi_ordering(scrambled)
        assert result.status is OrderingStatusEnum.FOUND
        assert is_closed_labeled(result.labeling.apply(scrambled))


def test_ordering_search_handles_components_separately():
    graph = Graph(n=7, edges=((1, 5), (5, 3), (2, 4), (4, 6), (6, 2), (4, 7)))
    result = find_pi_ordering(graph)
    assert result.status is OrderingStatusEnum.FOUND
    assert is_closed_labeled(result.labeling.apply(graph))


@pytest.mark.slow
@pytest.mark.parametrize("n", [3, 4, 5])
def test_ordering_search_matches_brute_force(n):
    for graph in all_graphs(n):
        exists = any(is_closed_labeled(Labeling.from_order(p).apply(graph)) for p in permutations(range(1, n + 1)))
        result = find_pi_ordering(graph)
        assert result.status is (OrderingStatusEnum.FOUND if exists else OrderingStatusEnum.CERTIFIED_NONE)

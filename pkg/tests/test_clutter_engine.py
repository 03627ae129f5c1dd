from __future__ import annotations

import pytest

from closure.closure_engine import construct
from clutter.clutter_engine import (
    associated_graph,
    close_clutter,
    clutter_components,
    clutter_condition_d,
    clutter_status,
    construct_clutter,
    direct_closed_clutter,
    is_closed_clutter,
    is_connected_clutter,
    sub_clutter,
)
from core.foundation.models.clutter_model import Clutter
from core.foundation.models.graph_model import Graph
from core.foundation.models.oracle_model import CMStatusEnum
from core.foundation.models.trace_model import RuleEnum
from oracle.ideal_oracle import satisfies_condition_iv
from tests.conftest import random_clutter


@pytest.fixture
def triangle_tail() -> Clutter:
    return Clutter(n=4, edges=((1, 2, 3), (3, 4)))


@pytest.fixture
def open_pair() -> Clutter:
    return Clutter(n=3, edges=((1, 2), (1, 3)))


def test_associated_graph_takes_all_pairs_of_each_edge(triangle_tail):
    graph = associated_graph(triangle_tail)
    assert graph.edge_set() == {(1, 2), (1, 3), (2, 3), (3, 4)}


def test_clutter_model_normalizes_and_validates():
    assert Clutter(n=3, edges=((2, 1), (1, 2))).edges == ((1, 2),)
    for edges in [((1,),), ((1, 2), (1, 2, 3)), ((1, 4),)]:
        with pytest.raises(ValueError):
            Clutter(n=3, edges=edges)


def test_contains_pair(triangle_tail):
    assert triangle_tail.contains_pair(1, 3)
    assert triangle_tail.contains_pair(4, 3)
    assert not triangle_tail.contains_pair(1, 4)


def test_closedness_examples(triangle_tail):
    assert is_closed_clutter(triangle_tail) and direct_closed_clutter(triangle_tail)
    broken = Clutter(n=4, edges=((1, 2), (1, 3), (2, 4)))
    assert not is_closed_clutter(broken)
    assert not direct_closed_clutter(broken)


def test_construct_adds_the_missing_pair(open_pair):
    result, trace = construct_clutter(open_pair)
    assert result.edges == ((1, 2), (1, 3), (2, 3))
    assert len(trace) == 1
    assert trace.steps[0].rule is RuleEnum.CLOSE_SHARED_MIN
    assert trace.steps[0].witnesses == ((1, 2), (1, 3))


def test_single_edge_clutter_is_already_constructed():
    clutter = Clutter(n=3, edges=((1, 2, 3),))
    result, trace = construct_clutter(clutter)
    assert result == clutter and len(trace) == 0
    assert is_closed_clutter(clutter)


def test_closed_cm_clutter_is_left_alone(triangle_tail):
    result, trace = construct_clutter(triangle_tail)
    assert result == triangle_tail and len(trace) == 0


def test_forced_pairs_become_new_two_edges():
    clutter = Clutter(n=4, edges=((1, 2, 4), (2, 3)))
    closed, trace = close_clutter(clutter)
    assert closed.edges == ((1, 2, 4), (1, 3), (2, 3), (3, 4))
    assert set(trace.added_edges()) == {(1, 3), (3, 4)}
    assert associated_graph(closed) == Graph.complete(4)


def test_components_and_sub_clutters(triangle_tail):
    clutter = Clutter(n=6, edges=((1, 2), (1, 3), (4, 5, 6)))
    assert clutter_components(clutter) == [(1, 2, 3), (4, 5, 6)]
    assert not is_connected_clutter(clutter)
    assert is_connected_clutter(triangle_tail)
    sub, labeling = sub_clutter(triangle_tail, (3, 4))
    assert sub == Clutter(n=2, edges=((1, 2),))
    assert labeling.to_original(1) == 3


def test_construct_commutes_with_the_associated_graph(rng):
    for _ in range(300):
        clutter = random_clutter(rng, rng.randint(2, 8))
        result, trace = construct_clutter(clutter)
        expected, graph_trace, _ = construct(associated_graph(clutter))
        assert associated_graph(result) == expected
        assert trace == graph_trace


def test_construct_keeps_the_antichain_and_the_original_edges(rng):
    for _ in range(200):
        clutter = random_clutter(rng, rng.randint(2, 8))
        result, trace = construct_clutter(clutter)
        assert set(clutter.edges) <= set(result.edges)
        added = set(result.edges) - set(clutter.edges)
        assert added == set(trace.added_edges())
        assert all(len(e) == 2 for e in added)


def test_direct_closedness_against_the_associated_graph(rng):
    for _ in range(400):
        clutter = random_clutter(rng, rng.randint(2, 7))
        direct = direct_closed_clutter(clutter)
        via_graph = is_closed_clutter(clutter)
        if via_graph:
            assert direct
        if is_connected_clutter(clutter):
            assert direct == via_graph


def test_composition_condition_matches_the_associated_graph(rng):
    for _ in range(300):
        clutter = random_clutter(rng, rng.randint(2, 8))
        assert clutter_condition_d(clutter) == satisfies_condition_iv(associated_graph(clutter))


def test_status_of_mixed_components():
    clutter = Clutter(n=6, edges=((1, 2), (1, 3), (4, 5, 6)))
    first, second = clutter_status(clutter)
    assert first.vertices == (1, 2, 3)
    assert not first.closed and first.unmixed
    assert first.condition_d is None and first.cm_status is None
    assert second.closed and second.unmixed and second.condition_d
    assert second.cm_status is CMStatusEnum.CM
    assert second.condition_c == "implied"


def test_status_of_constructed_clutters_is_cm(rng):
    for _ in range(100):
        result, _ = construct_clutter(random_clutter(rng, rng.randint(2, 8)))
        for verdict in clutter_status(result):
            assert verdict.closed and verdict.unmixed and verdict.condition_d
            assert verdict.cm_status is CMStatusEnum.CM


def test_composition_condition_iff_unmixed_on_closed_connected_clutters(rng):
    for _ in range(600):
        clutter = random_clutter(rng, rng.randint(2, 7))
        if not (is_connected_clutter(clutter) and is_closed_clutter(clutter)):
            continue
        (verdict,) = clutter_status(clutter)
        assert verdict.condition_d == verdict.unmixed
        assert (verdict.cm_status is CMStatusEnum.CM) == verdict.unmixed

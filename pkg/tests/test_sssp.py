import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weightdyn.errors import NoPathError, WeightRangeError
from weightdyn.gadgets import build_sp_gadget, set_round_vectors
from weightdyn.generate import random_graph, random_trace
from weightdyn.graph import WeightChange, WeightedGraph
from weightdyn.oracles import INF, dijkstra_all, dijkstra_dist, path_weight
from weightdyn.sssp import DynamicSSSP

from conftest import path_graph


def test_init_path_distances():
    sp = DynamicSSSP(path_graph([2, 3]), 1, 3)
    assert sp.dist[1:] == [0, 2, 5]
    assert sp.query_path() == [1, 2, 3]


def test_unreachable_target():
    sp = DynamicSSSP(WeightedGraph(3, [(1, 2, 1)], W=2), 1, 3)
    assert sp.query_dist() == INF
    with pytest.raises(NoPathError):
        sp.query_path()


def test_gadget_all_zero_vectors_is_far():
    gadget = build_sp_gadget([[1, 1], [1, 1]])
    assert DynamicSSSP(gadget.graph, gadget.s, gadget.t).query_dist() >= 5


def test_increase_on_path():
    sp = DynamicSSSP(path_graph([2, 3]), 1, 3)
    sp.on_weight_change(WeightChange(1, 2, +1))
    assert sp.query_dist() == 6


def test_single_edge_and_inverse_pair():
    sp = DynamicSSSP(WeightedGraph(2, [(1, 2, 7)], W=10), 1, 2)
    assert sp.query_dist() == 7 and sp.query_path() == [1, 2]
    sp.on_weight_change(WeightChange(1, 2, +2))
    sp.on_weight_change(WeightChange(1, 2, -2))
    assert sp.query_dist() == 7
    sp.check_invariants()


def test_non_tree_decrease_without_shortcut_is_cheap():
    g = WeightedGraph(3, [(1, 2, 1), (2, 3, 1), (1, 3, 9)], W=9)
    sp = DynamicSSSP(g, 1, 3)
    sp.on_weight_change(WeightChange(1, 3, -1))
    assert sp.query_dist() == 2
    assert sp.last_nodes_touched <= g.degree(1) + g.degree(3) + 2


def test_range_error_leaves_state_alone():
    g = path_graph([1, 3], W=3)
    sp = DynamicSSSP(g, 1, 3)
    with pytest.raises(WeightRangeError):
        sp.on_weight_change(WeightChange(1, 2, -1))
    assert g.weight(1, 2) == 1 and sp.query_dist() == 4
    sp.check_invariants()


def test_tie_reparenting_keeps_distance():
    # two equal routes to 4; raising one keeps the distance
    g = WeightedGraph(4, [(1, 2, 1), (2, 4, 1), (1, 3, 1), (3, 4, 1)], W=5)
    sp = DynamicSSSP(g, 1, 4)
    eid = sp.parent_edge[4]
    sp.on_weight_change(WeightChange(*g.endpoints(eid), +3))
    assert sp.query_dist() == 2
    sp.check_invariants()


def test_gadget_witness_path_has_weight_three():
    gadget = build_sp_gadget([[0, 1], [0, 0]])
    sp = DynamicSSSP(gadget.graph, gadget.s, gadget.t)
    for ch in set_round_vectors(gadget, [1, 0], [0, 1]):
        sp.on_weight_change(ch)
    assert sp.query_dist() == 3
    path = sp.query_path()
    assert path_weight(gadget.graph, path) == 3
    assert path == [gadget.s, gadget.a(0), gadget.b(1), gadget.t]


def test_directed_graph_distances():
    g = WeightedGraph(3, [(1, 2, 1), (2, 3, 1), (3, 1, 1)], W=4, directed=True)
    sp = DynamicSSSP(g, 1, 3)
    sp.on_weight_change(WeightChange(2, 3, +3))
    assert sp.query_dist() == 5
    sp.check_invariants()


def _replay(g, trace, s, t):
    sp = DynamicSSSP(g, s, t)
    for ch in trace.events:
        du, dv = g.degree(ch.u), g.degree(ch.v)
        before = list(sp.dist)
        sp.on_weight_change(ch)
        assert sp.dist == dijkstra_all(g, s)[0]
        if sp.dist == before:
            assert sp.last_nodes_touched <= du + dv + 2
        sp.check_invariants()
        if sp.query_dist() != INF:
            assert path_weight(g, sp.query_path()) == sp.query_dist()
    return sp


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 14), st.floats(0.1, 1.0), st.integers(1, 8), st.integers(1, 3),
       st.booleans(), st.integers(0, 2**32))
def test_random_traces_match_dijkstra(n, density, W, c, directed, seed):
    g = random_graph(n, density, max(W, 2), seed, directed=directed)
    if g.m == 0:
        return
    trace = random_trace(g, 60, c, seed + 1)
    _replay(g, trace, 1, n)


def test_frozen_random_trace_distances():
    g = random_graph(12, 0.3, 6, seed=5, connected=True)
    trace = random_trace(g, 200, 2, seed=6)
    sp = DynamicSSSP(g, 1, 12)
    seen = [sp.query_dist()]
    for ch in trace.events:
        sp.on_weight_change(ch)
        seen.append(sp.query_dist())
    assert seen[-1] == dijkstra_dist(g, 1, 12).value
    # recomputed from scratch with Dijkstra after every event
    assert [seen[0], seen[50], seen[100], seen[200]] == [4, 6, 5, 4]


import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weightdyn.errors import GraphStructureError, NoSpanningTreeError, StateError
from weightdyn.generate import random_graph, random_toggle_trace, random_trace
from weightdyn.graph import WeightChange, WeightedGraph
from weightdyn.mst import ConnectivityAdapter, DynamicMST
from weightdyn.oracles import bruteforce_mst, connectivity, is_spanning_tree, kruskal_mst
from weightdyn.trace import AddEdge

from conftest import path_graph


def test_triangle(triangle):
    assert DynamicMST(triangle).query_weight() == 3


def test_tree_input():
    g = path_graph([4, 2, 6])
    mst = DynamicMST(g)
    assert mst.query_weight() == 12 and mst.tree_edges() == [0, 1, 2]


def test_disconnected_and_directed_inputs():
    with pytest.raises(NoSpanningTreeError):
        DynamicMST(WeightedGraph(3, [(1, 2, 1)], W=1))
    with pytest.raises(GraphStructureError):
        DynamicMST(WeightedGraph(2, [(1, 2, 1)], W=1, directed=True))


def test_tree_edge_decrease_keeps_tree(triangle):
    mst = DynamicMST(triangle)
    tree = mst.tree_edges()
    mst.on_weight_change(WeightChange(2, 3, -1))
    assert mst.tree_edges() == tree and mst.query_weight() == 2


def test_non_tree_decrease_swaps(triangle):
    mst = DynamicMST(triangle)
    mst.on_weight_change(WeightChange(1, 3, -2))
    assert mst.query_weight() == 2 and mst.swaps == 1
    assert 2 in mst.tree_edges()
    mst.check_invariants()


def test_tree_edge_increase_swaps(triangle):
    mst = DynamicMST(triangle)
    mst.on_weight_change(WeightChange(1, 2, +4))
    assert mst.query_weight() == 5
    mst.check_invariants()


def test_ties_never_swap(triangle):
    mst = DynamicMST(triangle)
    mst.on_weight_change(WeightChange(1, 3, -1))  # now ties with the heaviest tree edge
    assert mst.swaps == 0 and mst.query_weight() == 3


def test_inverse_pair_restores_weight(triangle):
    mst = DynamicMST(triangle)
    mst.on_weight_change(WeightChange(1, 2, +2))
    mst.on_weight_change(WeightChange(1, 2, -2))
    assert mst.query_weight() == 3


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6), st.floats(0.4, 1.0), st.integers(2, 6), st.integers(1, 3), st.integers(0, 2**32))
def test_small_graphs_match_exhaustive(n, density, W, c, seed):
    g = random_graph(n, max(density, 2 / n), W, seed, connected=True)
    mst = DynamicMST(g)
    assert mst.query_weight() == bruteforce_mst(g)
    for ch in random_trace(g, 20, c, seed + 1).events:
        mst.on_weight_change(ch)
        assert mst.query_weight() == bruteforce_mst(g)
        assert is_spanning_tree(g, mst.tree_edges())
        mst.check_invariants()


@settings(max_examples=40, deadline=None)
@given(st.integers(8, 20), st.floats(0.3, 0.6), st.integers(1, 3), st.integers(0, 2**32))
def test_random_traces_match_kruskal(n, density, c, seed):
    g = random_graph(n, density, 8, seed, connected=True)
    mst = DynamicMST(g)
    for ch in random_trace(g, 60, c, seed + 1).events:
        mst.on_weight_change(ch)
        assert mst.query_weight() == kruskal_mst(g).value
    mst.check_invariants()


def test_frozen_trace():
    g = random_graph(15, 0.3, 8, seed=9, connected=True)
    mst = DynamicMST(g)
    seen = [mst.query_weight()]
    for ch in random_trace(g, 300, 2, seed=10).events:
        mst.on_weight_change(ch)
        seen.append(mst.query_weight())
    # Kruskal after events 0, 100, 200 and 300
    assert [seen[0], seen[100], seen[200], seen[300]] == [23, 35, 37, 35]


# connectivity adapter


def test_adapter_spanning_path_and_bridge():
    a = ConnectivityAdapter(4)
    for u in range(1, 4):
        a.add_edge(u, u + 1)
    assert a.is_connected()
    a.remove_edge(2, 3)
    assert not a.is_connected()


def test_adapter_empty_and_complete():
    a = ConnectivityAdapter(3)
    assert a.mst.query_weight() == 4 and not a.is_connected()
    for u, v in [(1, 2), (1, 3), (2, 3)]:
        a.add_edge(u, v)
    assert a.is_connected()
    assert ConnectivityAdapter(1).is_connected()


def test_adapter_misuse():
    a = ConnectivityAdapter(3)
    a.add_edge(1, 2)
    with pytest.raises(StateError):
        a.add_edge(2, 1)
    with pytest.raises(StateError):
        a.remove_edge(1, 3)
    with pytest.raises(StateError):
        a.add_edge(2, 2)
    with pytest.raises(ValueError):
        ConnectivityAdapter(10, max_nodes=5)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 9), st.integers(0, 2**32))
def test_adapter_weights_track_edges(n, seed):
    a = ConnectivityAdapter(n)
    for k, ev in enumerate(random_toggle_trace(n, 80, seed, query_rate=0.0).events):
        if isinstance(ev, AddEdge):
            a.add_edge(ev.u, ev.v)
        else:
            a.remove_edge(ev.u, ev.v)
        assert a.changes_issued == k + 1
        assert a.is_connected() == connectivity(n, a.present)
    g = a.mst.g
    for u, v, w in g.edges():
        assert w == (1 if (u, v) in a.present else 2)

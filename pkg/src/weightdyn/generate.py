"""Seeded random instances for tests and benchmarks."""
from __future__ import annotations

import random

from .errors import GenerationError
from .graph import WeightChange, WeightedGraph
from .trace import AddEdge, ChangeTrace, Query, RemoveEdge


def random_graph(n, density, W, seed, directed=False, connected=False) -> WeightedGraph:
    """Erdos-Renyi style graph; each node pair is an edge with probability ``density``.

    With ``connected=True`` a random spanning tree is laid down first and the
    remaining pairs are sampled as usual.
    """
    if not 0 < density <= 1:
        raise GenerationError(f"density must be in (0, 1], got {density}")
    if W < 1:
        raise GenerationError("W must be >= 1")
    pairs = n * (n - 1) // 2
    if connected and n > 1 and density * pairs < n - 1:
        raise GenerationError(
            f"density {density} gives ~{density * pairs:.1f} expected edges, "
            f"fewer than the {n - 1} a connected graph needs"
        )
    rng = random.Random(seed)
    chosen = set()
    if connected:
        order = list(range(1, n + 1))
        rng.shuffle(order)
        for i in range(1, n):
            u, v = order[i], order[rng.randrange(i)]
            chosen.add((min(u, v), max(u, v)))
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if (u, v) not in chosen and rng.random() < density:
                chosen.add((u, v))
    edges = []
    for u, v in sorted(chosen):
        if directed and rng.random() < 0.5:
            u, v = v, u
        edges.append((u, v, rng.randint(1, W)))
    return WeightedGraph(n, edges, W=W, directed=directed)


def random_bipartite_graph(n_left, n_right, density, W, seed) -> WeightedGraph:
    """Left nodes are ``1..n_left``, right nodes follow."""
    if not 0 < density <= 1:
        raise GenerationError(f"density must be in (0, 1], got {density}")
    if W < 1:
        raise GenerationError("W must be >= 1")
    rng = random.Random(seed)
    edges = []
    for u in range(1, n_left + 1):
        for v in range(n_left + 1, n_left + n_right + 1):
            if rng.random() < density:
                edges.append((u, v, rng.randint(1, W)))
    return WeightedGraph(n_left + n_right, edges, W=W, left=n_left)


def random_trace(g: WeightedGraph, length, c, seed, query_kind=None, query_rate=0.0) -> ChangeTrace:
    """Random weight changes with 1 <= |delta| <= c that never leave [1, W].

    With ``query_kind`` set, each event is a query with probability
    ``query_rate`` and the trace always ends with one query.
    """
    if c < 1:
        raise GenerationError("change bound c must be >= 1")
    if g.m == 0:
        raise GenerationError("graph has no edges to change")
    if g.W < 2:
        raise GenerationError("W=1 admits no weight change")
    rng = random.Random(seed)
    weights = list(g.weights)
    events = []
    for i in range(length):
        last = i == length - 1
        if query_kind is not None and (last or rng.random() < query_rate):
            events.append(Query(query_kind))
            continue
        eid = rng.randrange(g.m)
        w = weights[eid]
        deltas = [d for d in range(-c, c + 1) if d and 1 <= w + d <= g.W]
        delta = rng.choice(deltas)
        weights[eid] = w + delta
        u, v = g.endpoints(eid)
        events.append(WeightChange(u, v, delta))
    return ChangeTrace(c, events)


def random_toggle_trace(n, length, seed, query_rate=1.0) -> ChangeTrace:
    """Add/remove stream over the pairs of ``n`` nodes, for the connectivity adapter.

    Starts from the empty graph. Each event adds or removes with equal
    probability, so the edge count does a random walk and the stream keeps
    crossing the connectivity threshold.
    """
    if n < 2:
        raise GenerationError("need at least two nodes")
    rng = random.Random(seed)
    all_pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    present = []
    absent = list(all_pairs)
    events = []
    for _ in range(length):
        if absent and (not present or rng.random() < 0.5):
            pair = absent.pop(rng.randrange(len(absent)))
            present.append(pair)
            events.append(AddEdge(*pair))
        else:
            pair = present.pop(rng.randrange(len(present)))
            absent.append(pair)
            events.append(RemoveEdge(*pair))
        if rng.random() < query_rate:
            events.append(Query("conn"))
    return ChangeTrace(None, events)

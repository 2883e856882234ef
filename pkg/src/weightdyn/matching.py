"""Maximum weight bipartite matching under unit weight changes.

The matching is kept as a min-cost flow in which every left node ``l``
ships one unit to a sink ``T``, either through a matched edge ``l -> r ->
T`` (cost ``W - w(l, r)``) or through a private bypass ``l -> T`` (cost
``W``, meaning ``l`` is unmatched). Every flow has cost ``|L|*W - weight``,
so minimum cost is maximum weight.

Optimality is certified by node potentials ``pi`` under which every
residual arc has nonnegative reduced cost. A unit weight change alters one
arc cost by one, so at most one residual arc drops to reduced cost -1. A
BFS over zero-reduced-cost arcs from that arc's head either closes a
negative cycle (push one unit around it) or finds the set whose
potentials drop by one to restore the certificate.
"""
from __future__ import annotations

import heapq
import math
from collections import deque

from .errors import GraphStructureError, InvariantError
from .graph import WeightChange, WeightedGraph
from .oracles import _capacities

SINK = 0


class DynamicMatching:
    def __init__(self, g: WeightedGraph, left=None):
        if left is None:
            if g.left is None:
                raise GraphStructureError("bipartition required: pass left nodes or a bipartite graph")
            left = g.left_nodes()
        self.g = g
        self.is_left = [False] * (g.n + 1)
        for x in left:
            self.is_left[x] = True
        for u, v in zip(g.tails, g.heads):
            if self.is_left[u] == self.is_left[v]:
                raise GraphStructureError(f"edge ({u},{v}) does not cross the bipartition")
        self.left = [x for x in range(1, g.n + 1) if self.is_left[x]]
        self.right = [x for x in range(1, g.n + 1) if not self.is_left[x]]
        self.K = g.W
        self.mate = [0] * (g.n + 1)  # partner node, 0 if free
        self.mate_edge = [-1] * (g.n + 1)
        self.pi = [0] * (g.n + 1)  # index 0 is the sink
        self.routed = [False] * (g.n + 1)
        self.weight = 0
        self.work = 0
        self.last_work = 0
        for l in self.left:
            self._route(l)
        self.work = self.last_work = 0

    # -- residual network -------------------------------------------------

    def _arcs(self, x):
        """Residual arcs out of ``x`` as ``(head, cost)``."""
        g, mate = self.g, self.mate
        if x == SINK:
            for l in self.left:
                if self.routed[l] and not mate[l]:
                    yield l, -self.K
            for r in self.right:
                if mate[r]:
                    yield r, 0
        elif self.is_left[x]:
            for r, eid in g.incident[x]:
                if mate[x] != r:
                    yield r, self.K - g.weights[eid]
            if mate[x] or not self.routed[x]:
                yield SINK, self.K
        else:
            if mate[x]:
                yield mate[x], g.weights[self.mate_edge[x]] - self.K
            else:
                yield SINK, 0

    def _route(self, l):
        """Send the unit of ``l`` to the sink along a cheapest residual path."""
        pi = self.pi
        dist = {l: 0}
        prev = {}
        done = set()
        heap = [(0, l)]
        while heap:
            d, x = heapq.heappop(heap)
            if x in done:
                continue
            done.add(x)
            if x == SINK:
                break
            for y, cost in self._arcs(x):
                self.last_work += 1
                nd = d + cost + pi[x] - pi[y]
                if nd < dist.get(y, math.inf):
                    dist[y] = nd
                    prev[y] = x
                    heapq.heappush(heap, (nd, y))
        cap = dist[SINK]
        for x in range(self.g.n + 1):
            pi[x] += min(dist.get(x, cap), cap) if x in done else cap
        path = [SINK]
        while path[-1] != l:
            path.append(prev[path[-1]])
        path.reverse()
        self._push(list(zip(path, path[1:])))
        self.routed[l] = True

    def _push(self, arcs):
        """Move one unit along residual arcs ``(x, y)`` and update the matching."""
        g = self.g
        unmatch = []
        match = []
        for x, y in arcs:
            if x != SINK and y != SINK:
                l, r = (x, y) if self.is_left[x] else (y, x)
                (match if self.is_left[x] else unmatch).append((l, r))
        for l, r in unmatch:
            self.weight -= g.weights[self.mate_edge[l]]
            self.mate[l] = self.mate[r] = 0
            self.mate_edge[l] = self.mate_edge[r] = -1
        for l, r in match:
            eid = g.edge_id(l, r)
            self.mate[l], self.mate[r] = r, l
            self.mate_edge[l] = self.mate_edge[r] = eid
            self.weight += g.weights[eid]

    # -- updates ----------------------------------------------------------

    def on_weight_change(self, ch: WeightChange):
        g = self.g
        eid = g.edge_id(ch.u, ch.v)
        g.change_edge(eid, ch.delta)  # range check for the whole change
        g.weights[eid] -= ch.delta
        self.last_work = 0
        step = 1 if ch.delta > 0 else -1
        for _ in range(abs(ch.delta)):
            self._unit(eid, step)
        self.work += self.last_work
        return self

    def _unit(self, eid, step):
        g, pi = self.g, self.pi
        g.weights[eid] += step
        l, r = g.tails[eid], g.heads[eid]
        if not self.is_left[l]:
            l, r = r, l
        self.last_work += 1
        if self.mate[l] == r:
            self.weight += step
            x, y = r, l
            reduced = g.weights[eid] - self.K + pi[r] - pi[l]
        else:
            x, y = l, r
            reduced = self.K - g.weights[eid] + pi[l] - pi[r]
        if reduced >= 0:
            return
        # the only negative arc is x -> y with reduced cost -1
        prev = {y: None}
        queue = deque([y])
        while queue:
            a = queue.popleft()
            for b, cost in self._arcs(a):
                self.last_work += 1
                if b in prev or cost + pi[a] - pi[b] != 0:
                    continue
                prev[b] = a
                if b == x:
                    cycle = [(x, y)]
                    while prev[b] is not None:
                        cycle.append((prev[b], b))
                        b = prev[b]
                    self._push(cycle)
                    return
                queue.append(b)
        for a in prev:
            pi[a] -= 1

    # -- queries ----------------------------------------------------------

    def query_weight(self):
        return self.weight

    def query_matching(self):
        """Matched pairs as ``(left, right)`` tuples."""
        return [(l, self.mate[l]) for l in self.left if self.mate[l]]

    def check_certificate(self):
        """Verify matching consistency and the reduced-cost optimality certificate."""
        g = self.g
        total = 0
        for l, r in self.query_matching():
            if self.mate[r] != l or g.edge_id(l, r) != self.mate_edge[l]:
                raise InvariantError(f"inconsistent pair ({l},{r})")
            total += g.weights[self.mate_edge[l]]
        if total != self.weight:
            raise InvariantError(f"stored weight {self.weight} != {total}")
        for r in self.right:
            if self.mate[r] and self.mate[self.mate[r]] != r:
                raise InvariantError(f"right node {r} has a stale partner")
        for x in [SINK, *range(1, g.n + 1)]:
            for y, cost in self._arcs(x):
                if cost + self.pi[x] - self.pi[y] < 0:
                    raise InvariantError(f"residual arc {x}->{y} has negative reduced cost")
        return True


def is_valid_b_matching(g: WeightedGraph, edges, b) -> bool:
    """True iff no node ``v`` is incident to more than ``b[v]`` chosen edges.

    ``edges`` may repeat an edge; each copy counts. ``b`` is a dict keyed by
    node or a sequence whose i-th entry belongs to node i+1.
    """
    caps = _capacities(g, b)
    load = [0] * (g.n + 1)
    for u, v in edges:
        if not g.has_edge(u, v):
            raise GraphStructureError(f"no edge ({u},{v})")
        load[u] += 1
        load[v] += 1
    return all(load[x] <= caps[x] for x in range(1, g.n + 1))

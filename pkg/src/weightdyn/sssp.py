"""Shortest s-t distance maintained under edge-weight changes.

A shortest-path tree from ``s`` is kept up to date by affected-region repair:
a decrease seeds a Dijkstra pass from the improved endpoint that only
spreads through nodes whose distance drops; an increase on a tree edge
invalidates the subtree hanging below it and re-settles that subtree from
its valid frontier. Changes to non-tree edges that create no shortcut cost
O(1).
"""
from __future__ import annotations

import heapq
import math

from .errors import GraphStructureError, InvariantError, NoPathError
from .graph import WeightChange, WeightedGraph

INF = math.inf


class DynamicSSSP:
    """Exact distances from ``s``; ``query_dist`` reads the one to ``t``.

    Work counters: ``last_nodes_touched`` and ``last_edges_scanned`` describe
    the most recent update, ``work`` accumulates both over every update.
    """

    def __init__(self, g: WeightedGraph, s, t):
        for x in (s, t):
            if not (isinstance(x, int) and 1 <= x <= g.n):
                raise GraphStructureError(f"node {x!r} not in 1..{g.n}")
        self.g = g
        self.s = s
        self.t = t
        n = g.n
        self.dist = [INF] * (n + 1)
        self.parent = [0] * (n + 1)
        self.parent_edge = [-1] * (n + 1)
        self.children: list[set[int]] = [set() for _ in range(n + 1)]
        self.work = 0
        self.updates = 0
        self.last_nodes_touched = 0
        self.last_edges_scanned = 0
        self.dist[s] = 0
        self._settle([(0, s)])
        self.last_nodes_touched = self.last_edges_scanned = 0

    @property
    def last_work(self):
        return self.last_nodes_touched + self.last_edges_scanned

    # -- updates ----------------------------------------------------------

    def on_weight_change(self, ch: WeightChange):
        """Apply ``ch`` to the graph and repair the tree. Atomic on range errors."""
        g = self.g
        eid = g.edge_id(ch.u, ch.v)
        g.change_edge(eid, ch.delta)
        self.last_nodes_touched = 0
        self.last_edges_scanned = 0
        if ch.delta < 0:
            self._decrease(eid)
        elif ch.delta > 0:
            self._increase(eid)
        self.updates += 1
        self.work += self.last_work
        return self

    def _arcs(self, eid):
        u, v = self.g.endpoints(eid)
        if self.g.directed:
            return ((u, v),)
        return ((u, v), (v, u))

    def _set_parent(self, y, x, eid):
        old = self.parent[y]
        if old:
            self.children[old].discard(y)
        self.parent[y] = x
        self.parent_edge[y] = eid
        if x:
            self.children[x].add(y)

    def _decrease(self, eid):
        w = self.g.weights[eid]
        dist = self.dist
        self.last_nodes_touched += 2
        for x, y in self._arcs(eid):
            if dist[x] + w < dist[y]:
                dist[y] = dist[x] + w
                self._set_parent(y, x, eid)
                self._settle([(dist[y], y)])
                return

    def _increase(self, eid):
        dist = self.dist
        weights = self.g.weights
        self.last_nodes_touched += 2
        for x, y in self._arcs(eid):
            if self.parent_edge[y] == eid and self.parent[y] == x:
                break
        else:
            return  # non-tree edge: every tree path is intact and still optimal
        # an equally short alternative parent cannot lie below y (weights > 0)
        for z, e2 in self.g.in_adj[y]:
            self.last_nodes_touched += 1
            if e2 != eid and dist[z] + weights[e2] == dist[y]:
                self._set_parent(y, z, e2)
                return
        subtree = [y]
        for q in subtree:
            subtree.extend(self.children[q])
        self.last_nodes_touched += len(subtree)
        for q in subtree:
            dist[q] = INF
        for q in subtree:
            self._set_parent(q, 0, -1)
        heap = []
        for q in subtree:
            best, via, via_edge = INF, 0, -1
            for z, e2 in self.g.in_adj[q]:
                self.last_edges_scanned += 1
                cand = dist[z] + weights[e2]
                if cand < best:
                    best, via, via_edge = cand, z, e2
            if best < INF:
                dist[q] = best
                self._set_parent(q, via, via_edge)
                heap.append((best, q))
        heapq.heapify(heap)
        self._settle(heap)

    def _settle(self, heap):
        dist = self.dist
        weights = self.g.weights
        out_adj = self.g.out_adj
        touched = scanned = 0
        while heap:
            d, x = heapq.heappop(heap)
            if d > dist[x]:
                continue
            touched += 1
            for y, eid in out_adj[x]:
                scanned += 1
                nd = d + weights[eid]
                if nd < dist[y]:
                    dist[y] = nd
                    self._set_parent(y, x, eid)
                    heapq.heappush(heap, (nd, y))
        self.last_nodes_touched += touched
        self.last_edges_scanned += scanned

    # -- queries ----------------------------------------------------------

    def query_dist(self):
        return self.dist[self.t]

    def query_path(self):
        """Nodes of a shortest s-t path, ``s`` first."""
        if self.dist[self.t] == INF:
            raise NoPathError(f"node {self.t} unreachable from {self.s}")
        path = [self.t]
        while path[-1] != self.s:
            path.append(self.parent[path[-1]])
        path.reverse()
        return path

    def check_invariants(self):
        """Raise InvariantError unless the tree certifies exact distances."""
        g, dist = self.g, self.dist
        if dist[self.s] != 0:
            raise InvariantError("source distance is not 0")
        for eid, (u, v, w) in enumerate(g.edges()):
            for x, y in self._arcs(eid):
                if dist[x] + w < dist[y]:
                    raise InvariantError(f"edge ({x},{y}) violates the triangle inequality")
        for y in range(1, g.n + 1):
            if y == self.s or dist[y] == INF:
                continue
            x, eid = self.parent[y], self.parent_edge[y]
            if eid < 0 or (x, y) not in self._arcs(eid) or dist[x] + g.weights[eid] != dist[y]:
                raise InvariantError(f"bad parent for node {y}")
            if y not in self.children[x]:
                raise InvariantError(f"node {y} missing from its parent's children")

"""Minimum spanning tree under weight changes, and connectivity on top of it.

Only two of the four change cases can break optimality: a non-tree edge
getting lighter (it may beat the heaviest edge on its tree cycle) and a
tree edge getting heavier (a lighter edge may cross the cut it spans). Both
are repaired by one swap, found with a linear-time tree walk. Swaps need a
strict improvement, so ties never move the tree.
"""
from __future__ import annotations

import heapq
from collections import deque

from .errors import GraphStructureError, InvariantError, NoSpanningTreeError, StateError
from .graph import WeightChange, WeightedGraph


class DynamicMST:
    def __init__(self, g: WeightedGraph):
        if g.directed:
            raise GraphStructureError("spanning trees need an undirected graph")
        self.g = g
        self.in_tree = [False] * g.m
        self.tree_adj: list[dict[int, int]] = [{} for _ in range(g.n + 1)]
        self.weight = 0
        self.work = 0
        self.last_work = 0
        self.swaps = 0
        # Prim from node 1
        seen = [False] * (g.n + 1)
        seen[1] = True
        heap = [(w, eid) for _, eid in g.incident[1] for w in (g.weights[eid],)]
        heapq.heapify(heap)
        count = 1
        while heap and count < g.n:
            w, eid = heapq.heappop(heap)
            u, v = g.endpoints(eid)
            x = v if seen[u] else u
            if seen[x]:
                continue
            seen[x] = True
            count += 1
            self._link(eid)
            for _, e2 in g.incident[x]:
                heapq.heappush(heap, (g.weights[e2], e2))
        if count < g.n:
            raise NoSpanningTreeError("graph is disconnected")

    def _link(self, eid):
        u, v = self.g.endpoints(eid)
        self.in_tree[eid] = True
        self.tree_adj[u][v] = eid
        self.tree_adj[v][u] = eid
        self.weight += self.g.weights[eid]

    def _cut(self, eid):
        u, v = self.g.endpoints(eid)
        self.in_tree[eid] = False
        del self.tree_adj[u][v]
        del self.tree_adj[v][u]
        self.weight -= self.g.weights[eid]

    # -- updates ----------------------------------------------------------

    def on_weight_change(self, ch: WeightChange):
        g = self.g
        eid = g.edge_id(ch.u, ch.v)
        g.change_edge(eid, ch.delta)
        self.last_work = 1
        if self.in_tree[eid]:
            self.weight += ch.delta
            if ch.delta > 0:
                self._repair_tree_edge(eid)
        elif ch.delta < 0:
            self._repair_non_tree_edge(eid)
        self.work += self.last_work
        return self

    def tree_path(self, a, b):
        """Tree edge ids on the path from ``a`` to ``b``."""
        prev = {a: None}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            if x == b:
                break
            for y, eid in self.tree_adj[x].items():
                self.last_work += 1
                if y not in prev:
                    prev[y] = (x, eid)
                    queue.append(y)
        path = []
        x = b
        while prev[x] is not None:
            x, eid = prev[x]
            path.append(eid)
        return path

    def _repair_non_tree_edge(self, eid):
        w = self.g.weights
        u, v = self.g.endpoints(eid)
        heaviest = max(self.tree_path(u, v), key=lambda e: (w[e], e))
        if w[heaviest] > w[eid]:
            self._cut(heaviest)
            self._link(eid)
            self.swaps += 1

    def _repair_tree_edge(self, eid):
        g = self.g
        u, v = g.endpoints(eid)
        self._cut(eid)
        side = self._smaller_side(u, v)
        best = eid
        for x in side:
            for y, e2 in g.incident[x]:
                self.last_work += 1
                if y not in side and (g.weights[e2], e2) < (g.weights[best], best):
                    best = e2
        if g.weights[best] >= g.weights[eid]:
            best = eid
        else:
            self.swaps += 1
        self._link(best)

    def _smaller_side(self, u, v):
        """Explore both halves in lockstep and return the first to finish."""
        sides = ({u}, {v})
        queues = (deque([u]), deque([v]))
        while True:
            for side, queue in zip(sides, queues):
                if not queue:
                    return side
                x = queue.popleft()
                for y in self.tree_adj[x]:
                    self.last_work += 1
                    if y not in side:
                        side.add(y)
                        queue.append(y)

    # -- queries ----------------------------------------------------------

    def query_weight(self):
        return self.weight

    def tree_edges(self):
        return [eid for eid, inside in enumerate(self.in_tree) if inside]

    def check_invariants(self):
        g = self.g
        tree = self.tree_edges()
        if len(tree) != g.n - 1:
            raise InvariantError(f"tree has {len(tree)} edges, expected {g.n - 1}")
        if sum(g.weights[e] for e in tree) != self.weight:
            raise InvariantError("stored weight disagrees with the tree")
        for x in range(1, g.n + 1):
            for y, eid in self.tree_adj[x].items():
                if not self.in_tree[eid] or set(g.endpoints(eid)) != {x, y}:
                    raise InvariantError(f"tree adjacency corrupt at node {x}")
        saved = self.last_work
        for eid in range(g.m):
            if self.in_tree[eid]:
                continue
            u, v = g.endpoints(eid)
            path = self.tree_path(u, v)
            if not path:
                raise InvariantError("tree is not spanning")
            if max(g.weights[e] for e in path) > g.weights[eid]:
                raise InvariantError(f"non-tree edge ({u},{v}) is lighter than its tree cycle")
        self.last_work = saved


class ConnectivityAdapter:
    """Connectivity of an unweighted graph on ``n`` nodes via an MST of K_n.

    Present edges weigh 1 and absent ones 2, so the simulated graph is
    connected exactly when the minimum spanning tree weighs ``n - 1``.
    """

    def __init__(self, n, max_nodes=2000):
        if n < 1:
            raise ValueError("need at least one node")
        if n > max_nodes:
            raise ValueError(f"K_{n} would have {n * (n - 1) // 2} edges; raise max_nodes to allow it")
        self.n = n
        edges = [(u, v, 2) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
        self.mst = DynamicMST(WeightedGraph(n, edges, W=2))
        self.present: set[tuple[int, int]] = set()
        self.changes_issued = 0

    def _key(self, u, v):
        if u == v:
            raise StateError("self-loops are not edges")
        for x in (u, v):
            if not 1 <= x <= self.n:
                raise GraphStructureError(f"node {x} not in 1..{self.n}")
        return (u, v) if u < v else (v, u)

    def add_edge(self, u, v):
        key = self._key(u, v)
        if key in self.present:
            raise StateError(f"edge {key} already present")
        self.mst.on_weight_change(WeightChange(*key, -1))
        self.changes_issued += 1
        self.present.add(key)
        return self

    def remove_edge(self, u, v):
        key = self._key(u, v)
        if key not in self.present:
            raise StateError(f"edge {key} not present")
        self.mst.on_weight_change(WeightChange(*key, +1))
        self.changes_issued += 1
        self.present.remove(key)
        return self

    def is_connected(self) -> bool:
        return self.mst.query_weight() == self.n - 1

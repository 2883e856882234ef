"""Maximum s-t flow maintained under unit capacity changes.

Each edge carries a signed net flow ``f`` in its stored ``tail -> head``
orientation. Residual capacity is ``w - f`` forwards and ``f`` backwards for
directed edges, ``w - f`` and ``w + f`` for undirected ones. The *support*
graph has an arc along every edge with nonzero flow, oriented with the flow.

Capacity changes are processed one unit at a time.

Decrease of a saturated edge ``u -> v`` (flow orientation): remove one unit
from the edge, then repair the excess at ``u`` by walking back through the
support to ``s`` and the deficit at ``v`` by walking forward to ``t``,
removing one unit along both walks. Finally one augmenting-path search
restores maximality. The walks may instead close a flow cycle (reaching
``v`` backwards, or ``s`` forwards); cancelling that cycle keeps the value
and is always possible, so no cycle-free invariant is needed.

Increase: one augmenting-path search in the residual graph. A single
search covers both orientations of an undirected edge, and unlike two
separate searches towards and away from the edge it cannot produce
conflicting paths.
"""
from __future__ import annotations

from collections import deque

from .errors import GraphStructureError, InvariantError
from .graph import WeightChange, WeightedGraph


class DynamicMaxFlow:
    """``work`` counts adjacency entries inspected, over all updates;
    ``last_unit_work`` holds the per-unit counts of the latest change."""

    def __init__(self, g: WeightedGraph, s, t):
        for x in (s, t):
            if not (isinstance(x, int) and 1 <= x <= g.n):
                raise GraphStructureError(f"node {x!r} not in 1..{g.n}")
        if s == t:
            raise ValueError("source and sink must differ")
        self.g = g
        self.s = s
        self.t = t
        self.flow = [0] * g.m
        self.value = 0
        self.work = 0
        self.searches = 0
        self.last_unit_work: list[int] = []
        self._unit_work = 0
        while True:
            path = self._augmenting_path()
            if path is None:
                break
            push = min(self._residual(x, eid) for x, _, eid in path)
            self._push(path, push)
            self.value += push
        self.work = 0
        self.searches = 0

    # -- residual graph ---------------------------------------------------

    def _residual(self, x, eid):
        """Residual capacity of edge ``eid`` when leaving node ``x``."""
        w = self.g.weights[eid]
        f = self.flow[eid]
        if x == self.g.tails[eid]:
            return w - f
        return f if self.g.directed else w + f

    def _push(self, path, amount):
        tails = self.g.tails
        for x, _, eid in path:
            if x == tails[eid]:
                self.flow[eid] += amount
            else:
                self.flow[eid] -= amount

    def _bfs(self, starts, targets, step):
        """Generic BFS; ``step(x)`` yields ``(y, eid)`` moves from ``x``.

        Returns the list of ``(from, to, eid)`` moves reaching the first
        target found, or None.
        """
        prev = {x: None for x in starts}
        queue = deque(starts)
        while queue:
            x = queue.popleft()
            if x in targets:
                moves = []
                while prev[x] is not None:
                    p, eid = prev[x]
                    moves.append((p, x, eid))
                    x = p
                moves.reverse()
                return moves
            for y, eid in step(x):
                if y not in prev:
                    prev[y] = (x, eid)
                    queue.append(y)
        return None

    def _residual_moves(self, x):
        for y, eid in self.g.incident[x]:
            self._unit_work += 1
            if self._residual(x, eid) > 0:
                yield y, eid

    def _support_forward(self, x):
        tails, flow = self.g.tails, self.flow
        for y, eid in self.g.incident[x]:
            self._unit_work += 1
            f = flow[eid]
            if (f > 0 and tails[eid] == x) or (f < 0 and tails[eid] == y):
                yield y, eid

    def _support_backward(self, x):
        tails, flow = self.g.tails, self.flow
        for y, eid in self.g.incident[x]:
            self._unit_work += 1
            f = flow[eid]
            if (f > 0 and tails[eid] == y) or (f < 0 and tails[eid] == x):
                yield y, eid

    def _augmenting_path(self):
        self.searches += 1
        return self._bfs([self.s], {self.t}, self._residual_moves)

    def _augment_once(self):
        path = self._augmenting_path()
        if path is not None:
            self._push(path, 1)
            self.value += 1

    def _unflow(self, moves):
        """Remove one unit along support moves (``x -> y`` carries flow)."""
        tails = self.g.tails
        for x, _, eid in moves:
            if x == tails[eid]:
                self.flow[eid] -= 1
            else:
                self.flow[eid] += 1

    # -- updates ----------------------------------------------------------

    def on_weight_change(self, ch: WeightChange):
        """Apply ``ch`` to the graph, one unit at a time."""
        g = self.g
        eid = g.edge_id(ch.u, ch.v)
        g.change_edge(eid, ch.delta)  # validates the full step up front
        g.weights[eid] -= ch.delta
        self.last_unit_work = []
        step = 1 if ch.delta > 0 else -1
        for _ in range(abs(ch.delta)):
            self._unit_work = 1
            if step > 0:
                self._increase_unit(eid)
            else:
                self._decrease_unit(eid)
            self.last_unit_work.append(self._unit_work)
            self.work += self._unit_work
        return self

    def on_weight_increase(self, u, v, units=1):
        return self.on_weight_change(WeightChange(u, v, units))

    def on_weight_decrease(self, u, v, units=1):
        return self.on_weight_change(WeightChange(u, v, -units))

    def _increase_unit(self, eid):
        self.g.weights[eid] += 1
        self._augment_once()

    def _decrease_unit(self, eid):
        g = self.g
        f = self.flow[eid]
        g.weights[eid] -= 1
        if abs(f) <= g.weights[eid]:
            return  # not saturated before the change
        u, v = (g.tails[eid], g.heads[eid]) if f > 0 else (g.heads[eid], g.tails[eid])
        self._unflow([(u, v, eid)])
        # u now has one unit of excess, v one unit of deficit
        back = self._bfs([u], {self.s, v}, self._support_backward)
        if back is None:
            raise InvariantError(f"no support path into node {u}")
        # back is a list of moves u -> ... -> end against the flow
        self._unflow([(y, x, eid2) for x, y, eid2 in back])
        if (back[-1][1] if back else u) == v:
            return  # cancelled a flow cycle through the edge; value unchanged
        # excess went back to s; push the deficit at v through to t (or s)
        fwd = self._bfs([v], {self.t, self.s}, self._support_forward)
        if fwd is None:
            raise InvariantError(f"no support path out of node {v}")
        self._unflow(fwd)
        if (fwd[-1][1] if fwd else v) == self.t:
            self.value -= 1
            self._augment_once()

    # -- queries ----------------------------------------------------------

    def query_value(self):
        return self.value

    def check_invariants(self, maximal=True):
        """Capacity, conservation, stored value and (optionally) maximality."""
        g = self.g
        excess = [0] * (g.n + 1)
        for eid, (u, v, w) in enumerate(g.edges()):
            f = self.flow[eid]
            low = 0 if g.directed else -w
            if not low <= f <= w:
                raise InvariantError(f"edge ({u},{v}) carries {f} with capacity {w}")
            excess[u] -= f
            excess[v] += f
        for x in range(1, g.n + 1):
            if x not in (self.s, self.t) and excess[x]:
                raise InvariantError(f"conservation violated at node {x}")
        if -excess[self.s] != self.value or excess[self.t] != self.value:
            raise InvariantError("stored value disagrees with the flow")
        if maximal:
            saved = self._unit_work
            if self._bfs([self.s], {self.t}, self._residual_moves) is not None:
                raise InvariantError("an augmenting path exists")
            self._unit_work = saved

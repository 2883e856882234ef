"""From-scratch solvers: recomputation baselines and correctness oracles.

Polynomial solvers (Dijkstra, Dinic, Kruskal, union-find) double as the
benchmark baselines. The ``bruteforce_*`` functions enumerate exhaustively
and refuse instances above their size guard instead of truncating.
"""
from __future__ import annotations

import heapq
import itertools
import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import (
    GraphStructureError,
    InvariantError,
    NoSpanningTreeError,
    SizeGuardError,
)
from .graph import WeightedGraph

INF = math.inf
ENUMERATION_LIMIT = 1 << 24


@dataclass
class OracleResult:
    value: Any
    witness: Any = None


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n + 1))
        self.size = [1] * (n + 1)
        self.components = n

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.components -= 1
        return True


def _check_node(g, x):
    if not (isinstance(x, int) and 1 <= x <= g.n):
        raise GraphStructureError(f"node {x!r} not in 1..{g.n}")


# -- shortest paths ---------------------------------------------------------


def dijkstra_all(g: WeightedGraph, s):
    """Distances and parent pointers from ``s`` to every node (index 0 unused)."""
    _check_node(g, s)
    dist = [INF] * (g.n + 1)
    parent = [0] * (g.n + 1)
    dist[s] = 0
    heap = [(0, s)]
    weights = g.weights
    while heap:
        d, x = heapq.heappop(heap)
        if d > dist[x]:
            continue
        for y, eid in g.out_adj[x]:
            nd = d + weights[eid]
            if nd < dist[y]:
                dist[y] = nd
                parent[y] = x
                heapq.heappush(heap, (nd, y))
    return dist, parent


def dijkstra_dist(g: WeightedGraph, s, t) -> OracleResult:
    """Shortest s-t distance with a witness path (``None`` if unreachable)."""
    _check_node(g, t)
    dist, parent = dijkstra_all(g, s)
    if dist[t] == INF:
        return OracleResult(INF, None)
    path = [t]
    while path[-1] != s:
        path.append(parent[path[-1]])
    path.reverse()
    return OracleResult(dist[t], path)


def path_weight(g: WeightedGraph, path) -> int:
    return sum(g.weight(a, b) for a, b in zip(path, path[1:]))


def bruteforce_dist(g: WeightedGraph, s, t, max_nodes=9):
    """Minimum over all simple s-t paths, by DFS enumeration."""
    _check_node(g, s)
    _check_node(g, t)
    if g.n > max_nodes:
        raise SizeGuardError(f"path enumeration limited to {max_nodes} nodes")
    if s == t:
        return 0
    best = INF
    on_path = [False] * (g.n + 1)

    def walk(x, acc):
        nonlocal best
        if x == t:
            best = min(best, acc)
            return
        on_path[x] = True
        for y, eid in g.out_adj[x]:
            if not on_path[y]:
                walk(y, acc + g.weights[eid])
        on_path[x] = False

    walk(s, 0)
    return best


# -- maximum flow -----------------------------------------------------------


def static_maxflow(g: WeightedGraph, s, t) -> OracleResult:
    """Dinic's blocking-flow algorithm.

    The witness is a list of signed net flows indexed by edge id, positive in
    the stored ``tail -> head`` orientation.
    """
    _check_node(g, s)
    _check_node(g, t)
    if s == t:
        raise ValueError("source and sink must differ")
    # arc 2k is tail->head of edge k, arc 2k+1 its partner
    head = []
    cap = []
    adj = [[] for _ in range(g.n + 1)]
    for eid, (u, v, w) in enumerate(g.edges()):
        head += [v, u]
        cap += [w, 0 if g.directed else w]
        adj[u].append(2 * eid)
        adj[v].append(2 * eid + 1)
    value = 0
    while True:
        level = [-1] * (g.n + 1)
        level[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for a in adj[x]:
                if cap[a] > 0 and level[head[a]] < 0:
                    level[head[a]] = level[x] + 1
                    queue.append(head[a])
        if level[t] < 0:
            break
        it = [0] * (g.n + 1)
        while True:
            # walk an admissible path from s, retreating out of dead ends
            stack = []
            x = s
            while x != t:
                while it[x] < len(adj[x]):
                    a = adj[x][it[x]]
                    if cap[a] > 0 and level[head[a]] == level[x] + 1:
                        break
                    it[x] += 1
                else:
                    if not stack:
                        break
                    level[x] = -1
                    a = stack.pop()
                    x = head[a ^ 1]
                    it[x] += 1
                    continue
                stack.append(a)
                x = head[a]
            if x != t:
                break
            push = min(cap[a] for a in stack)
            for a in stack:
                cap[a] -= push
                cap[a ^ 1] += push
            value += push
    flow = [g.weights[eid] - cap[2 * eid] for eid in range(g.m)]
    return OracleResult(value, flow)


def flow_value(g: WeightedGraph, s, t, flow) -> int:
    """Validate a signed per-edge flow and return its value.

    Raises InvariantError on capacity or conservation violations.
    """
    excess = [0] * (g.n + 1)
    for eid, (u, v, w) in enumerate(g.edges()):
        f = flow[eid]
        low = 0 if g.directed else -w
        if not low <= f <= w:
            raise InvariantError(f"edge ({u},{v}) carries {f}, capacity {w}")
        excess[u] -= f
        excess[v] += f
    for x in range(1, g.n + 1):
        if x not in (s, t) and excess[x] != 0:
            raise InvariantError(f"conservation violated at node {x} (excess {excess[x]})")
    if excess[s] != -excess[t]:
        raise InvariantError("source outflow differs from sink inflow")
    return excess[t]


def bruteforce_min_cut(g: WeightedGraph, s, t, max_nodes=16) -> int:
    """Minimum s-t cut capacity by enumerating every source side."""
    if g.n > max_nodes:
        raise SizeGuardError(f"cut enumeration limited to {max_nodes} nodes")
    others = [x for x in range(1, g.n + 1) if x not in (s, t)]
    best = INF
    for k in range(len(others) + 1):
        for side in itertools.combinations(others, k):
            src = set(side)
            src.add(s)
            cut = 0
            for u, v, w in g.edges():
                if (u in src) != (v in src) and (not g.directed or u in src):
                    cut += w
            best = min(best, cut)
    return best


def _simple_paths(g, s, t, limit):
    """Simple s-t paths as tuples of edge ids."""
    paths = []
    on_path = [False] * (g.n + 1)
    stack = []

    def walk(x):
        if x == t:
            paths.append(tuple(stack))
            if len(paths) > limit:
                raise SizeGuardError(f"more than {limit} simple s-t paths")
            return
        on_path[x] = True
        for y, eid in g.out_adj[x]:
            if not on_path[y]:
                stack.append(eid)
                walk(y)
                stack.pop()
        on_path[x] = False

    walk(s)
    return paths


def bruteforce_maxflow(g: WeightedGraph, s, t, max_paths=400) -> int:
    """Maximum flow as the best integral path decomposition.

    Every integral flow splits into simple s-t paths (plus value-free cycles)
    with no edge used in both directions, so the maximum of ``sum(x_P)``
    subject to ``sum_{P ∋ e} x_P <= w(e)`` is the maximum flow value. The
    multiplicities are enumerated path by path with memoisation.
    """
    if s == t:
        raise ValueError("source and sink must differ")
    paths = _simple_paths(g, s, t, max_paths)
    caps0 = tuple(g.weights)

    @lru_cache(maxsize=None)
    def best(i, caps):
        if i == len(paths):
            return 0
        path = paths[i]
        top = min((caps[e] for e in path), default=0)
        result = 0
        for x in range(top, -1, -1):
            c = list(caps)
            for e in path:
                c[e] -= x
            result = max(result, x + best(i + 1, tuple(c)))
        return result

    return best(0, caps0)


# -- spanning trees ---------------------------------------------------------


def kruskal_mst(g: WeightedGraph) -> OracleResult:
    """Minimum spanning tree weight; witness is the sorted list of tree edge ids.

    Ties between equal weights go to the smaller edge id.
    """
    order = sorted(range(g.m), key=lambda e: (g.weights[e], e))
    uf = UnionFind(g.n)
    tree = []
    total = 0
    for eid in order:
        if uf.union(g.tails[eid], g.heads[eid]):
            tree.append(eid)
            total += g.weights[eid]
    if uf.components != 1:
        raise NoSpanningTreeError(f"graph has {uf.components} components")
    return OracleResult(total, sorted(tree))


def is_spanning_tree(g: WeightedGraph, eids) -> bool:
    eids = list(eids)
    if len(eids) != g.n - 1:
        return False
    uf = UnionFind(g.n)
    return all(uf.union(g.tails[e], g.heads[e]) for e in eids)


def bruteforce_mst(g: WeightedGraph) -> int:
    """Minimum over every (n-1)-subset of edges that forms a spanning tree."""
    if math.comb(g.m, g.n - 1) > 5_000_000:
        raise SizeGuardError("too many edge subsets to enumerate")
    best = INF
    for subset in itertools.combinations(range(g.m), g.n - 1):
        if is_spanning_tree(g, subset):
            best = min(best, sum(g.weights[e] for e in subset))
    if best == INF:
        raise NoSpanningTreeError("graph is disconnected")
    return best


def connectivity(g_or_n, edges=None) -> bool:
    """True iff the graph has one connected component; weights are ignored.

    Accepts a WeightedGraph, or a node count plus an iterable of ``(u, v)``.
    """
    if isinstance(g_or_n, WeightedGraph):
        n = g_or_n.n
        edges = zip(g_or_n.tails, g_or_n.heads)
    else:
        n = g_or_n
    uf = UnionFind(n)
    for u, v in edges or ():
        uf.union(u, v)
    return uf.components == 1


# -- matchings --------------------------------------------------------------


def _two_coloring(g):
    if g.left is not None:
        return list(g.left_nodes()), list(g.right_nodes())
    color = [None] * (g.n + 1)
    for root in range(1, g.n + 1):
        if color[root] is not None:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, _ in g.incident[x]:
                if color[y] is None:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    side = [x for x in range(1, g.n + 1) if color[x] == 0]
    other = [x for x in range(1, g.n + 1) if color[x] == 1]
    return side, other


def _mwm_bipartite(g, rows, cols, weight):
    if len(cols) > len(rows):
        rows, cols = cols, rows
    if len(rows) * (1 << len(cols)) > ENUMERATION_LIMIT:
        raise SizeGuardError("bipartite instance too large for exhaustive matching")
    col_bit = {x: 1 << i for i, x in enumerate(cols)}
    options = [[(col_bit[y], eid) for y, eid in g.incident[x]] for x in rows]

    @lru_cache(maxsize=None)
    def best(i, used):
        # every matching restricted to rows[i:] that avoids the columns in `used`
        if i == len(rows):
            return 0
        top = best(i + 1, used)
        for bit, eid in options[i]:
            if not used & bit:
                top = max(top, weight(eid) + best(i + 1, used | bit))
        return top

    value = best(0, 0)
    chosen = []
    used = 0
    for i in range(len(rows)):
        target = best(i, used)
        if best(i + 1, used) == target:
            continue
        for bit, eid in options[i]:
            if not used & bit and weight(eid) + best(i + 1, used | bit) == target:
                chosen.append(eid)
                used |= bit
                break
    return value, sorted(chosen)


def _mwm_general(g, weight):
    if g.n > 24:
        raise SizeGuardError("general instance too large for exhaustive matching")

    @lru_cache(maxsize=None)
    def best(free):
        if not free:
            return 0
        x = (free & -free).bit_length()
        rest = free & ~(1 << (x - 1))
        top = best(rest)
        for y, eid in g.incident[x]:
            bit = 1 << (y - 1)
            if rest & bit:
                top = max(top, weight(eid) + best(rest & ~bit))
        return top

    full = (1 << g.n) - 1
    value = best(full)
    chosen = []
    free = full
    while free:
        x = (free & -free).bit_length()
        rest = free & ~(1 << (x - 1))
        target = best(free)
        if best(rest) != target:
            for y, eid in g.incident[x]:
                bit = 1 << (y - 1)
                if rest & bit and weight(eid) + best(rest & ~bit) == target:
                    chosen.append(eid)
                    rest &= ~bit
                    break
        free = rest
    return value, sorted(chosen)


def _mwm(g, weight):
    sides = _two_coloring(g)
    if sides is not None:
        value, chosen = _mwm_bipartite(g, *sides, weight)
    else:
        value, chosen = _mwm_general(g, weight)
    return OracleResult(value, chosen)


def bruteforce_mwm(g: WeightedGraph) -> OracleResult:
    """Exact maximum weight matching by exhaustive (memoised) enumeration.

    Bipartite graphs are enumerated row by row with a bitmask over the
    smaller side; others with a bitmask over all nodes.
    """
    return _mwm(g, g.weights.__getitem__)


def bruteforce_mcm(g: WeightedGraph) -> OracleResult:
    return _mwm(g, lambda eid: 1)


def static_mwm(g: WeightedGraph) -> int:
    """Maximum weight bipartite matching via a rectangular assignment.

    Non-edges get weight 0, which never beats leaving a node unmatched.
    """
    sides = _two_coloring(g)
    if sides is None:
        raise GraphStructureError("static_mwm needs a bipartite graph")
    rows, cols = sides
    if not rows or not cols:
        return 0
    row_at = {x: i for i, x in enumerate(rows)}
    col_at = {x: j for j, x in enumerate(cols)}
    gain = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for u, v, w in g.edges():
        if u in row_at:
            gain[row_at[u], col_at[v]] = w
        else:
            gain[row_at[v], col_at[u]] = w
    r, c = linear_sum_assignment(gain, maximize=True)
    return int(gain[r, c].sum())


def is_matching(g: WeightedGraph, eids) -> bool:
    seen = set()
    for e in eids:
        for x in g.endpoints(e):
            if x in seen:
                return False
            seen.add(x)
    return True


def _capacities(g, b):
    if isinstance(b, dict):
        caps = [0] + [b.get(x, 0) for x in range(1, g.n + 1)]
    else:
        b = list(b)
        if len(b) != g.n:
            raise ValueError(f"b-vector needs {g.n} entries, got {len(b)}")
        caps = [0] + b
    if any(c < 0 for c in caps):
        raise ValueError("b-vector entries must be nonnegative")
    return caps


def bruteforce_b_matching(g: WeightedGraph, b, max_edges=24) -> OracleResult:
    """Maximum weight edge set with at most ``b[v]`` chosen edges at each node.

    ``b`` is a dict keyed by node or a sequence whose i-th entry belongs to
    node i+1. Branch and bound over edge subsets.
    """
    caps = _capacities(g, b)
    if g.m > max_edges:
        raise SizeGuardError(f"b-matching enumeration limited to {max_edges} edges")
    order = sorted(range(g.m), key=lambda e: -g.weights[e])
    suffix = [0] * (len(order) + 1)
    for i in range(len(order) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + g.weights[order[i]]
    best_value = 0
    best_set: list[int] = []
    chosen: list[int] = []

    def search(i, acc):
        nonlocal best_value, best_set
        if acc > best_value:
            best_value, best_set = acc, list(chosen)
        if i == len(order) or acc + suffix[i] <= best_value:
            return
        e = order[i]
        u, v = g.endpoints(e)
        if caps[u] and caps[v]:
            caps[u] -= 1
            caps[v] -= 1
            chosen.append(e)
            search(i + 1, acc + g.weights[e])
            chosen.pop()
            caps[u] += 1
            caps[v] += 1
        search(i + 1, acc)

    search(0, 0)
    return OracleResult(best_value, sorted(best_set))

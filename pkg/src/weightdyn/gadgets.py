"""Lower-bound gadgets: Boolean vector-matrix-vector products as graph problems.

``SpGadget`` encodes a Boolean matrix ``M`` and vectors ``u, v`` in a full
bipartite graph whose s-t distance is 3 when ``u^T M v = 1`` and at least 5
otherwise. Each new vector pair only touches the s- and t-star edges, by
+-2 each, so a stream of products becomes a stream of bounded weight
changes plus one distance query per round.

The shift transforms turn an arbitrary bipartite subgraph of K_{N,N} into
weighted complete bipartite graphs whose optimum matching weight and
semi-matching cost are affine in the subgraph's maximum matching size.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import GraphStructureError, ParseError
from .graph import WeightChange, WeightedGraph, _content_lines, _int
from .sssp import DynamicSSSP

LONG, SHORT = 3, 1


def _bits(x, n=None, name="vector"):
    arr = np.asarray(x, dtype=bool)
    if arr.ndim != 1 or (n is not None and arr.shape[0] != n):
        raise ValueError(f"{name} must be a length-{n} Boolean vector")
    return arr


def boolean_product(M, u, v) -> bool:
    M = np.asarray(M, dtype=bool)
    return bool(np.any(np.outer(u, v) & M))


@dataclass
class OuMvInstance:
    """Boolean ``n x n`` matrix plus an ordered list of ``(u, v)`` rounds."""

    matrix: np.ndarray
    rounds: list = field(default_factory=list)

    def __post_init__(self):
        self.matrix = np.asarray(self.matrix, dtype=bool)
        if self.matrix.ndim != 2 or self.matrix.shape[0] != self.matrix.shape[1]:
            raise ValueError("matrix must be square")
        if self.n == 0:
            raise ValueError("matrix must be non-empty")
        self.rounds = [(_bits(u, self.n, "u"), _bits(v, self.n, "v")) for u, v in self.rounds]

    @property
    def n(self):
        return self.matrix.shape[0]

    def direct_answers(self):
        return [boolean_product(self.matrix, u, v) for u, v in self.rounds]


def random_oumv(n, rounds, density, seed, vector_density=None) -> OuMvInstance:
    """Random instance. Vectors default to about 1.5 set bits each, which keeps
    the answers mixed instead of almost always 1."""
    if not 0 <= density <= 1:
        raise ValueError("density must be in [0, 1]")
    rng = np.random.default_rng(seed)
    p = min(1.0, 1.5 / n) if vector_density is None else vector_density
    M = rng.random((n, n)) < density
    pairs = [(rng.random(n) < p, rng.random(n) < p) for _ in range(rounds)]
    return OuMvInstance(M, pairs)


def _row(bits):
    return "".join("1" if b else "0" for b in bits)


def serialize_oumv(inst: OuMvInstance) -> str:
    lines = [f"omv {inst.n} {len(inst.rounds)}"]
    lines += [_row(row) for row in inst.matrix]
    for u, v in inst.rounds:
        lines += [_row(u), _row(v)]
    return "\n".join(lines) + "\n"


def parse_oumv(text: str) -> OuMvInstance:
    lines = list(_content_lines(text))
    if not lines or lines[0][1][0] != "omv" or len(lines[0][1]) != 3:
        raise ParseError("expected header 'omv <n> <rounds>'", lines[0][0] if lines else None)
    lineno, toks = lines[0]
    n, k = _int(toks[1], lineno), _int(toks[2], lineno)
    if n < 1 or k < 0:
        raise ParseError("need n >= 1 and rounds >= 0", lineno)
    body = lines[1:]
    if len(body) != n + 2 * k:
        raise ParseError(f"expected {n + 2 * k} bit rows, found {len(body)}", lineno)
    rows = []
    for lineno, toks in body:
        bits = "".join(toks)
        if len(bits) != n or set(bits) - {"0", "1"}:
            raise ParseError(f"expected {n} bits", lineno)
        rows.append([c == "1" for c in bits])
    rounds = [(rows[n + 2 * i], rows[n + 2 * i + 1]) for i in range(k)]
    return OuMvInstance(np.array(rows[:n], dtype=bool), rounds)


class SpGadget:
    """The full bipartite graph on ``(A + t)`` versus ``(B + s)``.

    Node ids: ``a_i = i + 1``, ``b_j = n + j + 1`` (0-based ``i, j``),
    ``s = 2n + 1``, ``t = 2n + 2``. Edge weights are 1 for a set bit and 3
    otherwise.
    """

    def __init__(self, matrix):
        M = np.asarray(matrix, dtype=bool)
        if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] == 0:
            raise ValueError("matrix must be square and non-empty")
        n = self.n = M.shape[0]
        self.matrix = M
        self.s, self.t = 2 * n + 1, 2 * n + 2
        edges = [(self.a(i), self.b(j), 3 - 2 * int(M[i, j])) for i in range(n) for j in range(n)]
        edges += [(self.a(i), self.s, LONG) for i in range(n)]
        edges += [(self.b(j), self.t, LONG) for j in range(n)]
        self.graph = WeightedGraph(2 * n + 2, edges, W=3)

    def a(self, i):
        return i + 1

    def b(self, j):
        return self.n + j + 1

    @property
    def u(self):
        return np.array([self.graph.weight(self.s, self.a(i)) == SHORT for i in range(self.n)])

    @property
    def v(self):
        return np.array([self.graph.weight(self.t, self.b(j)) == SHORT for j in range(self.n)])


def build_sp_gadget(matrix) -> SpGadget:
    """Gadget for ``matrix`` with all-zero vectors."""
    return SpGadget(matrix)


def set_round_vectors(gadget: SpGadget, u, v) -> list[WeightChange]:
    """Weight changes that move the gadget's star edges to encode ``u`` and ``v``.

    Only edges whose weight actually differs are listed, so each change is
    +-2 and there are at most ``2n`` of them. The graph itself is left for
    the caller to update.
    """
    n = gadget.n
    u, v = _bits(u, n, "u"), _bits(v, n, "v")
    g = gadget.graph
    changes = []
    for hub, node, bits in ((gadget.s, gadget.a, u), (gadget.t, gadget.b, v)):
        for i in range(n):
            target = 3 - 2 * int(bits[i])
            current = g.weight(hub, node(i))
            if target != current:
                changes.append(WeightChange(hub, node(i), target - current))
    return changes


def sp_gadget_decision(distance) -> bool:
    return distance < 5


@dataclass
class OuMvRun:
    outputs: list
    changes_per_round: list
    queries: int
    work: int


def solve_oumv_via_sssp(inst: OuMvInstance) -> OuMvRun:
    """Answer every round with weight changes and one distance query on a gadget."""
    gadget = build_sp_gadget(inst.matrix)
    sp = DynamicSSSP(gadget.graph, gadget.s, gadget.t)
    outputs, changes, queries = [], [], 0
    for u, v in inst.rounds:
        batch = set_round_vectors(gadget, u, v)
        for ch in batch:
            sp.on_weight_change(ch)
        changes.append(len(batch))
        queries += 1
        outputs.append(sp_gadget_decision(sp.query_dist()))
    return OuMvRun(outputs, changes, queries, sp.work)


def gadget_distance(M, u, v) -> int:
    """Static s-t distance of the gadget for ``(M, u, v)``."""
    from .oracles import dijkstra_dist

    gadget = build_sp_gadget(M)
    for ch in set_round_vectors(gadget, u, v):
        gadget.graph.apply_change(ch)
    return dijkstra_dist(gadget.graph, gadget.s, gadget.t).value


def all_small_instances(n):
    """Every ``(M, u, v)`` triple of dimension ``n`` (2^(n^2 + 2n) of them)."""
    for bits in itertools.product((False, True), repeat=n * n + 2 * n):
        arr = np.array(bits, dtype=bool)
        yield arr[: n * n].reshape(n, n), arr[n * n : n * n + n], arr[n * n + n :]


# -- weight-shift transforms ------------------------------------------------


def _check_subgraph(N, edges):
    edges = list(edges)
    for l, r in edges:
        if not (1 <= l <= N and N + 1 <= r <= 2 * N):
            raise GraphStructureError(f"edge ({l},{r}) is not in L x R of K_{{{N},{N}}}")
    return set(edges)


def subgraph_graph(N, edges) -> WeightedGraph:
    """The subgraph itself, unit weights, on the K_{N,N} node set."""
    chosen = _check_subgraph(N, edges)
    return WeightedGraph(2 * N, [(l, r, 1) for l, r in sorted(chosen)], W=1, left=N)


def _complete(N, chosen, inside, outside):
    edges = [
        (l, r, inside if (l, r) in chosen else outside)
        for l in range(1, N + 1)
        for r in range(N + 1, 2 * N + 1)
    ]
    return WeightedGraph(2 * N, edges, W=2, left=N)


def matching_shift_transform(N, edges) -> WeightedGraph:
    """K_{N,N} with weight 2 on subgraph edges and 1 elsewhere.

    Its maximum matching weight is ``N + MCM(subgraph)``.
    """
    return _complete(N, _check_subgraph(N, edges), 2, 1)


def semimatching_shift_transform(N, edges) -> WeightedGraph:
    """K_{N,N} with weight 1 on subgraph edges and 2 elsewhere.

    Its minimum semi-matching cost is ``2N - MCM(subgraph)``.
    """
    return _complete(N, _check_subgraph(N, edges), 1, 2)


def random_subgraph(N, density, rng):
    """Random edge set of K_{N,N}; ``rng`` is a ``random.Random``."""
    return [
        (l, r)
        for l in range(1, N + 1)
        for r in range(N + 1, 2 * N + 1)
        if rng.random() < density
    ]

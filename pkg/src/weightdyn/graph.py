"""Fixed-topology graphs with bounded positive integer edge weights."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphStructureError, ParseError, ValidationError, WeightRangeError


@dataclass(frozen=True)
class WeightChange:
    """Additive change of one edge weight."""

    u: int
    v: int
    delta: int

    def inverse(self) -> "WeightChange":
        return WeightChange(self.u, self.v, -self.delta)


class WeightedGraph:
    """Simple graph on nodes 1..n with integer weights in [1, W].

    Edges are identified by their insertion index (``eid``). Undirected edges
    are stored once, with ``u < v``. Each node keeps three adjacency lists of
    ``(neighbor, eid)`` pairs: ``out_adj`` (arcs leaving the node), ``in_adj``
    (arcs entering it) and ``incident`` (every edge touching it). For
    undirected graphs all three coincide.

    ``left`` is set for bipartite graphs: nodes ``1..left`` form one side.
    """

    def __init__(self, n, edges=(), W=None, directed=False, left=None):
        if n < 1:
            raise GraphStructureError("a graph needs at least one node")
        self.n = n
        self.directed = directed
        self.left = left
        self.tails: list[int] = []
        self.heads: list[int] = []
        self.weights: list[int] = []
        self._index: dict[tuple[int, int], int] = {}
        self.out_adj: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
        if directed:
            self.in_adj: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
            self.incident: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
        else:
            self.in_adj = self.out_adj
            self.incident = self.out_adj
        edges = list(edges)
        if W is None:
            W = max((e[2] for e in edges), default=1)
        if W < 1:
            raise ValidationError("weight bound W must be >= 1")
        self.W = W
        if left is not None and not 0 <= left <= n:
            raise GraphStructureError(f"left side size {left} out of range for n={n}")
        for u, v, w in edges:
            self.add_edge(u, v, w)

    # -- construction -----------------------------------------------------

    def add_edge(self, u, v, w) -> int:
        self._check_node(u)
        self._check_node(v)
        if u == v:
            raise ValidationError(f"self-loop at node {u}")
        if not self.directed and u > v:
            u, v = v, u
        if (u, v) in self._index:
            raise ValidationError(f"duplicate edge ({u},{v})")
        if self.left is not None and (u <= self.left) == (v <= self.left):
            raise GraphStructureError(f"edge ({u},{v}) does not cross the bipartition")
        if not 1 <= w <= self.W:
            raise WeightRangeError(f"weight {w} of edge ({u},{v}) outside [1, {self.W}]")
        eid = len(self.weights)
        self.tails.append(u)
        self.heads.append(v)
        self.weights.append(w)
        self._index[(u, v)] = eid
        self.out_adj[u].append((v, eid))
        if self.directed:
            self.in_adj[v].append((u, eid))
            self.incident[u].append((v, eid))
            self.incident[v].append((u, eid))
        else:
            self.out_adj[v].append((u, eid))
        return eid

    def _check_node(self, x):
        if not (isinstance(x, int) and 1 <= x <= self.n):
            raise GraphStructureError(f"node {x!r} not in 1..{self.n}")

    # -- queries ----------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.weights)

    def edge_id(self, u, v) -> int:
        key = (u, v) if self.directed or u < v else (v, u)
        try:
            return self._index[key]
        except KeyError:
            raise GraphStructureError(f"no edge ({u},{v})") from None

    def has_edge(self, u, v) -> bool:
        key = (u, v) if self.directed or u < v else (v, u)
        return key in self._index

    def weight(self, u, v) -> int:
        return self.weights[self.edge_id(u, v)]

    def endpoints(self, eid) -> tuple[int, int]:
        return self.tails[eid], self.heads[eid]

    def edges(self):
        """Yield ``(u, v, w)`` in edge-id order."""
        return zip(self.tails, self.heads, self.weights)

    def degree(self, x) -> int:
        return len(self.incident[x])

    def total_weight(self) -> int:
        return sum(self.weights)

    def left_nodes(self):
        if self.left is None:
            raise GraphStructureError("graph has no declared bipartition")
        return range(1, self.left + 1)

    def right_nodes(self):
        if self.left is None:
            raise GraphStructureError("graph has no declared bipartition")
        return range(self.left + 1, self.n + 1)

    # -- mutation ---------------------------------------------------------

    def change_edge(self, eid, delta) -> int:
        """Add ``delta`` to edge ``eid``; atomic, rejects leaving [1, W]."""
        new = self.weights[eid] + delta
        if not 1 <= new <= self.W:
            u, v = self.endpoints(eid)
            raise WeightRangeError(
                f"edge ({u},{v}): weight {self.weights[eid]} {delta:+d} would leave [1, {self.W}]"
            )
        self.weights[eid] = new
        return new

    def apply_change(self, ch: WeightChange) -> int:
        return self.change_edge(self.edge_id(ch.u, ch.v), ch.delta)

    def copy(self) -> "WeightedGraph":
        return WeightedGraph(self.n, self.edges(), W=self.W, directed=self.directed, left=self.left)

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.W == other.W
            and self.directed == other.directed
            and self.left == other.left
            and list(self.edges()) == list(other.edges())
        )

    def __repr__(self):
        kind = "directed" if self.directed else "undirected"
        if self.left is not None:
            kind = f"bipartite {self.left}+{self.n - self.left}"
        return f"<WeightedGraph {kind} n={self.n} m={self.m} W={self.W}>"


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line.split()


def _int(tok, lineno):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def parse_graph(text: str) -> WeightedGraph:
    """Parse the ``p``/``e`` line format into a graph."""
    g = None
    expected_m = 0
    header_line = None
    for lineno, toks in _content_lines(text):
        if toks[0] == "p":
            if g is not None:
                raise ParseError("second header line", lineno)
            header_line = lineno
            if len(toks) >= 2 and toks[1] == "bipartite":
                if len(toks) != 6:
                    raise ParseError("expected 'p bipartite <L> <R> <m> <W>'", lineno)
                nl, nr, expected_m, W = (_int(t, lineno) for t in toks[2:])
                n, directed, left = nl + nr, False, nl
            else:
                if len(toks) != 5 or toks[1] not in ("directed", "undirected"):
                    raise ParseError("expected 'p <directed|undirected> <n> <m> <W>'", lineno)
                n, expected_m, W = (_int(t, lineno) for t in toks[2:])
                directed, left = toks[1] == "directed", None
            try:
                g = WeightedGraph(n, W=W, directed=directed, left=left)
            except (GraphStructureError, ValidationError) as exc:
                raise ValidationError(str(exc), lineno) from None
        elif toks[0] == "e":
            if g is None:
                raise ParseError("edge before header", lineno)
            if len(toks) != 4:
                raise ParseError("expected 'e <u> <v> <w>'", lineno)
            u, v, w = (_int(t, lineno) for t in toks[1:])
            try:
                g.add_edge(u, v, w)
            except (GraphStructureError, ValidationError, WeightRangeError) as exc:
                raise ValidationError(str(exc), lineno) from None
        else:
            raise ParseError(f"unknown line type {toks[0]!r}", lineno)
    if g is None:
        raise ParseError("missing header line")
    if g.m != expected_m:
        raise ValidationError(f"header declares {expected_m} edges, found {g.m}", header_line)
    return g


def serialize_graph(g: WeightedGraph) -> str:
    if g.left is not None:
        lines = [f"p bipartite {g.left} {g.n - g.left} {g.m} {g.W}"]
    else:
        kind = "directed" if g.directed else "undirected"
        lines = [f"p {kind} {g.n} {g.m} {g.W}"]
    lines.extend(f"e {u} {v} {w}" for u, v, w in g.edges())
    return "\n".join(lines) + "\n"

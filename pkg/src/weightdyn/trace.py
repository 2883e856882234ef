"""Event streams replayed against a fixed-topology graph."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GraphStructureError, ParseError, ValidationError
from .graph import WeightChange, WeightedGraph, _content_lines, _int

QUERY_KINDS = ("dist", "flow", "mwm", "mst", "conn")


@dataclass(frozen=True)
class Query:
    kind: str

    def __post_init__(self):
        if self.kind not in QUERY_KINDS:
            raise ValueError(f"unknown query kind {self.kind!r}")


@dataclass(frozen=True)
class AddEdge:
    """Connectivity-adapter event: edge appears in the simulated graph."""

    u: int
    v: int


@dataclass(frozen=True)
class RemoveEdge:
    u: int
    v: int


@dataclass
class ChangeTrace:
    """Ordered events with an optional per-event bound ``bound`` on |delta|.

    ``bound=None`` means unbounded.
    """

    bound: int | None = None
    events: list = field(default_factory=list)

    def changes(self):
        return [ev for ev in self.events if isinstance(ev, WeightChange)]

    def validate(self, g: WeightedGraph, max_delta=None):
        """Check the declared bound and replay the weights without touching ``g``.

        Raises ValidationError naming the first offending event (0-based).
        """
        limits = [b for b in (self.bound, max_delta) if b is not None]
        weights = list(g.weights)
        for i, ev in enumerate(self.events):
            if not isinstance(ev, WeightChange):
                continue
            for c in limits:
                if abs(ev.delta) > c:
                    raise ValidationError(f"event {i}: |delta|={abs(ev.delta)} exceeds bound {c}")
            try:
                eid = g.edge_id(ev.u, ev.v)
            except GraphStructureError as exc:
                raise ValidationError(f"event {i}: {exc}") from None
            weights[eid] += ev.delta
            if not 1 <= weights[eid] <= g.W:
                raise ValidationError(
                    f"event {i}: weight of ({ev.u},{ev.v}) becomes {weights[eid]}, outside [1, {g.W}]"
                )


def parse_trace(text: str, graph: WeightedGraph | None = None) -> ChangeTrace:
    """Parse a trace file.

    Absolute changes (``c u v =w``) are converted to deltas, which requires
    ``graph`` so the current weight of each edge can be tracked.
    """
    trace = None
    weights = list(graph.weights) if graph is not None else None
    for lineno, toks in _content_lines(text):
        head = toks[0]
        if head == "t":
            if trace is not None:
                raise ParseError("second header line", lineno)
            if len(toks) != 2:
                raise ParseError("expected 't <c|unbounded>'", lineno)
            if toks[1] == "unbounded":
                bound = None
            else:
                bound = _int(toks[1], lineno)
                if bound < 0:
                    raise ValidationError("change bound must be nonnegative", lineno)
            trace = ChangeTrace(bound)
            continue
        if trace is None:
            raise ParseError("event before 't' header", lineno)
        if head == "c":
            if len(toks) != 4:
                raise ParseError("expected 'c <u> <v> <+d|-d|=w>'", lineno)
            u, v = _int(toks[1], lineno), _int(toks[2], lineno)
            arg = toks[3]
            if arg.startswith("="):
                if graph is None:
                    raise ParseError("absolute change needs the graph to resolve", lineno)
                try:
                    eid = graph.edge_id(u, v)
                except GraphStructureError as exc:
                    raise ValidationError(str(exc), lineno) from None
                target = _int(arg[1:], lineno)
                delta = target - weights[eid]
            elif arg[:1] in "+-" and len(arg) > 1:
                delta = _int(arg, lineno)
            else:
                raise ParseError(f"bad change {arg!r}; use +d, -d or =w", lineno)
            if weights is not None:
                try:
                    weights[graph.edge_id(u, v)] += delta
                except GraphStructureError as exc:
                    raise ValidationError(str(exc), lineno) from None
            if trace.bound is not None and abs(delta) > trace.bound:
                raise ValidationError(f"|delta|={abs(delta)} exceeds bound {trace.bound}", lineno)
            trace.events.append(WeightChange(u, v, delta))
        elif head == "q":
            if len(toks) != 2 or toks[1] not in QUERY_KINDS:
                raise ParseError(f"expected 'q <{'|'.join(QUERY_KINDS)}>'", lineno)
            trace.events.append(Query(toks[1]))
        elif head in ("a", "r"):
            if len(toks) != 3:
                raise ParseError(f"expected '{head} <u> <v>'", lineno)
            u, v = _int(toks[1], lineno), _int(toks[2], lineno)
            trace.events.append(AddEdge(u, v) if head == "a" else RemoveEdge(u, v))
        else:
            raise ParseError(f"unknown event type {head!r}", lineno)
    if trace is None:
        raise ParseError("missing 't' header line")
    return trace


def serialize_trace(trace: ChangeTrace) -> str:
    lines = [f"t {'unbounded' if trace.bound is None else trace.bound}"]
    for ev in trace.events:
        if isinstance(ev, WeightChange):
            lines.append(f"c {ev.u} {ev.v} {ev.delta:+d}")
        elif isinstance(ev, Query):
            lines.append(f"q {ev.kind}")
        elif isinstance(ev, AddEdge):
            lines.append(f"a {ev.u} {ev.v}")
        elif isinstance(ev, RemoveEdge):
            lines.append(f"r {ev.u} {ev.v}")
        else:
            raise TypeError(f"not a trace event: {ev!r}")
    return "\n".join(lines) + "\n"

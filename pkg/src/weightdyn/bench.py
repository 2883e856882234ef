"""Trace replay: dynamic structures against from-scratch recomputation."""
from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import ValidationError
from .graph import WeightChange, WeightedGraph
from .maxflow import DynamicMaxFlow
from .matching import DynamicMatching
from .mst import ConnectivityAdapter, DynamicMST
from .oracles import connectivity, dijkstra_dist, kruskal_mst, static_maxflow, static_mwm
from .sssp import DynamicSSSP
from .trace import AddEdge, ChangeTrace, Query, RemoveEdge

PROBLEMS = ("dist", "flow", "mwm", "mst", "conn")
OP_NAMES = {WeightChange: "change", AddEdge: "add", RemoveEdge: "remove"}
CSV_HEADER = "event_index,op,dynamic_ns,static_ns,dynamic_work,result_dynamic,result_static,match"


@dataclass
class BenchRecord:
    event_index: int
    op: str
    dynamic_ns: int
    static_ns: int | None
    dynamic_work: int
    result_dynamic: object
    result_static: object = None
    match: bool | None = None

    def csv_row(self) -> str:
        def cell(x):
            if x is None:
                return ""
            if isinstance(x, bool):
                return "1" if x else "0"
            return str(x)

        return ",".join(
            cell(x)
            for x in (
                self.event_index,
                self.op,
                self.dynamic_ns,
                self.static_ns,
                self.dynamic_work,
                self.result_dynamic,
                self.result_static,
                self.match,
            )
        )


class _Problem:
    """Uniform face over one dynamic structure and its static baseline."""

    def __init__(self, problem, g: WeightedGraph, s=None, t=None):
        self.problem = problem
        self.g = g
        s = 1 if s is None else s
        t = g.n if t is None else t
        if problem == "dist":
            self.dyn = DynamicSSSP(g, s, t)
            self.static = lambda: dijkstra_dist(g, s, t).value
            self.query = self.dyn.query_dist
        elif problem == "flow":
            self.dyn = DynamicMaxFlow(g, s, t)
            self.static = lambda: static_maxflow(g, s, t).value
            self.query = self.dyn.query_value
        elif problem == "mwm":
            self.dyn = DynamicMatching(g)
            self.static = lambda: static_mwm(g)
            self.query = self.dyn.query_weight
        elif problem == "mst":
            self.dyn = DynamicMST(g)
            self.static = lambda: kruskal_mst(g).value
            self.query = self.dyn.query_weight
        elif problem == "conn":
            self.dyn = ConnectivityAdapter(g.n)
            for u, v in zip(g.tails, g.heads):
                self.dyn.add_edge(u, v)
            self.static = lambda: connectivity(g.n, self.dyn.present)
            self.query = self.dyn.is_connected
        else:
            raise ValueError(f"unknown problem {problem!r}")

    @property
    def work(self):
        return self.dyn.mst.work if self.problem == "conn" else self.dyn.work

    def apply(self, ev):
        if isinstance(ev, WeightChange):
            self.dyn.on_weight_change(ev)
        elif isinstance(ev, AddEdge):
            self.dyn.add_edge(ev.u, ev.v)
        elif isinstance(ev, RemoveEdge):
            self.dyn.remove_edge(ev.u, ev.v)


def validate_for(problem, g: WeightedGraph, trace: ChangeTrace, max_delta=None):
    """Reject a trace that cannot run for ``problem``, before any event runs."""
    if problem not in PROBLEMS:
        raise ValidationError(f"unknown problem {problem!r}")
    if problem == "conn":
        present = {(min(u, v), max(u, v)) for u, v in zip(g.tails, g.heads)}
        for i, ev in enumerate(trace.events):
            if isinstance(ev, WeightChange):
                raise ValidationError(f"event {i}: weight changes are not valid for conn")
            if isinstance(ev, (AddEdge, RemoveEdge)):
                key = (min(ev.u, ev.v), max(ev.u, ev.v))
                if ev.u == ev.v or not (1 <= key[0] and key[1] <= g.n):
                    raise ValidationError(f"event {i}: bad node pair ({ev.u},{ev.v})")
                if isinstance(ev, AddEdge) == (key in present):
                    raise ValidationError(f"event {i}: {type(ev).__name__} {key} conflicts with current edges")
                present.symmetric_difference_update({key})
    else:
        for i, ev in enumerate(trace.events):
            if isinstance(ev, (AddEdge, RemoveEdge)):
                raise ValidationError(f"event {i}: edge add/remove is only valid for conn")
        trace.validate(g, max_delta)
    for i, ev in enumerate(trace.events):
        if isinstance(ev, Query) and ev.kind != problem:
            raise ValidationError(f"event {i}: query '{ev.kind}' in a {problem} run")


def replay(problem, g: WeightedGraph, trace: ChangeTrace, verify=False, s=None, t=None, max_delta=None):
    """Run ``trace`` through the dynamic structure for ``problem``.

    ``verify=True`` recomputes from scratch after every event, otherwise only
    at queries. Stops at the first mismatch. Returns ``(records, mismatch)``
    where ``mismatch`` is the failing event index or None. Mutates ``g``.
    """
    validate_for(problem, g, trace, max_delta)
    prob = _Problem(problem, g, s, t)
    clock = time.perf_counter_ns
    records = []
    for i, ev in enumerate(trace.events):
        before = prob.work
        start = clock()
        prob.apply(ev)
        result = prob.query()
        dyn_ns = clock() - start
        op = OP_NAMES.get(type(ev)) or f"query:{ev.kind}"
        rec = BenchRecord(i, op, dyn_ns, None, prob.work - before, result)
        if verify or isinstance(ev, Query):
            start = clock()
            rec.result_static = prob.static()
            rec.static_ns = clock() - start
            rec.match = rec.result_static == result
        records.append(rec)
        if rec.match is False:
            return records, i
    return records, None


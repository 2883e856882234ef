"""Weighted semi-matchings: every task (left node) goes to one machine.

A machine processes its tasks in the order minimising the sum of finishing
times, which is shortest-processing-time first: with ``d`` tasks sorted
ascending, the j-th one is counted in ``d - j + 1`` finishing times.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import GraphStructureError, SizeGuardError, ValidationError
from .graph import WeightedGraph


@dataclass
class SemiMatching:
    g: WeightedGraph
    assign: dict  # task -> machine

    def validate(self):
        g = self.g
        if g.left is None:
            raise GraphStructureError("semi-matchings need a bipartite graph")
        tasks = set(g.left_nodes())
        if set(self.assign) != tasks:
            raise ValidationError("every task must be assigned exactly once")
        for l, r in self.assign.items():
            if not g.has_edge(l, r):
                raise ValidationError(f"task {l} assigned to non-neighbour {r}")

    def load(self, r):
        """Weights of the tasks on machine ``r``."""
        return [self.g.weight(l, r) for l, m in self.assign.items() if m == r]


def spt_cost(weights) -> int:
    """Sum of finishing times when jobs run shortest first."""
    ordered = sorted(weights)
    d = len(ordered)
    return sum((d - j) * w for j, w in enumerate(ordered))


@lru_cache(maxsize=None)
def _best_order_cost(ordered):
    return min(sum(itertools.accumulate(p)) for p in itertools.permutations(ordered))


def bruteforce_order_cost(weights) -> int:
    """Minimum over every processing order of the sum of finishing times."""
    weights = tuple(sorted(weights))
    if len(weights) > 9:
        raise SizeGuardError("ordering enumeration limited to 9 jobs")
    if not weights:
        return 0
    return _best_order_cost(weights)


def machine_cost(g: WeightedGraph, sm: SemiMatching, r) -> int:
    return spt_cost(sm.load(r))


def total_cost(g: WeightedGraph, sm: SemiMatching) -> int:
    sm.validate()
    return sum(machine_cost(g, sm, r) for r in g.right_nodes())


def _check_tasks(g):
    if g.left is None:
        raise GraphStructureError("semi-matchings need a bipartite graph")
    isolated = [l for l in g.left_nodes() if not g.incident[l]]
    if isolated:
        raise ValidationError(f"isolated tasks have no machine: {isolated}")


def slot_assignment(g: WeightedGraph):
    """Solve the slot problem: task ``l`` in slot ``k`` of machine ``r`` costs ``k * w(l, r)``.

    Slot ``k`` means ``k``-th from last, so it is counted in ``k`` finishing
    times. Returns ``(slots, cost)`` with ``slots[l] = (r, k)``.
    """
    _check_tasks(g)
    tasks = list(g.left_nodes())
    columns = [(r, k) for r in g.right_nodes() for k in range(1, g.degree(r) + 1)]
    forbidden = len(tasks) * g.W * len(tasks) + 1
    cost = np.full((len(tasks), len(columns)), forbidden, dtype=np.int64)
    for j, (r, k) in enumerate(columns):
        for l, eid in g.incident[r]:
            cost[l - 1, j] = k * g.weights[eid]
    rows, cols = linear_sum_assignment(cost)
    slots = {tasks[i]: columns[j] for i, j in zip(rows, cols)}
    return slots, int(cost[rows, cols].sum())


def optimal_semi_matching(g: WeightedGraph):
    """Minimum-cost semi-matching as ``(SemiMatching, cost)``."""
    slots, _ = slot_assignment(g)
    sm = SemiMatching(g, {l: r for l, (r, _) in slots.items()})
    return sm, total_cost(g, sm)


def bruteforce_semi_matching(g: WeightedGraph) -> int:
    """Minimum cost over every assignment, each machine ordered by enumeration."""
    _check_tasks(g)
    tasks = list(g.left_nodes())
    if len(tasks) > 8 or any(g.degree(l) > 5 for l in tasks):
        raise SizeGuardError("semi-matching enumeration needs |L| <= 8 and task degree <= 5")
    choices = [[(r, g.weights[eid]) for r, eid in g.incident[l]] for l in tasks]
    best = None
    for combo in itertools.product(*choices):
        loads = {}
        for r, w in combo:
            loads.setdefault(r, []).append(w)
        cost = sum(bruteforce_order_cost(ws) for ws in loads.values())
        if best is None or cost < best:
            best = cost
    return best

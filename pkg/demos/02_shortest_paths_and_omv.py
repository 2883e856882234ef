"""
Shortest paths and the OuMv gadget
==================================

DynamicSSSP keeps a shortest-path tree from s and repairs only the part
that a weight change can affect. The gadget below turns a Boolean product
u^T M v into an s-t distance: 3 when the product is 1, at least 5 when it
is 0.
"""

import numpy as np

from weightdyn import DynamicSSSP
from weightdyn.gadgets import (
    build_sp_gadget,
    random_oumv,
    set_round_vectors,
    solve_oumv_via_sssp,
)
from weightdyn.generate import random_graph, random_trace
from weightdyn.oracles import dijkstra_dist

# a random graph and a stream of unit changes
g = random_graph(40, 0.15, 9, seed=3, connected=True)
sp = DynamicSSSP(g, 1, 40)
print("initial distance", sp.query_dist())
for ch in random_trace(g, 500, 1, seed=4).events:
    sp.on_weight_change(ch)
    assert sp.query_dist() == dijkstra_dist(g, 1, 40).value
print("after 500 changes", sp.query_dist(), "path", sp.query_path())
print("total work", sp.work, "versus", 500 * (g.m + g.n), "for recomputing")

# the gadget for a 3x3 matrix
M = np.array([[0, 1, 0],
              [0, 0, 0],
              [1, 0, 0]], dtype=bool)
gadget = build_sp_gadget(M)
sp = DynamicSSSP(gadget.graph, gadget.s, gadget.t)
print("all-zero vectors:", sp.query_dist())

for u, v in [([1, 0, 0], [0, 1, 0]), ([0, 1, 0], [1, 1, 1]), ([0, 0, 1], [1, 0, 0])]:
    changes = set_round_vectors(gadget, u, v)
    for ch in changes:
        sp.on_weight_change(ch)
    d = sp.query_dist()
    print(f"u={u} v={v}: {len(changes)} changes, distance {d}, answer {int(d < 5)}")

# whole instances: n rounds, each with at most 2n changes and one query
inst = random_oumv(12, 12, 0.2, seed=5)
run = solve_oumv_via_sssp(inst)
print("outputs", [int(b) for b in run.outputs])
print("matches direct products:", run.outputs == inst.direct_answers())
print("changes per round", run.changes_per_round)

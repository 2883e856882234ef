"""
Maximum flow under capacity changes
===================================

Each unit of capacity change costs one or two graph searches. A decrease
on a saturated edge first pulls one unit of flow off a path through it,
then looks for a way to send it again.
"""

from weightdyn import DynamicMaxFlow, WeightedGraph
from weightdyn.generate import random_graph, random_trace
from weightdyn.oracles import static_maxflow

# two routes from 1 to 4
g = WeightedGraph(4, [(1, 2, 3), (2, 4, 3), (1, 3, 2), (3, 4, 2)], W=6, directed=True)
mf = DynamicMaxFlow(g, 1, 4)
print("value", mf.query_value())

mf.on_weight_decrease(2, 4)   # saturated, value drops
print("after (2,4) -1:", mf.query_value())
mf.on_weight_increase(1, 3)   # the bottleneck is (3,4), nothing moves
print("after (1,3) +1:", mf.query_value())
mf.on_weight_increase(3, 4)
print("after (3,4) +1:", mf.query_value())
mf.check_invariants()

# random traces, checked against Dinic after each step
g = random_graph(25, 0.2, 8, seed=1, directed=True)
mf = DynamicMaxFlow(g, 1, 25)
worst = 0
for ch in random_trace(g, 1000, 1, seed=2).events:
    mf.on_weight_change(ch)
    assert mf.query_value() == static_maxflow(g, 1, 25).value
    worst = max(worst, *mf.last_unit_work)
print(f"m = {g.m}, worst per-unit work {worst} ({worst / g.m:.2f} m)")

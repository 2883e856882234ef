"""
Graphs whose weights move
=========================

A WeightedGraph has a fixed set of edges. Only the integer weights change,
each staying in 1..W. Changes are signed deltas, and a trace is a list of
them with an optional bound c on |delta|.
"""

from weightdyn import WeightChange, parse_graph, parse_trace
from weightdyn.errors import WeightRangeError
from weightdyn.generate import random_graph, random_trace
from weightdyn.graph import serialize_graph

# a small undirected graph, straight from the text format
g = parse_graph("""
p undirected 4 5 9
e 1 2 3
e 2 3 1
e 3 4 4
e 1 3 7
e 2 4 8
""")
print(g.n, "nodes", g.m, "edges, W =", g.W)

# a change is a delta, applied in place
g.apply_change(WeightChange(1, 2, +2))
print("w(1,2) =", g.weight(1, 2))

# leaving [1, W] is refused and nothing is modified
try:
    g.apply_change(WeightChange(2, 3, -1))
except WeightRangeError as exc:
    print("refused:", exc)
print("w(2,3) is still", g.weight(2, 3))

# traces may also name an absolute weight; it becomes a delta on parsing
trace = parse_trace("t 3\nc 1 3 =5\nc 3 4 +1\nq dist\n", g)
print(trace.events)

# generated instances are reproducible from the seed
h = random_graph(6, 0.5, 5, seed=7)
assert serialize_graph(h) == serialize_graph(random_graph(6, 0.5, 5, seed=7))
tr = random_trace(h, 10, c=2, seed=1)
print("deltas:", [ch.delta for ch in tr.events])

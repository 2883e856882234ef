"""
Matchings and semi-matchings
============================

DynamicMatching keeps a maximum weight bipartite matching along with node
potentials that prove it optimal. Semi-matchings assign every task to one
machine; each machine runs its tasks shortest first.
"""

import random

from weightdyn import DynamicMatching
from weightdyn.gadgets import (
    matching_shift_transform,
    random_subgraph,
    semimatching_shift_transform,
    subgraph_graph,
)
from weightdyn.generate import random_bipartite_graph, random_trace
from weightdyn.oracles import bruteforce_mcm, bruteforce_mwm
from weightdyn.semimatching import optimal_semi_matching, spt_cost

g = random_bipartite_graph(5, 5, 1.0, 6, seed=2)
dm = DynamicMatching(g)
print("weight", dm.query_weight(), "pairs", dm.query_matching())

for ch in random_trace(g, 300, 1, seed=3).events:
    dm.on_weight_change(ch)
    dm.check_certificate()
print("after 300 changes", dm.query_weight(), "brute force", bruteforce_mwm(g).value)

# a machine with tasks 4, 1, 3 runs them as 1, 3, 4: finishing times 1 + 4 + 8
print("machine cost", spt_cost([4, 1, 3]))

# shift transforms turn a subgraph's matching number into a weight or a cost
N = 4
edges = random_subgraph(N, 0.3, random.Random(0))
mcm = bruteforce_mcm(subgraph_graph(N, edges)).value
mwm = bruteforce_mwm(matching_shift_transform(N, edges)).value
sm, cost = optimal_semi_matching(semimatching_shift_transform(N, edges))
print(f"subgraph {edges}")
print(f"MCM {mcm}, shifted MWM {mwm} = N + MCM, semi-matching cost {cost} = 2N - MCM")
print("assignment", sm.assign)

"""
Spanning trees and connectivity
===============================

DynamicMST repairs the tree with at most one edge swap per change. On top
of it, ConnectivityAdapter answers connectivity of an unweighted graph:
present edges weigh 1 in a complete graph, absent ones 2, and the graph is
connected exactly when the tree weighs n - 1.
"""

from weightdyn import ConnectivityAdapter, DynamicMST
from weightdyn.generate import random_graph, random_trace
from weightdyn.oracles import kruskal_mst

g = random_graph(30, 0.2, 9, seed=4, connected=True)
mst = DynamicMST(g)
print("initial weight", mst.query_weight())
for ch in random_trace(g, 1000, 2, seed=5).events:
    mst.on_weight_change(ch)
print("after 1000 changes", mst.query_weight(), "Kruskal", kruskal_mst(g).value)
print("swaps", mst.swaps, "work", mst.work)

a = ConnectivityAdapter(5)
for u, v in [(1, 2), (2, 3), (3, 4)]:
    a.add_edge(u, v)
print("path 1-2-3-4 plus lone 5:", a.is_connected(), "tree weight", a.mst.query_weight())
a.add_edge(4, 5)
print("with (4,5):", a.is_connected(), "tree weight", a.mst.query_weight())
a.remove_edge(2, 3)
print("without (2,3):", a.is_connected())
print("weight changes issued:", a.changes_issued)

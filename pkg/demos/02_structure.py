"""
Paths, edge connectivity and odd bipartitions
=============================================

The structural invariants that enter the gap bounds.
"""

# %%
from hspec import Hypergraph, diameter, edge_connectivity, odd_bipartition, shortest_path
from hspec.structure import edge_disjoint_path_count

H = Hypergraph(3, 6, ((1, 2, 3), (1, 4, 5), (2, 4, 6), (3, 5, 6)))
print("diameter:", diameter(H))
print("a shortest path 1 -> 6:", shortest_path(H, 1, 6))

# %%
# Edge-disjoint paths come from a unit-capacity max flow in which every
# edge is a node that can be used once.
count, paths = edge_disjoint_path_count(H, 1, 6)
print(f"{count} edge-disjoint paths between 1 and 6")
for P in paths:
    print("  ", P.vertices, "via", P.edges)

res = edge_connectivity(H)
print("edge connectivity f =", res.f, "attained at", res.min_pair)

# %%
# An odd bipartition is a proper subset meeting every edge an odd number
# of times. It is a linear system over GF(2), one equation per edge.
# G has none: each vertex lies in two edges, so the three equations sum to 0 = 1.
G = Hypergraph(4, 6, ((1, 2, 3, 4), (1, 2, 5, 6), (3, 4, 5, 6)))
print("odd bipartition of G:", odd_bipartition(G).v1)
print("odd bipartition of H:", odd_bipartition(H).v1)

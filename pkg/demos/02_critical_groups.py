"""
Critical groups and the matrix-tree theorem
===========================================

K(G, w) is the cokernel of the Laplacian with the sink column replaced by
the sink's basis vector.  When every vertex can reach the sink its order is
the number of spanning arborescences rooted there.
"""

# %%
from critgroup import Multidigraph, critical_group, enumerate_arborescences, kappa, order
from critgroup.critical import laplacian_matrix

triangle = Multidigraph.from_edges(3, [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)])
print(laplacian_matrix(triangle))
print("K(G, 0) =", critical_group(triangle, 0))

# %%
# Determinant count versus brute force.
for root in range(3):
    print(root, kappa(triangle, root), enumerate_arborescences(triangle, root))

# %%
# A lopsided multigraph: parallel edges and a loop.
g = Multidigraph(("a", "b", "c"), [(0, 1), (0, 1), (1, 2), (2, 0), (2, 2), (1, 0)])
for sink in range(3):
    grp = critical_group(g, sink)
    print(g.vertices[sink], grp, order(grp), kappa(g, sink))

# %%
# Without a path to the sink the group picks up a free summand.
stranded = Multidigraph.from_edges(3, [(0, 1), (1, 0), (2, 2)])
print(critical_group(stranded, 0))

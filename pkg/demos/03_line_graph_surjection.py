"""
From the line graph onto the base graph
=======================================

For a base edge e* = (w*, v*) the map rho on edges induces a surjection
K(LG, e*) -> K(G, w*).  When G is k-out-regular its kernel is exactly the
k-torsion of K(LG, e*).
"""

# %%
from critgroup import (
    BasePoint,
    Multidigraph,
    is_surjective,
    k_torsion,
    kernel,
    line_graph,
    rho_bar,
    structural_maps,
    subgroups_equal,
)

g = Multidigraph.from_edges(3, [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)])
bp = BasePoint.from_edge(g, 0)
lg = line_graph(g)
print(lg.vertices)

# %%
maps = structural_maps(g, bp)
print("rho =\n", maps.rho, sep="")
print("rho0 is an involution:", (maps.rho0 @ maps.rho0).to_rows())

# %%
h = rho_bar(g, bp)
print(h.src, "->", h.dst, " surjective:", is_surjective(h))

# %%
ker = kernel(h)
tors = k_torsion(h.src, 2)
print("kernel:", ker.structure, " 2-torsion:", tors.structure)
print("same subgroup:", subgroups_equal(ker, tors))

# %%
# Evaluate the hom on individual classes.
for e in range(g.n_edges):
    x = h.src.element([int(i == e) for i in range(g.n_edges)])
    print(lg.vertices[e], "->", h(x).coords)

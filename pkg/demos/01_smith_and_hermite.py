"""
Smith and Hermite normal forms
==============================

Exact integer normal forms with their unimodular transforms.
"""

# %%
from critgroup.exactint import (
    IntMatrix,
    determinant,
    hermite_normal_form,
    lattice_contains,
    smith_normal_form,
)

m = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
d = smith_normal_form(m)
print("S =\n", d.S, sep="")
print("diagonal:", d.diagonal)

# %%
# The transforms are exact and unimodular.
assert d.U @ m @ d.V == d.S
print("det U =", determinant(d.U), " det V =", determinant(d.V))

# %%
# Column Hermite form canonicalizes the lattice spanned by the columns,
# which is what membership tests run on.
h, u = hermite_normal_form(m)
print("H =\n", h, sep="")
print("(2, -6, 10) in lattice:", lattice_contains(m, [2, -6, 10]))
print("(1, 0, 0) in lattice:", lattice_contains(m, [1, 0, 0]))

# %%
# Intermediate entries can get large; everything stays exact.
big = IntMatrix.from_rows([[10**30 + 1, 3], [7, 10**30 - 1]])
print(determinant(big))

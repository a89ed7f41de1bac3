"""Distances, maximally distant pairs and the boundary of a graph."""
# %%
import numpy as np

from strongres import all_pairs_distances, boundary, generate, mutually_maximally_distant_pairs
from strongres.boundary import simplicial_vertices

# %% A 3x3 grid: vertex (a, b) is a*3 + b
grid = generate("grid:m=3,n=3")
d = all_pairs_distances(grid)
D = d.to_array()
print(D)
print("diameter", D.max(), "eccentricities", D.max(axis=1))

# %% Mutually maximally distant pairs: neither end can step further from the other
print(mutually_maximally_distant_pairs(grid, d))   # the two diagonals of corners
print("boundary", boundary(grid, d))

# %% Comet: K_4 on 0..3 with a tail 0 - 4 - 5 - 6
comet = generate("comet:n=7,r=4")
dc = all_pairs_distances(comet)
print("comet boundary", boundary(comet, dc))
print("simplicial", simplicial_vertices(comet))
assert set(simplicial_vertices(comet)) <= set(boundary(comet, dc))

# %% Distance rows as a heat table
for row in all_pairs_distances(generate("cycle:n=8")).to_array():
    print("".join(" .:-=+*#"[x] for x in row))

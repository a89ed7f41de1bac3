"""The strong resolving graph on the boundary, and its usual shapes."""
# %%
from strongres import all_pairs_distances, are_isomorphic, generate, strong_resolving_graph
from strongres.families import complete_graph, cycle_graph


def sr(spec):
    g = generate(spec)
    return strong_resolving_graph(g, all_pairs_distances(g))


# %% Odd cycles reproduce themselves, even cycles fall apart into antipodal edges
print(are_isomorphic(sr("cycle:n=7").graph, cycle_graph(7)))
print(sr("cycle:n=8").graph.edges())

# %% Trees give a clique on the leaves
t = sr("tree:n=10,seed=4")
print("leaves", t.back_map, "complete:", t.graph == complete_graph(len(t.back_map)))

# %% The cube is 2-antipodal: a perfect matching
print(sr("hypercube:k=3").graph.edges())

# %% SR vertices are renumbered; back_map recovers the original labels
c1 = sr("c1:r=3,t=6")
print(c1.to_edge_list())

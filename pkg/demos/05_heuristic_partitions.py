"""Geodesic partitions as cheap upper bounds."""
# %%
import numpy as np

from strongres import all_pairs_distances, generate, p1_partition, p2_partition, strong_partition_dimension

specs = ["cycle:n=7", "sphere:k=2,r=3", "sphere:k=3,r=4", "grid:m=3,n=4", "fan:r=8", "tree:n=12,seed=3"]
table = []
for spec in specs:
    g = generate(spec)
    d = all_pairs_distances(g)
    p1 = p1_partition(g, d)
    p2 = p2_partition(g, d)
    exact = strong_partition_dimension(g, d).value
    table.append((len(p1), len(p2) if p2 else g.n, exact))
    print(f"{spec:18} P1 {p1.to_lists()}")
    print(f"{'':18} P2 {p2.to_lists() if p2 else None}")

# %% How far off are the heuristics?
sizes = np.array(table)
print("P1 excess", sizes[:, 0] - sizes[:, 2])
print("P2 excess", sizes[:, 1] - sizes[:, 2])

# %% No vertex of K_4 has a geodesic longer than an edge, so P2 has nothing to offer
k4 = generate("complete:n=4")
print(p2_partition(k4, all_pairs_distances(k4)))

"""Exact pd_s with bounds, certificates, and a budget."""
# %%
from strongres import (
    SearchBudgetExceeded,
    all_pairs_distances,
    generate,
    is_strong_resolving_partition,
    pds_bounds,
    strong_partition_dimension,
)

# %% Every bound carries its source, and upper bounds carry a partition
g = generate("wheel:r=9")
d = all_pairs_distances(g)
b = pds_bounds(g, d)
for x in b.lower:
    print("lower", x.value, x.source)
for x in b.upper:
    print("upper", x.value, x.source, x.certificate.to_lists())

# %% The search only visits levels strictly between the bounds
res = strong_partition_dimension(g, d, bounds=b)
print(res.value, res.method, res.certificate.to_lists())
assert is_strong_resolving_partition(g, d, res.certificate)

# %% Out of budget: the exception still knows the bounds
try:
    strong_partition_dimension(g, d, budget=10)
except SearchBudgetExceeded as exc:
    print("gave up:", exc, "->", exc.bounds.best_lower, "<= pd_s <=", exc.bounds.best_upper)

# %% Paths are the only graphs with pd_s = 2; complete graphs the only ones with pd_s = n
for spec in ["path:n=9", "cycle:n=9", "complete:n=6", "kn_minus_e:n=6", "k1_plus_cliques:sizes=2+2+1"]:
    h = generate(spec)
    print(f"{spec:28} n={h.n} pd_s={strong_partition_dimension(h, all_pairs_distances(h)).value}")

"""Unicyclic graphs: terminal vertices, legs and the tau + 2 partition."""
# %%
from collections import Counter

from strongres import all_pairs_distances, generate, strong_partition_dimension, unicyclic_analysis, unicyclic_partition

g = generate("c1:r=3,t=6")
d = all_pairs_distances(g)
s = unicyclic_analysis(g, d)
print("cycle", s.cycle, "majors", s.majors, "legs", s.legs)
print("partition", unicyclic_partition(g, d).to_lists())

# %% Where does pd_s land inside [tau, tau + 2] on random instances?
gaps = Counter()
for seed in range(60):
    spec = f"unicyclic_random:n=11,seed={seed}"
    h = generate(spec)
    dh = all_pairs_distances(h)
    st = unicyclic_analysis(h, dh)
    if st.tau < 2:
        continue
    pd = strong_partition_dimension(h, dh).value
    gaps[pd - st.tau] += 1
print("pd_s - tau:", dict(sorted(gaps.items())))

# %% Every cycle vertex major: the legs alone do it
h = generate("unicyclic_random:n=10,seed=1,all_majors=1")
dh = all_pairs_distances(h)
print(unicyclic_analysis(h, dh).tau, strong_partition_dimension(h, dh).value)

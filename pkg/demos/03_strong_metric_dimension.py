"""dim_s two ways: subset enumeration, and a vertex cover of G_SR."""
# %%
import time

from strongres import (
    all_pairs_distances,
    brute_force_strong_metric_dimension,
    generate,
    is_strong_resolving_set,
    strong_metric_dimension,
)

for spec in ["path:n=6", "complete:n=6", "cycle:n=6", "c1:r=3,t=5", "wheel:r=7", "grid:m=3,n=3"]:
    g = generate(spec)
    d = all_pairs_distances(g)
    t0 = time.perf_counter()
    brute = brute_force_strong_metric_dimension(g, d)
    t1 = time.perf_counter()
    cover = strong_metric_dimension(g, d)
    t2 = time.perf_counter()
    assert brute.value == cover.value and is_strong_resolving_set(g, d, cover.certificate)
    print(f"{spec:14} dim_s={cover.value}  basis={cover.certificate}  "
          f"brute {1e3 * (t1 - t0):6.2f} ms   cover {1e3 * (t2 - t1):6.2f} ms")

# %% The cover route keeps working where subsets would not
big = generate("grid:m=6,n=7")
print("P_6 x P_7:", strong_metric_dimension(big, all_pairs_distances(big)))

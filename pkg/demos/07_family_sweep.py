"""Sweeping a family and comparing with the closed formulas."""
# %%
import numpy as np

from strongres import expected_dims, expected_pds
from strongres.cli import sweep_rows

rows = list(sweep_rows("c1", ["r=2..4", "t=4..9"], budget=10**6))
header, body = rows[0][:-1], np.array([row[:-1] for row in rows[1:]], dtype=int)
print(",".join(header))
print(body)

# %% Both formulas hold across the grid
r, t, pd, dims = body[:, 0], body[:, 1], body[:, 4], body[:, 3]
print(np.all(pd == r + 1), np.all(dims == r + (t - 1) // 2))
print(all(expected_pds(f"c1:r={a},t={b}") == p for a, b, p in zip(r, t, pd)))
print(all(expected_dims(f"c1:r={a},t={b}") == x for a, b, x in zip(r, t, dims)))

# %% An unresolved question, tabulated but not asserted
rows = list(sweep_rows("comet", ["n=9", "r=2..8"], budget=10**6, open_question=True))
for row in rows:
    print(row)

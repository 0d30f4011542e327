"""Compare the uniform thresholds for ampleness, global generation and
very ampleness with the older uniform bound."""

import numpy as np

from blowup_positivity import min_degree

pairs = [(10, 10), (10, 30), (30, 10)]
rows = []
for r, m in pairs:
    rows.append([min_degree(name, r=r, m=m) for name in
                 ("ample_uniform", "st_ample", "gg_uniform", "st_gg", "va_uniform")])
table = np.array(rows)
print("      r   m  ample  st   gg  st_gg  va")
for (r, m), row in zip(pairs, table):
    print(f"   {r:4d}{m:4d}  " + "  ".join(f"{x:4d}" for x in row))

# how much the sharper bound saves across a grid
r_vals, m_vals = np.arange(9, 41), np.arange(2, 41)
gain = np.array([[min_degree("st_ample", r=int(r), m=int(m)) - min_degree("ample_uniform", r=int(r), m=int(m))
                  for m in m_vals] for r in r_vals])
print("degree saved: min", gain.min(), "max", gain.max(), "mean", round(gain.mean(), 2))

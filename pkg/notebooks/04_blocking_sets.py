"""
Blocking sets in small projective spaces
========================================

Exhaustive minima in PG(2,2) and PG(3,2) next to the lower bounds, and the
link between cutting sets and minimal codes.
"""

# %%
from gfcodes import paper_example
from gfcodes.blocking import (
    blocking_bounds,
    exhaustive_min_blocking,
    is_cutting_s_blocking,
    pointset_from_code,
)
from gfcodes.minimality import is_s_minimal

for k in (3, 4):
    for s in range(1, k):
        for t in (1, 2):
            found = exhaustive_min_blocking(k, 2, t, s)
            size = found[0] if found else None
            print(f"PG({k - 1},2) s={s} t={t}: min {size}, bound {blocking_bounds(t, s, k, 2).lower}")

# %%
size, fano_line = exhaustive_min_blocking(3, 2, 1, 1)
print(fano_line.points)

# %%
# The columns of a projective code form a cutting s-blocking set exactly when the code is s-minimal.
c = paper_example("ss28_5_2")
b = pointset_from_code(c)
for s in range(1, c.k):
    print(s, bool(is_cutting_s_blocking(b, s)), is_s_minimal(c, s)[0])

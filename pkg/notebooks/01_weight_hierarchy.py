"""
Support weights of subcodes, level by level
===========================================

A small binary [9,5,3] code, every subcode dimension, and which subcodes
are minimal.
"""

# %%
from gfcodes import paper_example
from gfcodes.ghw import sswd, weight_report
from gfcodes.reproduce import minimality_by_weight

c = paper_example("ex9_5_3")
print(c)
print(c.G)

# %%
# A^s_j counts s-dimensional subcodes whose support has size j.
for s in range(1, c.k + 1):
    t = sswd(c, s)
    print(s, dict(t.nonzero))

# %%
# d_s is the smallest support at level s; D_s the largest.
rep = weight_report(c)
print("d:", rep.hierarchy())
print("D:", [rep.D[s] for s in range(1, c.k + 1)])

# %%
# Minimal subcodes are those whose support strictly contains no other s-subcode's.
# Below d_{s+1} everything is minimal, since a smaller subcode would need its own bigger parent.
for s in range(1, c.k):
    print(s, {j: sorted(v) for j, v in sorted(minimality_by_weight(c, s).items())})

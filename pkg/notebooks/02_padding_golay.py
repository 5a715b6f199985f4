"""
Making the ternary Golay code s-minimal
=======================================

The [12,6,6]_3 Golay code fails minimality at every level. Appending one copy
of the simplex code lifts d_{s+1} faster than D_s and fixes all of them.
"""

# %%
from gfcodes import paper_example
from gfcodes.constructions import min_padding_ts, pad_with_simplex
from gfcodes.ghw import weight_report
from gfcodes.minimality import gab_check, is_s_minimal

g = paper_example("golay12_3")
rep = weight_report(g)
for s in range(1, g.k):
    print(s, rep.d[s + 1], rep.D[s], is_s_minimal(g, s)[0])

# %%
# smallest number of simplex copies per level
print({s: min_padding_ts(g, s, rep) for s in range(1, g.k)})

# %%
p = pad_with_simplex(g, 1)
prep = weight_report(p)
print(p)
for s in range(1, p.k):
    print(s, prep.d[s + 1], prep.D[s], gab_check(p, s, prep).value, is_s_minimal(p, s, "brute")[0])

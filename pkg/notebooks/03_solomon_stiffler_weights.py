"""
Solomon-Stiffler weight tables: closed form against enumeration
===============================================================

Deleting disjoint coordinate subspaces from the simplex code gives a Griesmer
code whose weights depend only on which deleted blocks a message hits.
"""

# %%
from gfcodes.code import weight_distribution
from gfcodes.constructions import (
    SolomonStifflerSpec,
    solomon_stiffler,
    ss_predicted_weights,
    ss_weight_distribution,
)

spec = SolomonStifflerSpec(3, 5, (1, 2))
c = solomon_stiffler(spec)
print(c)

# %%
enumerated = {w: m for w, m in weight_distribution(c).items() if w}
print("enumerated   ", enumerated)
print("block formula", ss_weight_distribution(spec))
print("table        ", ss_predicted_weights(spec))

# %%
# The published two-block table lists three weights. Messages that hit the first
# block but annihilate the second lose only q^(u1-1) coordinates, giving a fourth.
q, k, (u1, u2) = spec.q, spec.k, spec.u
print("missing weight", q ** (k - 1) - q ** (u1 - 1), "count", q ** (k - u1 - u2) * (q**u1 - 1))

# %%
# With a single block the table is right.
for q, k, u in [(2, 5, (2,)), (3, 4, (1,)), (5, 4, (2,))]:
    s = SolomonStifflerSpec(q, k, u)
    w = {a: b for a, b in weight_distribution(solomon_stiffler(s)).items() if a}
    print(q, k, u, w == ss_predicted_weights(s))

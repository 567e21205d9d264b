"""The jump points of the k-error profile, found by feeding each tmin back in,
and an independent check through subspace distances.

For period p^n in characteristic p, the sequences of complexity <= c form a
c-dimensional subspace, so the k-error complexity is the smallest c whose
subspace is within Hamming distance k.
"""

# %%
from lcprof import brute_force_klc, make_field, minerror, parse_sequence, tight_profile
from lcprof.oracle import subspace_distances

gf3 = make_field(3)
example = parse_sequence("0,2,0,2,1,1,0,1,0,1,2,0,1,1,1,0,1,0,2,2,0,2,1,1,0,1,0", gf3, 3)

profile = tight_profile(example)
print("profile:", profile)
print("minerror:", minerror(example))

# %% independent route (takes ~10 s): distances for c <= 13, brute force for k <= 3
dist = subspace_distances(example, 13)
small_k = [brute_force_klc(example, k) for k in range(4)]
values = []
for k in range(18):
    cands = [c for c, d in enumerate(dist) if d <= k] + [v for kk, v in enumerate(small_k) if kk <= k]
    values.append(min(cands))
jumps = [(k, v) for k, v in enumerate(values) if k == 0 or v < values[k - 1]]
print("subspace route:", ", ".join(f"({k},{c})" for k, c in jumps))
print("agree:", tuple(jumps) == profile.points)

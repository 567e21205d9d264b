"""Per-level trace of the k-error computation on the GF(3), N=27 example.

Each line shows the block length M, the costs TB[u] of zeroing the first
u+1 block images, and the branch w that was taken.
"""

# %%
from lcprof import k_error_lc, make_field, parse_sequence

gf3 = make_field(3)
example = parse_sequence("0,2,0,2,1,1,0,1,0,1,2,0,1,1,1,0,1,0,2,2,0,2,1,1,0,1,0", gf3, 3)

for k in (0, 1, 3, 9, 11, 12, 16, 17):
    r = k_error_lc(example, k)
    print(f"k={k}")
    for level in r.trace:
        print("   ", level)
    print(f"    klc={r.klc} tmin={r.tmin}")

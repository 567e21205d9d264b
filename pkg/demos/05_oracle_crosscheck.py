"""Exhaustive cross-check against brute force on a whole corpus.

Builds the brute-force k-error table for every GF(4) sequence of period 4 and
compares it with the fast algorithm at every k.
"""

# %%
import itertools

from lcprof import k_error_lc, make_field
from lcprof.oracle import klc_table
from lcprof.sequence import Sequence

gf4 = make_field(2, 2, [1, 1, 1])
table = klc_table(gf4, 2)
mismatches = 0
for code, values in enumerate(itertools.product(range(4), repeat=4)):
    s = Sequence(gf4, 2, values[::-1])  # table digit i is element i
    mismatches += any(k_error_lc(s, k).klc != table[code, k] for k in range(5))
print(f"{len(table)} sequences, {mismatches} mismatches")

# %% distribution of minerror over the corpus
from collections import Counter

from lcprof import minerror

print(Counter(minerror(Sequence(gf4, 2, v)) for v in itertools.product(range(4), repeat=4) if any(v)))

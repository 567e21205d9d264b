"""Linear complexity two ways: the p-ary Games-Chan reduction and
Berlekamp-Massey over two periods."""

# %%
from lcprof import berlekamp_massey, linear_complexity_gc, make_field, parse_sequence, random_sequence
from lcprof.sequence import Sequence

gf3 = make_field(3)
example = parse_sequence("0,2,0,2,1,1,0,1,0,1,2,0,1,1,1,0,1,0,2,2,0,2,1,1,0,1,0", gf3, 3)
print("Games-Chan:", linear_complexity_gc(example), " Berlekamp-Massey:", berlekamp_massey(example))

# %% the single-one sequence has full complexity but falls to 0 after one change
single = Sequence.from_iterable(gf3, [0] * 26 + [1])
print("0...01 ->", linear_complexity_gc(single))

# %% agreement on a batch of random sequences over GF(9)
gf9 = make_field(3, 2, [1, 0, 1])
pairs = [(linear_complexity_gc(s), berlekamp_massey(s)) for s in (random_sequence(gf9, 2, seed) for seed in range(200))]
print("GF(9), N=9: all agree =", all(a == b for a, b in pairs))

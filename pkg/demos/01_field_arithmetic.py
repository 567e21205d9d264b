"""Working in GF(p^m).

Elements are integers; index h packs the coefficients of a polynomial in
base p, lowest degree first.  Run with ``python demos/01_field_arithmetic.py``.
"""

# %%
from lcprof import binom_mod_p, make_field

gf4 = make_field(2, 2, [1, 1, 1])  # x^2 + x + 1
print(gf4, "elements:", list(gf4.elements()))

# x is index 2, x + 1 is index 3, and x * x reduces to x + 1
print("x * x =", gf4.mul(2, 2))

# %% the full multiplication table
for a in gf4.elements():
    print(" ".join(str(gf4.mul(a, b)) for b in gf4.elements()))

# %% a reducible modulus is rejected
try:
    make_field(2, 2, [0, 0, 1])
except ValueError as exc:
    print(type(exc).__name__, "-", exc)

# %% binomials mod p drive the block maps F_u(a) = sum C(p-j-1, u) a(j)
p = 5
for u in range(p):
    print(f"u={u}:", [binom_mod_p(p - j - 1, u, p) for j in range(p)])

"""Finite fields GF(p^m) with table-driven arithmetic.

Elements are plain integers in ``[0, q)``.  The index ``h`` stands for the
polynomial ``sum(c_i x^i)`` where ``(c_0, ..., c_{m-1})`` are the base-p
digits of ``h``, lowest digit first.  Index 0 is zero and index 1 is one; the
integers ``0 .. p-1`` are exactly the prime subfield.

Fields are meant for small orders (a few hundred elements at most): all
operations are lookups into ``q x q`` tables built at construction.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from functools import cached_property

import numpy as np

from .errors import BadModulus, DivisionByZero, MissingModulus, NotPrime

__all__ = [
    "Field",
    "make_field",
    "binom_mod_p",
    "is_prime",
    "is_irreducible",
]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def _trim(poly: list[int]) -> list[int]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of ``num / den`` over GF(p); ``den`` must be monic."""
    rem = _trim([c % p for c in num])
    d = len(den) - 1
    while len(rem) - 1 >= d:
        lead = rem[-1]
        shift = len(rem) - 1 - d
        for j, c in enumerate(den):
            rem[shift + j] = (rem[shift + j] - lead * c) % p
        _trim(rem)
    return rem


def is_irreducible(poly: list[int] | tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree ``1 .. deg/2``."""
    poly = _trim([c % p for c in poly])
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(poly, [*low, 1], p):
                return False
    return True


def binom_mod_p(a: int, b: int, p: int) -> int:
    """``C(a, b) mod p`` via Lucas' theorem; zero when ``b > a``."""
    if a < 0 or b < 0:
        raise ValueError("binomial arguments must be nonnegative")
    result = 1
    while a or b:
        ad, bd = a % p, b % p
        if bd > ad:
            return 0
        result = result * math.comb(ad, bd) % p
        a //= p
        b //= p
    return result


@dataclass(frozen=True)
class Field:
    """GF(p^m) described by its characteristic, degree and modulus.

    Use :func:`make_field` to build one; it validates the arguments.
    ``modulus`` holds the coefficients low degree first (``()`` when m = 1).
    """

    p: int
    m: int = 1
    modulus: tuple[int, ...] = dc_field(default=())

    @property
    def q(self) -> int:
        return self.p**self.m

    def __str__(self) -> str:
        return f"GF({self.q})" if self.m == 1 else f"GF({self.p}^{self.m})"

    def digits(self, a: int) -> list[int]:
        """Coefficient vector of element ``a``, low degree first."""
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, coeffs) -> int:
        return sum((c % self.p) * self.p**i for i, c in enumerate(coeffs))

    # Tables are built lazily and cached on the instance.

    @cached_property
    def add_table(self) -> np.ndarray:
        d = np.array([self.digits(a) for a in range(self.q)], dtype=np.int64)
        s = (d[:, None, :] + d[None, :, :]) % self.p
        weights = self.p ** np.arange(self.m)
        return (s * weights).sum(axis=-1)

    @cached_property
    def neg_table(self) -> np.ndarray:
        d = np.array([self.digits(a) for a in range(self.q)], dtype=np.int64)
        return ((-d) % self.p * self.p ** np.arange(self.m)).sum(axis=-1)

    @cached_property
    def mul_table(self) -> np.ndarray:
        q, p = self.q, self.p
        table = np.zeros((q, q), dtype=np.int64)
        digits = [self.digits(a) for a in range(q)]
        for a in range(q):
            for b in range(a, q):
                prod = [0] * (2 * self.m - 1)
                for i, x in enumerate(digits[a]):
                    if x:
                        for j, y in enumerate(digits[b]):
                            prod[i + j] += x * y
                if self.m > 1:
                    prod = _poly_mod(prod, list(self.modulus), p)
                table[a, b] = table[b, a] = self.from_digits(prod)
        return table

    @cached_property
    def inv_table(self) -> np.ndarray:
        inv = np.zeros(self.q, dtype=np.int64)
        rows, cols = np.nonzero(self.mul_table == 1)
        inv[rows] = cols
        return inv

    @cached_property
    def scalar_table(self) -> np.ndarray:
        """``scalar_table[c, a]`` is ``a`` added to itself ``c`` times, c in GF(p)."""
        out = np.zeros((self.p, self.q), dtype=np.int64)
        for c in range(1, self.p):
            out[c] = self.add_table[out[c - 1], np.arange(self.q)]
        return out

    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {self}")
        return int(self.inv_table[a])

    def scale(self, c: int, a: int) -> int:
        """Multiply ``a`` by the prime-subfield integer ``c``."""
        return int(self.scalar_table[c % self.p, a])


def make_field(p: int, m: int = 1, modulus=None) -> Field:
    """Validate and build GF(p^m).

    >>> make_field(2, 2, [1, 1, 1]).mul(2, 2)
    3
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise BadModulus(f"extension degree must be >= 1, got {m}")
    if m == 1:
        if modulus:
            raise BadModulus("a prime field takes no modulus")
        return Field(p, 1, ())
    if modulus is None or len(modulus) == 0:
        raise MissingModulus(f"GF({p}^{m}) needs an explicit modulus")
    coeffs = tuple(int(c) % p for c in modulus)
    if len(coeffs) != m + 1:
        raise BadModulus(f"modulus must have degree {m}, got {len(coeffs) - 1}")
    if coeffs[-1] != 1:
        raise BadModulus("modulus must be monic")
    if not is_irreducible(coeffs, p):
        raise BadModulus(f"modulus {list(coeffs)} is reducible over GF({p})")
    return Field(p, m, coeffs)

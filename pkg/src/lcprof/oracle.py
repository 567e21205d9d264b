"""Slow, independent ground truth for the fast algorithms.

Nothing here shares code with :mod:`lcprof.complexity`.  Linear complexity
comes from Berlekamp-Massey over two periods; k-error values come from
searching error patterns directly.  The functions refuse to start when the
search would enumerate more than ``budget`` patterns.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceeded, BudgetOutOfRange
from .field import Field, binom_mod_p
from .sequence import Sequence, hamming_weight

__all__ = [
    "DEFAULT_BUDGET",
    "SpectrumPoint",
    "berlekamp_massey",
    "pattern_count",
    "iter_error_patterns",
    "brute_force_klc",
    "brute_force_profile",
    "jump_points",
    "klc_table",
    "subspace_distances",
]

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class SpectrumPoint:
    k: int
    lc: int

    def __iter__(self):
        return iter((self.k, self.lc))


class _Tables:
    """List-of-lists copies of the field tables; indexing lists beats numpy per element."""

    def __init__(self, field: Field):
        self.add = field.add_table.tolist()
        neg = field.neg_table.tolist()
        mul = field.mul_table.tolist()
        self.mul = mul
        # negated products, so the connection update is a single add
        self.negmul = [[neg[v] for v in row] for row in mul]
        self.inv = field.inv_table.tolist()


_TABLE_CACHE: dict[Field, _Tables] = {}


def _tables(field: Field) -> _Tables:
    t = _TABLE_CACHE.get(field)
    if t is None:
        t = _TABLE_CACHE[field] = _Tables(field)
    return t


def _bm(terms, t: _Tables) -> int:
    add, mul, negmul, inv = t.add, t.mul, t.negmul, t.inv
    conn = [1]
    prev = [1]
    length = 0
    gap = 1
    last_d = 1
    for n, term in enumerate(terms):
        d = term
        for i in range(1, length + 1):
            c = conn[i]
            if c:
                d = add[d][mul[c][terms[n - i]]]
        if d == 0:
            gap += 1
            continue
        factor = mul[d][inv[last_d]]
        old = conn[:]
        need = len(prev) + gap
        if len(conn) < need:
            conn.extend([0] * (need - len(conn)))
        nf = negmul[factor]
        for i, c in enumerate(prev):
            if c:
                conn[i + gap] = add[conn[i + gap]][nf[c]]
        if 2 * length <= n:
            length = n + 1 - length
            prev = old
            last_d = d
            gap = 1
        else:
            gap += 1
    return length


def berlekamp_massey(s: Sequence) -> int:
    """Length of the shortest LFSR generating ``s``, from two full periods."""
    return _bm(list(s.elements) * 2, _tables(s.field))


def pattern_count(N: int, q: int, k: int) -> int:
    """Number of error patterns of Hamming weight at most ``k``."""
    return sum(math.comb(N, j) * (q - 1) ** j for j in range(k + 1))


def iter_error_patterns(N: int, q: int, weight: int):
    """Yield ``(positions, values)`` for every pattern of exactly ``weight`` errors.

    Positions run over combinations in lexicographic order, values over
    nonzero element indices in increasing order.
    """
    for positions in itertools.combinations(range(N), weight):
        for values in itertools.product(range(1, q), repeat=weight):
            yield positions, values


def _check_budget(patterns: int, budget: int) -> None:
    if patterns > budget:
        raise BudgetExceeded(patterns, budget)


def _min_lc_at_weight(s: Sequence, weight: int, floor: int = 0) -> int:
    """Smallest BM complexity over patterns of exactly ``weight`` errors."""
    t = _tables(s.field)
    add = t.add
    base = list(s.elements)
    N = len(base)
    best = N + 1
    for positions, values in iter_error_patterns(N, s.field.q, weight):
        changed = base[:]
        for i, v in zip(positions, values):
            changed[i] = add[changed[i]][v]
        lc = _bm(changed + changed, t)
        if lc < best:
            best = lc
            if best <= floor:
                break
    return best


def brute_force_klc(s: Sequence, k: int, budget: int = DEFAULT_BUDGET) -> int:
    """k-error linear complexity by trying every pattern of at most ``k`` errors."""
    N, q = s.N, s.field.q
    if not 0 <= k <= N:
        raise BudgetOutOfRange(f"k must be in [0, {N}], got {k}")
    # Zeroing every nonzero symbol reaches complexity 0; no need to look further.
    k = min(k, hamming_weight(s))
    _check_budget(pattern_count(N, q, k), budget)
    best = berlekamp_massey(s)
    for weight in range(1, k + 1):
        if best == 0:
            break
        best = min(best, _min_lc_at_weight(s, weight))
    return best


def jump_points(values) -> list[SpectrumPoint]:
    """Jump points of a nonincreasing step function given as ``values[k]``."""
    points = []
    for k, lc in enumerate(values):
        if not points or lc < points[-1].lc:
            points.append(SpectrumPoint(k, int(lc)))
    return points


def brute_force_profile(s: Sequence, budget: int = DEFAULT_BUDGET) -> list[SpectrumPoint]:
    """Jump points of ``k -> brute_force_klc(s, k)`` for ``k = 0 .. weight(s)``."""
    N, q = s.N, s.field.q
    weight = hamming_weight(s)
    _check_budget(pattern_count(N, q, weight), budget)
    values = [berlekamp_massey(s)]
    for w in range(1, weight + 1):
        if values[-1] == 0:
            break
        values.append(min(values[-1], _min_lc_at_weight(s, w)))
    return jump_points(values)


def klc_table(field: Field, n: int, budget: int = DEFAULT_BUDGET) -> np.ndarray:
    """Brute-force k-error complexity of every sequence of period ``p**n``.

    Returns an array ``T`` of shape ``(q**N, N + 1)`` where ``T[code, k]`` is
    the k-error linear complexity of the sequence whose element ``i`` is
    digit ``i`` (base q, lowest first) of ``code``.

    Every sequence gets one Berlekamp-Massey run.  The k-error values then
    follow from ``T[., k] = min(T[., k-1], min over single-symbol neighbours
    of T[., k-1])``: a pattern of weight k is a path of k single changes, so
    this is the same minimum as enumerating the patterns, just shared between
    sequences.
    """
    q, N = field.q, field.p**n
    total = q**N
    _check_budget(total, budget)
    t = _tables(field)
    codes = np.arange(total, dtype=np.int64)
    digits = (codes[:, None] // (q ** np.arange(N, dtype=np.int64))) % q
    rows = digits.tolist()
    lc = np.fromiter((_bm(r + r, t) for r in rows), dtype=np.int64, count=total)

    # neighbour[i, v] maps each code to the code with element i shifted by v
    add = field.add_table
    neighbours = []
    for i in range(N):
        weight = q**i
        for v in range(1, q):
            shifted = add[digits[:, i], v]
            neighbours.append(codes + (shifted - digits[:, i]) * weight)

    table = np.empty((total, N + 1), dtype=np.int64)
    table[:, 0] = lc
    for k in range(1, N + 1):
        prev = table[:, k - 1]
        cur = prev.copy()
        for nb in neighbours:
            np.minimum(cur, prev[nb], out=cur)
        table[:, k] = cur
    return table


def subspace_distances(s: Sequence, max_dim: int, budget: int = DEFAULT_BUDGET) -> list[int]:
    """Hamming distance from ``s`` to the sequences of complexity at most ``c``.

    For period ``N = p**n`` in characteristic p, ``x**N - 1 = (x - 1)**N``, so
    the periodic sequences annihilated by ``(x - 1)**c`` are exactly those of
    linear complexity ``<= c``; they form a ``c``-dimensional subspace.  The
    k-error linear complexity is the least ``c`` whose distance is ``<= k``.

    Returns ``[d_0, ..., d_max_dim]``; each subspace is enumerated in full, so
    ``q**max_dim`` must fit in ``budget``.
    """
    field = s.field
    q, p, N = field.q, field.p, s.N
    if not 0 <= max_dim <= N:
        raise ValueError(f"max_dim must be in [0, {N}]")
    _check_budget(q**max_dim, budget)
    target = s.as_array()
    add, mul, neg = field.add_table, field.mul_table, field.neg_table
    out = []
    for c in range(max_dim + 1):
        if c == 0:
            out.append(int(np.count_nonzero(target)))
            continue
        # (x-1)^c = sum_i C(c,i) (-1)^(c-i) x^i over GF(p)
        rec = [binom_mod_p(c, i, p) * (-1) ** (c - i) % p for i in range(c + 1)]
        basis = np.zeros((c, N), dtype=np.int64)
        for j in range(c):
            row = [0] * N
            row[j] = 1
            for pos in range(c, N):
                acc = 0
                for i in range(c):
                    acc = add[acc, field.scalar_table[rec[i], row[pos - c + i]]]
                row[pos] = int(neg[acc])
            basis[j] = row
        best = N
        coeff_iter = itertools.product(range(q), repeat=c)
        chunk = 1 << 16
        while True:
            block = np.array(list(itertools.islice(coeff_iter, chunk)), dtype=np.int64)
            if block.size == 0:
                break
            words = np.zeros((len(block), N), dtype=np.int64)
            for j in range(c):
                words = add[words, mul[block[:, j : j + 1], basis[j][None, :]]]
            best = min(best, int((words != target).sum(axis=1).min()))
        out.append(best)
    return out

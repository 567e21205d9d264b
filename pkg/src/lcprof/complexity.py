"""Linear complexity, k-error linear complexity and tight error profiles.

All three algorithms share the same level reduction.  A period of length
``N = p^n`` is cut into ``p`` blocks of length ``M = N/p`` and mapped to the
block images

    F_u(a(0), ..., a(p-1)) = sum_{j=0}^{p-u-1} C(p-j-1, u) * a(j),   u = 0..p-1

with binomials taken mod p.  The first nonzero image decides how much the
level contributes to the complexity and which image is carried to the next
level (``F_{p-w}``).  The k-error variant replaces "is this image zero" by
"how many changes of the original period would make it zero", tracked in the
cost tables ``A`` (shift element i by field element h) and ``B`` (zero the
images 0..u in column i).

Every minimisation runs over error vectors ``e in GF(q)^p`` constrained by a
triangular system: row ``j`` is ``F_j(e) = t_j`` and has coefficient 1 on
``e_{p-j-1}``, so fixing the free components ``e_0 .. e_{p-u-2}`` determines
the rest by back-substitution.  The solution sets are tabulated once per
field (see :class:`LevelAlgebra`).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import AllZeroSequence, BlockLengthMismatch, BudgetOutOfRange
from .field import Field, binom_mod_p
from .sequence import Sequence

__all__ = [
    "LevelAlgebra",
    "level_algebra",
    "solve_constraints",
    "map_fu",
    "linear_complexity_gc",
    "LevelState",
    "initial_level",
    "compute_B",
    "LevelTrace",
    "AnalysisResult",
    "k_error_lc",
    "TightProfile",
    "tight_profile",
    "minerror",
]


def _coefficients(p: int) -> tuple[tuple[int, ...], ...]:
    """``coef[u][j] = C(p-j-1, u) mod p``; zero for ``j > p-u-1``."""
    return tuple(tuple(binom_mod_p(p - j - 1, u, p) for j in range(p)) for u in range(p))


def solve_constraints(field: Field, targets) -> list[tuple[int, ...]]:
    """All ``e in GF(q)^p`` with ``F_j(e) = targets[j]`` for ``j < len(targets)``.

    Free components are swept in index order, the constrained ones are filled
    in by back-substitution from the last row up.
    """
    p, q = field.p, field.q
    rows = len(targets)
    if not 1 <= rows <= p:
        raise ValueError(f"need between 1 and {p} constraint rows, got {rows}")
    coef = _coefficients(p)
    add, scal, neg = field.add_table, field.scalar_table, field.neg_table
    out = []
    for free in itertools.product(range(q), repeat=p - rows):
        e = list(free) + [0] * rows
        for r in range(rows - 1, -1, -1):
            lead = p - r - 1
            acc = 0
            for j in range(lead):
                acc = add[acc, scal[coef[r][j], e[j]]]
            e[lead] = int(add[targets[r], neg[acc]])
        out.append(tuple(e))
    return out


@dataclass(frozen=True, eq=False)
class LevelAlgebra:
    """Per-field tables shared by every level of every analysis.

    ``solutions[u]`` has shape ``(q**(u+1), q**(p-u-1), p)``: entry ``[c]``
    lists the error vectors solving rows ``0..u`` for the targets whose
    mixed-radix code is ``c = sum(t_j * q**j)``.
    """

    field: Field
    coef: tuple[tuple[int, ...], ...]
    solutions: tuple[np.ndarray, ...]
    radix: np.ndarray

    def images(self, current: np.ndarray) -> np.ndarray:
        """Block images ``F_0 .. F_{p-1}`` of a length ``pM`` array, shape ``(p, M)``."""
        p = self.field.p
        blocks = current.reshape(p, -1)
        add, scal = self.field.add_table, self.field.scalar_table
        out = np.empty_like(blocks)
        for u in range(p):
            acc = np.zeros(blocks.shape[1], dtype=np.int64)
            for j in range(p - u):
                c = self.coef[u][j]
                if c:
                    acc = add[acc, scal[c][blocks[j]]]
            out[u] = acc
        return out


@lru_cache(maxsize=None)
def level_algebra(field: Field) -> LevelAlgebra:
    p, q = field.p, field.q
    solutions = []
    for u in range(p):
        table = np.empty((q ** (u + 1), q ** (p - u - 1), p), dtype=np.int64)
        for code in range(q ** (u + 1)):
            targets = [(code // q**j) % q for j in range(u + 1)]
            table[code] = solve_constraints(field, targets)
        solutions.append(table)
    return LevelAlgebra(field, _coefficients(p), tuple(solutions), q ** np.arange(p, dtype=np.int64))


def map_fu(field: Field, blocks, u: int) -> list[int]:
    """``F_u`` applied column-wise to ``p`` equal-length blocks."""
    p = field.p
    blocks = [list(b) for b in blocks]
    if len(blocks) != p:
        raise BlockLengthMismatch(f"expected {p} blocks, got {len(blocks)}")
    if len({len(b) for b in blocks}) != 1:
        raise BlockLengthMismatch("blocks differ in length")
    if not 0 <= u < p:
        raise ValueError(f"u must be in [0, {p - 1}]")
    out = []
    for column in zip(*blocks):
        acc = 0
        for j in range(p - u):
            acc = field.add(acc, field.scale(binom_mod_p(p - j - 1, u, p), column[j]))
        out.append(acc)
    return out


def linear_complexity_gc(s: Sequence) -> int:
    """Linear complexity by the generalized Games-Chan reduction."""
    p = s.field.p
    alg = level_algebra(s.field)
    current = s.as_array()
    lc = 0
    while len(current) > 1:
        M = len(current) // p
        b = alg.images(current)
        w = p
        for u in range(p - 1):
            if b[u].any():
                w = p - u
                break
        else:
            w = 1
        lc += (w - 1) * M
        current = b[p - w]
    if current[0] != 0:
        lc += 1
    return lc


@dataclass(frozen=True, eq=False)
class LevelState:
    """Working sequence of length ``pM`` and its cost table ``A`` (``q x pM``).

    ``costA[h, i]`` is the fewest changes to the original period that shift
    ``current[i]`` by field element ``h``.
    """

    field: Field
    M: int
    current: np.ndarray
    costA: np.ndarray


def initial_level(s: Sequence) -> LevelState:
    q, N = s.field.q, s.N
    costA = np.ones((q, N), dtype=np.int64)
    costA[0] = 0
    return LevelState(s.field, N // s.field.p, s.as_array(), costA)


def _min_cost(costA3: np.ndarray, sols: np.ndarray) -> np.ndarray:
    # costA3: (q, p, M); sols: (..., M, K, p) -> (..., M)
    M = costA3.shape[2]
    cols = np.arange(M)[:, None]
    total = costA3[sols[..., 0], 0, cols]
    for j in range(1, sols.shape[-1]):
        total = total + costA3[sols[..., j], j, cols]
    return total.min(axis=-1)


def _target_codes(alg: LevelAlgebra, b: np.ndarray) -> np.ndarray:
    """``codes[u, i]``: mixed-radix code of targets ``-b_0 .. -b_u`` at column i."""
    negb = alg.field.neg_table[b]
    return np.cumsum(negb * alg.radix[:, None], axis=0)


def _b_costs(alg: LevelAlgebra, level: LevelState, codes: np.ndarray) -> np.ndarray:
    p = alg.field.p
    costA3 = level.costA.reshape(alg.field.q, p, level.M)
    return np.stack([_min_cost(costA3, alg.solutions[u][codes[u]]) for u in range(p - 1)])


def compute_B(level: LevelState, u: int, i: int) -> int:
    """Fewest original-period changes forcing ``b_{0,i} = ... = b_{u,i} = 0``."""
    field = level.field
    p = field.p
    if not 0 <= u <= p - 2:
        raise ValueError(f"u must be in [0, {p - 2}]")
    if not 0 <= i < level.M:
        raise ValueError(f"column must be in [0, {level.M})")
    alg = level_algebra(field)
    b = alg.images(level.current)
    targets = [field.neg(int(b[j, i])) for j in range(u + 1)]
    return min(
        sum(int(level.costA[e[j], i + j * level.M]) for j in range(p))
        for e in solve_constraints(field, targets)
    )


@dataclass(frozen=True)
class LevelTrace:
    M: int
    TB: tuple[int, ...]
    w: int

    def __str__(self) -> str:
        tb = ",".join(f"TB[{u}]={t}" for u, t in enumerate(self.TB))
        return f"M={self.M}: {tb},w={self.w}"


@dataclass(frozen=True)
class AnalysisResult:
    k: int
    klc: int
    tmin: int | None
    trace: tuple[LevelTrace, ...]


def _select_w(TB, k: int, p: int) -> int:
    w = None
    if TB[p - 2] <= k:
        w = 1
    for w1 in range(2, p):
        if TB[p - w1 - 1] <= k < TB[p - w1]:
            w = w1
    if k < TB[0]:
        w = p
    assert w is not None, "TB must be nondecreasing in u"
    return w


def k_error_lc(s: Sequence, k: int) -> AnalysisResult:
    """k-error linear complexity plus the smallest budget that would lower it.

    ``tmin`` is the fewest changes to the period that force the complexity
    below ``klc``; it is ``None`` once ``klc`` is already 0.
    """
    field, N = s.field, s.N
    p, q = field.p, field.q
    if not 0 <= k <= N:
        raise BudgetOutOfRange(f"k must be in [0, {N}], got {k}")
    alg = level_algebra(field)
    level = initial_level(s)
    klc = 0
    tmin = N
    trace = []
    while len(level.current) > 1:
        M = level.M
        b = alg.images(level.current)
        codes = _target_codes(alg, b)
        B = _b_costs(alg, level, codes)
        TB = tuple(int(t) for t in B.sum(axis=1))
        w = _select_w(TB, k, p)
        if TB[p - 2] > k and TB[p - w] < tmin:
            tmin = TB[p - w]
        klc += (w - 1) * M

        # A for the carried image F_{p-w}: rows 0..p-w-1 forced to zero,
        # row p-w shifted by h.
        top = p - w
        base = codes[top - 1] if top > 0 else np.zeros(M, dtype=np.int64)
        h_codes = base[None, :] + np.arange(q)[:, None] * alg.radix[top]
        costA3 = level.costA.reshape(q, p, M)
        new_costA = _min_cost(costA3, alg.solutions[top][h_codes])

        trace.append(LevelTrace(M, TB, w))
        level = LevelState(field, M // p, b[top], new_costA)

    a0 = int(level.current[0])
    final = int(level.costA[field.neg(a0), 0])
    if final > k:
        if final < tmin:
            tmin = final
        klc += 1
    return AnalysisResult(k, klc, tmin if klc > 0 else None, tuple(trace))


@dataclass(frozen=True)
class TightProfile:
    """Jump points ``(k_i, C_i)`` of the k-error linear complexity profile."""

    points: tuple[tuple[int, int], ...]
    steps: tuple[AnalysisResult, ...] = ()

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __str__(self) -> str:
        return ", ".join(f"({k},{c})" for k, c in self.points)


def tight_profile(s: Sequence, max_points: int | None = None) -> TightProfile:
    """Walk the profile jump by jump, feeding each ``tmin`` back in as the next k."""
    if max_points is not None and max_points < 1:
        raise ValueError("max_points must be >= 1")
    steps = [k_error_lc(s, 0)]
    while steps[-1].klc > 0 and (max_points is None or len(steps) < max_points):
        steps.append(k_error_lc(s, steps[-1].tmin))
    return TightProfile(tuple((r.k, r.klc) for r in steps), tuple(steps))


def minerror(s: Sequence) -> int:
    """Fewest changes per period that lower the linear complexity."""
    if not any(s.elements):
        raise AllZeroSequence("the all-zero sequence already has linear complexity 0")
    return tight_profile(s, max_points=2).points[1][0]

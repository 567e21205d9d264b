import itertools
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lcprof.complexity import (
    LevelState,
    compute_B,
    initial_level,
    k_error_lc,
    level_algebra,
    linear_complexity_gc,
    map_fu,
    minerror,
    solve_constraints,
    tight_profile,
)
from lcprof.errors import AllZeroSequence, BlockLengthMismatch, BudgetOutOfRange
from lcprof.field import make_field
from lcprof.oracle import berlekamp_massey, brute_force_klc
from lcprof.sequence import Sequence, hamming_weight, parse_sequence, random_sequence


def seq(field, values):
    return Sequence.from_iterable(field, values)


def all_sequences(field, n):
    N = field.p**n
    for values in itertools.product(range(field.q), repeat=N):
        yield Sequence(field, n, values)


# map_fu


def test_map_fu_p3(gf3):
    assert map_fu(gf3, [[1], [2], [0]], 0) == [0]
    assert map_fu(gf3, [[1], [2], [0]], 1) == [1]
    assert map_fu(gf3, [[1], [2], [0]], 2) == [1]


def test_map_fu_p2_is_left_half(gf2):
    left, right = [1, 0, 1, 1], [0, 0, 1, 0]
    assert map_fu(gf2, [left, right], 1) == left
    assert map_fu(gf2, [left, right], 0) == [1, 0, 0, 1]


def test_map_fu_errors(gf3):
    with pytest.raises(BlockLengthMismatch):
        map_fu(gf3, [[1], [2]], 0)
    with pytest.raises(BlockLengthMismatch):
        map_fu(gf3, [[1], [2, 0], [0]], 0)


def test_images_match_map_fu(gf3):
    s = random_sequence(gf3, 3, 11)
    alg = level_algebra(gf3)
    b = alg.images(s.as_array())
    blocks = [s.elements[j * 9 : (j + 1) * 9] for j in range(3)]
    for u in range(3):
        assert b[u].tolist() == map_fu(gf3, blocks, u)


# constraint systems


@pytest.mark.parametrize("p, m, modulus", [(2, 1, None), (3, 1, None), (2, 2, [1, 1, 1]), (5, 1, None), (3, 2, [1, 0, 1])])
def test_constraint_solution_sets(p, m, modulus):
    f = make_field(p, m, modulus)
    q = f.q
    coef = level_algebra(f).coef
    for u in range(p):
        assert coef[u][p - u - 1] == 1
        assert all(c == 0 for c in coef[u][p - u :])
    every = list(itertools.product(range(q), repeat=p))
    images = {e: [map_fu(f, [[x] for x in e], u)[0] for u in range(p)] for e in every}
    for u in range(p):
        for targets in itertools.product(range(q), repeat=u + 1):
            sols = solve_constraints(f, list(targets))
            assert len(sols) == q ** (p - u - 1)
            expected = {e for e in every if images[e][: u + 1] == list(targets)}
            assert set(sols) == expected


# Games-Chan


def test_gc_example(example):
    assert linear_complexity_gc(example) == 27


@pytest.mark.parametrize("p, m, modulus, n", [(2, 1, None, 3), (3, 1, None, 2), (2, 2, [1, 1, 1], 2), (5, 1, None, 1)])
def test_gc_all_zero_and_single_one(p, m, modulus, n):
    f = make_field(p, m, modulus)
    N = p**n
    assert linear_complexity_gc(seq(f, [0] * N)) == 0
    assert linear_complexity_gc(seq(f, [0] * (N - 1) + [1])) == N
    assert linear_complexity_gc(seq(f, [f.q - 1] * N)) == 1


def test_gc_equals_bm_exhaustive(gf2, gf3):
    for f, n in [(gf2, 3), (gf3, 2)]:
        for s in all_sequences(f, n):
            assert linear_complexity_gc(s) == berlekamp_massey(s)


# cost tables


def test_initial_costs(example):
    level = initial_level(example)
    assert level.costA.shape == (3, 27)
    assert (level.costA[0] == 0).all()
    assert (level.costA[1:] == 1).all()


def test_compute_B_single_change(gf3):
    level = initial_level(seq(gf3, [1, 0, 0]))
    assert compute_B(level, 0, 0) == 1
    assert compute_B(level, 1, 0) == 1


def test_compute_B_zero_images(gf3):
    level = initial_level(seq(gf3, [0] * 9))
    assert all(compute_B(level, u, i) == 0 for u in range(2) for i in range(3))


def test_compute_B_example_first_level(example):
    level = initial_level(example)
    tb = [sum(compute_B(level, u, i) for i in range(9)) for u in range(2)]
    assert tb == [1, 3]


def test_compute_B_nondecreasing_in_u(gf3):
    for seed in range(20):
        level = initial_level(random_sequence(gf3, 2, seed))
        for i in range(level.M):
            assert compute_B(level, 0, i) <= compute_B(level, 1, i)


def test_compute_B_custom_costs(gf3):
    # columns priced by hand: only position 2 may change cheaply
    costA = np.array([[0, 0, 0], [5, 5, 1], [5, 5, 1]])
    level = LevelState(gf3, 1, np.array([1, 0, 0]), costA)
    assert compute_B(level, 0, 0) == 1
    # solutions of both rows: (0,1,1) costs 6, (1,2,2) costs 11, (2,0,0) costs 5
    assert compute_B(level, 1, 0) == 5


# k-error linear complexity on the worked example


def _rows(result):
    return [(t.M, *t.TB, t.w) for t in result.trace]


def test_klc_example_k0(example):
    r = k_error_lc(example, 0)
    assert (r.klc, r.tmin) == (27, 1)
    assert _rows(r) == [(9, 1, 3, 3), (3, 1, 1, 3), (1, 1, 1, 3)]


def test_klc_example_k1_branches(example):
    r = k_error_lc(example, 1)
    assert (r.klc, r.tmin) == (15, 3)
    assert [t.w for t in r.trace] == [2, 2, 3]
    assert r.trace[0].TB == (1, 3)


def test_klc_example_k17(example):
    r = k_error_lc(example, 17)
    assert r.klc == 0
    assert r.tmin is None


# Every row below was confirmed by brute force over error patterns (k=1 rows:
# a weight-3 pattern at positions 0, 9, 12 zeroes the forced images), and the
# profile itself by the subspace-distance oracle in test_oracle.py.
CORRECTED_STEPS = {
    0: ([(9, 1, 3, 3), (3, 1, 1, 3), (1, 1, 1, 3)], 27, 1),
    1: ([(9, 1, 3, 2), (3, 1, 3, 2), (1, 3, 3, 3)], 15, 3),
    3: ([(9, 1, 3, 1), (3, 9, 11, 3), (1, 3, 3, 1)], 7, 9),
    9: ([(9, 1, 3, 1), (3, 9, 11, 2), (1, 9, 9, 1)], 4, 11),
    10: ([(9, 1, 3, 1), (3, 9, 11, 2), (1, 9, 9, 1)], 4, 11),
    11: ([(9, 1, 3, 1), (3, 9, 11, 1), (1, 12, 16, 3)], 3, 12),
    12: ([(9, 1, 3, 1), (3, 9, 11, 1), (1, 12, 16, 2)], 2, 16),
    16: ([(9, 1, 3, 1), (3, 9, 11, 1), (1, 12, 16, 1)], 1, 17),
    17: ([(9, 1, 3, 1), (3, 9, 11, 1), (1, 12, 16, 1)], 0, None),
}


@pytest.mark.parametrize("k", sorted(CORRECTED_STEPS))
def test_klc_example_steps(example, k):
    rows, klc, tmin = CORRECTED_STEPS[k]
    r = k_error_lc(example, k)
    assert _rows(r) == rows
    assert (r.klc, r.tmin) == (klc, tmin)


def test_example_profile(example):
    prof = tight_profile(example)
    assert prof.points == ((0, 27), (1, 15), (3, 7), (9, 4), (11, 3), (12, 2), (16, 1), (17, 0))
    assert str(prof).startswith("(0,27), (1,15), (3,7)")


def test_nine_changes_reach_complexity_four(example, gf3):
    # explicit weight-9 change of the example with complexity 4
    changed = seq(gf3, [1, 2, 0, 2, 0, 1, 0, 1, 2, 1, 2, 0, 2, 0, 1, 0, 1, 2, 1, 2, 0, 2, 0, 1, 0, 1, 2])
    assert sum(a != b for a, b in zip(example, changed)) == 9
    assert berlekamp_massey(changed) == 4


def test_budget_range(example):
    with pytest.raises(BudgetOutOfRange):
        k_error_lc(example, -1)
    with pytest.raises(BudgetOutOfRange):
        k_error_lc(example, 28)
    assert k_error_lc(example, 27).klc == 0


# tight profile / minerror


def test_tight_all_zero(gf3):
    assert tight_profile(seq(gf3, [0] * 9)).points == ((0, 0),)


def test_tight_single_one(gf2):
    s = seq(gf2, [0, 0, 0, 1])
    assert tight_profile(s).points == ((0, 4), (1, 0))


def test_tight_max_points(example):
    assert tight_profile(example, 2).points == ((0, 27), (1, 15))
    assert tight_profile(example, 1).points == ((0, 27),)


def test_minerror(example, gf2):
    assert minerror(example) == 1
    assert minerror(seq(gf2, [0, 0, 0, 1])) == 1
    # one flip of (1,1) gives (0,1) or (1,0), both of complexity 2
    const = seq(gf2, [1, 1])
    assert [brute_force_klc(const, k) for k in range(3)] == [1, 1, 0]
    assert minerror(const) == 2
    with pytest.raises(AllZeroSequence):
        minerror(seq(gf2, [0, 0]))


def test_klc_k0_equals_gc_exhaustive(gf2, gf3):
    for f, n in [(gf2, 3), (gf3, 2)]:
        for s in all_sequences(f, n):
            assert k_error_lc(s, 0).klc == linear_complexity_gc(s)


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from([(2, 1, None, 4), (3, 1, None, 2), (2, 2, (1, 1, 1), 3), (3, 2, (1, 0, 1), 1), (5, 1, None, 1)]),
    st.integers(0, 2**32 - 1),
)
def test_profile_properties(config, seed):
    p, m, modulus, n = config
    s = random_sequence(make_field(p, m, modulus), n, seed)
    prof = tight_profile(s)
    ks = [k for k, _ in prof.points]
    cs = [c for _, c in prof.points]
    assert ks[0] == 0 and cs[0] == linear_complexity_gc(s)
    assert all(a < b for a, b in zip(ks, ks[1:]))
    assert all(a > b for a, b in zip(cs, cs[1:]))
    assert prof.points[-1] == (hamming_weight(s), 0)
    previous = None
    for k in range(s.N + 1):
        r = k_error_lc(s, k)
        assert 0 <= r.klc <= s.N
        if previous is not None:
            assert r.klc <= previous
        previous = r.klc
        if r.tmin is not None:
            assert r.tmin > k
        for t in r.trace:
            assert list(t.TB) == sorted(t.TB)
            assert all(0 <= x <= s.N for x in t.TB)


def test_concurrent_analyses_agree(gf3):
    seqs = [random_sequence(gf3, 3, seed) for seed in range(12)]
    expected = [tight_profile(s).points for s in seqs]
    with ThreadPoolExecutor(max_workers=4) as pool:
        got = list(pool.map(lambda s: tight_profile(s).points, seqs))
    assert got == expected

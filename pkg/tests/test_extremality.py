import itertools
import random

from harperlab.constructions import build_A_i, build_B, build_prop10
from harperlab.cube import Family, hamming_ball, mask_of, neighborhood
from harperlab.extremality import (
    balance_sections,
    ball_sandwich,
    balls_contained,
    compress_codim1,
    extremality_report,
    is_extremal,
    is_hamming_ball,
    is_neighborhood_minimal,
    min_sandwich_gap,
    section_sizes,
)
from harperlab.orders import f_value, harper_min, initial_segment_simplicial, window_radius


def S(*c):
    return mask_of(c)


def fam(n, *sets):
    return Family.from_sets(n, sets)


def test_neighborhood_minimal_examples():
    for pair in itertools.combinations(range(4), 2):
        assert is_neighborhood_minimal(Family.from_vertices(2, pair))
    assert is_neighborhood_minimal(build_B(4, 1))
    A = fam(3, [], [1, 2, 3])
    assert len(neighborhood(A)) == 8 > harper_min(3, 2)
    assert not is_neighborhood_minimal(A)


def test_report_examples():
    assert extremality_report(fam(3, [], [1, 2])).strong_extremal
    for n in range(1, 6):
        for k in range((1 << n) + 1):
            assert extremality_report(initial_segment_simplicial(n, k)).strong_extremal


def test_four_singletons_are_strongly_extremal():
    # A^c = {∅} ∪ X^(>=2) has 12 members and N(A^c) is all of Q_4, the minimum for size 12
    A = fam(4, [1], [2], [3], [4])
    rep = extremality_report(A)
    assert rep.records[0].backward_size == 16 == harper_min(4, 12)
    assert rep.strong_extremal and rep.first_failure() is None


def test_forward_only_and_first_failure():
    A = build_prop10(1)
    rep = extremality_report(A)
    assert all(rec.forward_ok for rec in rep.records)
    assert rep.first_failure() == (1, "backward")
    assert rep.forward_only and not rep.weak_extremal


def test_is_extremal_agrees_with_report_n_le_3():
    for n in (1, 2, 3):
        for bits in range(1 << (1 << n)):
            A = Family(n, bits)
            rep = extremality_report(A)
            assert is_extremal(A) == rep.strong_extremal
            assert is_extremal(A, weak=True) == rep.weak_extremal


def test_balls_contained():
    assert balls_contained(build_B(4, 1), 1) == [0, S(1, 2)]
    assert balls_contained(Family.full(4), 2) == list(range(16))
    assert balls_contained(build_A_i(4, 2, 1, 1), 1) == [S(1, 2, 3, 4)]


def brute_sandwich_gap(A: Family) -> int:
    n, best = A.n, None
    for x in A:
        inner = max(r for r in range(-1, n + 1) if r < 0 or hamming_ball(n, x, r) <= A)
        outer = min(r for r in range(n + 1) if A <= hamming_ball(n, x, r))
        best = outer - inner if best is None else min(best, outer - inner)
    return best


def test_sandwich_examples():
    for n in range(2, 6):
        for r in range(n):
            assert ball_sandwich(initial_segment_simplicial(n, f_value(n, r))).gap == 0
    s = ball_sandwich(build_B(4, 1))
    assert s.gap == 2 and s.inner_radius == 1 and s.center == 0
    assert min_sandwich_gap(build_prop10(1)) >= 2
    assert ball_sandwich(Family.empty(3)) is None


def test_sandwich_matches_brute_force():
    rng = random.Random(2)
    for _ in range(300):
        n = rng.randint(1, 5)
        A = Family(n, rng.getrandbits(1 << n))
        if not A.bits or A == Family.full(n):
            continue
        assert min_sandwich_gap(A) == brute_sandwich_gap(A)


def test_is_hamming_ball():
    for n in range(1, 6):
        for k in range(1, (1 << n) + 1):
            assert is_hamming_ball(initial_segment_simplicial(n, k))
    assert not is_hamming_ball(build_B(4, 1))
    assert is_hamming_ball(hamming_ball(5, S(2, 3), 2))


def test_compress_examples():
    seg = initial_segment_simplicial(4, 7)
    assert compress_codim1(seg, 1) == seg
    assert compress_codim1(fam(3, [], [1, 2]), 1) == fam(3, [], [1])


def test_compress_never_increases_neighbourhood():
    rng = random.Random(4)
    for _ in range(400):
        n = rng.randint(2, 7)
        A = Family(n, rng.getrandbits(1 << n))
        i = rng.randint(1, n)
        C = compress_codim1(A, i)
        assert len(C) == len(A)
        assert len(neighborhood(C)) <= len(neighborhood(A))


def test_balance_sections():
    A = fam(4, [1], [1, 2], [1, 3], [2])
    B, shift = balance_sections(A)
    assert shift == S(1)
    assert all(p <= m for p, m in section_sizes(B))


def _extremal_families(n):
    for bits in range(1 << (1 << n)):
        A = Family(n, bits)
        if window_radius(n, len(A)) is not None and is_extremal(A):
            yield A


def test_balanced_extremal_families_are_compressible_n_le_4():
    # after balancing, compressing in any direction keeps A extremal
    for n in (3, 4):
        for A in _extremal_families(n):
            B, _ = balance_sections(A)
            for i in range(1, n + 1):
                assert is_neighborhood_minimal(compress_codim1(B, i))


def test_extremal_families_in_a_window_have_width_two_sandwich_n_le_4():
    for n in (3, 4):
        for A in _extremal_families(n):
            r = window_radius(n, len(A))
            assert any(A <= hamming_ball(n, x, r + 2) for x in balls_contained(A, r)), (n, A.vertices())

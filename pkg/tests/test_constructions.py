from math import comb

import pytest

from harperlab.constructions import (
    ConstructionSpec,
    build_A_i,
    build_B,
    build_C,
    build_G,
    build_prop10,
    build_punctured_ball,
    build_two_ball_union,
    colex_base,
    construct,
    prop10_parameters,
)
from harperlab.cube import Family, hamming_ball, layers_at_least, layers_at_most, mask_of, neighborhood_sizes
from harperlab.errors import InfeasibleError
from harperlab.extremality import balls_contained, extremality_report
from harperlab.orders import f_value, g_value, initial_segment_simplicial


def S(*c):
    return mask_of(c)


def test_G_example():
    assert build_G(4, 1) == layers_at_most(4, 1) | Family.from_sets(4, [[1, 2], [1, 3], [1, 4]])
    assert len(build_G(4, 1)) == 8


def test_C_is_the_segment_of_size_g():
    for n in range(2, 9):
        for r in range(n - 1):
            assert build_C(n, r) == initial_segment_simplicial(n, g_value(n, r))


def test_B_example():
    assert build_B(4, 1) == Family.from_sets(4, [[], [1], [2], [3], [4], [1, 2], [1, 2, 3], [1, 2, 4]])


def test_B_is_two_balls_at_distance_two():
    for n in range(4, 9):
        for r in range(1, n - 2):
            assert build_B(n, r) == hamming_ball(n, 0, r) | hamming_ball(n, S(1, 2), r)


@pytest.mark.parametrize("n", range(4, 11))
def test_B_growth_and_extremality(n):
    for r in range(1, n - 2):
        B = build_B(n, r)
        sizes = neighborhood_sizes(B, n)
        for t in range(n + 1):
            expect = g_value(n, r + t) if r + t <= n - 2 else 1 << n
            assert sizes[t] == expect
        assert extremality_report(B).strong_extremal


def test_A_i_examples():
    assert build_A_i(3, 1, 1, 1) == Family.from_sets(3, [[], [1, 2], [1, 3], [2, 3], [1, 2, 3]])
    assert build_A_i(4, 2, 1, 1) == layers_at_least(4, 3) | Family.from_sets(4, [[2]])


def test_A_i_sizes_and_extremality_n_le_7():
    for n in range(3, 8):
        for r in range(0, n):
            for k in range(1, comb(n - 1, r) + 1):
                for i in range(1, n + 1):
                    A = build_A_i(n, r, k, i)
                    assert len(A) == f_value(n, n - r - 1) + k
                    assert extremality_report(A).strong_extremal, (n, r, k, i)


def test_A_i_contains_a_unique_ball():
    for n in range(4, 8):
        for r in range(1, n - 1):
            for i in range(1, n + 1):
                A = build_A_i(n, r, 1, i)
                assert balls_contained(A, n - r - 1) == [(1 << n) - 1]
    assert balls_contained(build_A_i(4, 2, 1, 1), 1) == [S(1, 2, 3, 4)]


def test_colex_base_size():
    assert len(colex_base(5, 1, 3)) == 3


def test_prop10_parameters():
    p = prop10_parameters(1)
    assert (p.n, p.r, p.k) == (10, 5, 3)
    A = build_prop10(1)
    assert len(A) == len(layers_at_least(10, 5)) - 3
    with pytest.raises(InfeasibleError):
        build_prop10(0)


def test_punctured_and_two_ball():
    assert build_punctured_ball(3, 0, 1) == Family.from_sets(3, [[1], [2], [3]])
    assert len(build_two_ball_union(4, 0, S(1, 2), 1)) == g_value(4, 1) == 8
    assert len(build_two_ball_union(5, 0, S(1, 2, 3), 1)) == 12 > g_value(5, 1)
    with pytest.raises(InfeasibleError):
        build_two_ball_union(4, 3, 3, 1)


def test_construct_dispatch():
    assert construct(ConstructionSpec("br", n=4, r=1)) == build_B(4, 1)
    assert construct(ConstructionSpec("segment", n=3, size=5)) == initial_segment_simplicial(3, 5)
    assert construct(ConstructionSpec("A_i", n=3, r=1, k=1, i=1)) == build_A_i(3, 1, 1, 1)
    with pytest.raises(InfeasibleError):
        construct(ConstructionSpec("B", n=4))
    with pytest.raises(InfeasibleError):
        ConstructionSpec("nonsense")

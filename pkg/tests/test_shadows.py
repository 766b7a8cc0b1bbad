import itertools
import random
from fractions import Fraction
from math import comb

import pytest

from harperlab.orders import initial_segment_colex, kk_min_lower_shadow
from harperlab.shadows import (
    complement_members,
    is_shadow_minimal,
    is_upper_shadow_minimal,
    local_lym_margin,
    lower_shadow,
    shift_members,
    uniform_sections,
    upper_shadow,
)
from harperlab.uniform import UniformFamily

import decompositions as dec


def U(n, r, *sets):
    return UniformFamily.from_sets(range(1, n + 1), r, sets)


def all_uniform(n, r):
    full = UniformFamily.full_layer(range(1, n + 1), r)
    lay = sorted(full.members)
    for sub in range(1 << len(lay)):
        yield full.with_members(lay[j] for j in range(len(lay)) if sub >> j & 1)


def test_lower_shadow_examples():
    assert set(lower_shadow(U(3, 2, [1, 2], [1, 3])).as_sets()) == {(1,), (2,), (3,)}
    assert lower_shadow(U(4, 2, [2, 4]), 2).as_sets() == [()]
    seg = initial_segment_colex(4, 2, 3)
    assert len(lower_shadow(seg)) == 3 == kk_min_lower_shadow(4, 2, 3)


def test_upper_shadow_examples():
    assert set(upper_shadow(U(3, 1, [1])).as_sets()) == {(1, 2), (1, 3)}
    full = UniformFamily.full_layer(range(1, 5), 2)
    assert upper_shadow(full) == UniformFamily.full_layer(range(1, 5), 3)


def test_sections_examples():
    a, b = uniform_sections(U(3, 1, [1]), 1)
    assert a.as_sets() == [()] and b.as_sets() == []
    a, b = uniform_sections(U(3, 2, [1, 2], [1, 3], [2, 3]), 1)
    assert set(a.as_sets()) == {(2,), (3,)} and b.as_sets() == [(2, 3)]
    a, b = uniform_sections(UniformFamily.full_layer(range(1, 5), 2), 3)
    assert a == UniformFamily.full_layer((1, 2, 4), 1)
    assert b == UniformFamily.full_layer((1, 2, 4), 2)


def test_local_lym_examples():
    assert local_lym_margin(UniformFamily.full_layer(range(1, 6), 2)) == 0
    assert local_lym_margin(U(5, 2)) == 0
    assert local_lym_margin(U(4, 1, [1])) == Fraction(3, 6) - Fraction(1, 4)


def test_local_lym_exhaustive_n_le_5():
    for n in range(1, 6):
        for r in range(0, n):
            top = comb(n, r)
            for F in all_uniform(n, r):
                m = local_lym_margin(F)
                assert m >= 0
                assert (m == 0) == (len(F) in (0, top))


def test_shadow_minimal_examples():
    for t in (1, 2):
        assert is_shadow_minimal(initial_segment_colex(6, 3, 11), t)
    assert not is_shadow_minimal(U(4, 2, [1, 2], [3, 4]))


def test_complement_transfer():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(2, 8)
        r = rng.randint(1, n - 1)
        lay = sorted(UniformFamily.full_layer(range(1, n + 1), r).members)
        F = UniformFamily(tuple(range(1, n + 1)), r, frozenset(m for m in lay if rng.random() < 0.4))
        Fc = complement_members(F)
        assert len(upper_shadow(F)) == len(lower_shadow(Fc))
        assert is_upper_shadow_minimal(F) == is_shadow_minimal(Fc)


def test_shift_members():
    F = U(3, 1, [1], [2])
    assert set(shift_members(F, 4).as_sets()) == {(1, 4), (2, 4)}
    with pytest.raises(ValueError):
        shift_members(F, 1)


def test_theorem11_exhaustive_n_le_5():
    for n in range(1, 6):
        for r in range(1, n + 1):
            for F in all_uniform(n, r):
                if is_shadow_minimal(F, 1):
                    assert all(is_shadow_minimal(F, t) for t in range(1, r + 1))


def _decomposition_cases(n):
    for k in range(2, n):
        keep = [v for v in range(1 << (n - 1))]
        l0 = [v for v in keep if v.bit_count() == k - 2]
        l1 = [v for v in keep if v.bit_count() == k - 1]
        for s0 in range(1 << len(l0)):
            a0 = {l0[j] for j in range(len(l0)) if s0 >> j & 1}
            for s1 in range(1 << len(l1)):
                yield k, a0, {l1[j] for j in range(len(l1)) if s1 >> j & 1}


@pytest.mark.parametrize("check", [dec.eq2_holds, dec.eq4_holds, dec.eq5_holds, dec.eq8_holds, dec.eq10_holds],
                         ids=["shadow_split", "forward_count", "upper_shadow_split", "upper_count", "backward_count"])
def test_decompositions_exhaustive_n_le_4(check):
    for n in (3, 4):
        for k, a0, a1 in _decomposition_cases(n):
            for t in range(1, n + 1):
                assert check(n, k, a0, a1, t), (n, k, sorted(a0), sorted(a1), t)


@pytest.mark.parametrize("check", [dec.eq2_holds, dec.eq4_holds, dec.eq5_holds, dec.eq8_holds, dec.eq10_holds],
                         ids=["shadow_split", "forward_count", "upper_shadow_split", "upper_count", "backward_count"])
def test_decompositions_randomized(check):
    rng = random.Random(5)
    for _ in range(250):
        n = rng.randint(4, 8)
        k = rng.randint(2, n - 1)
        a0, a1 = dec.random_parts(rng, n, k)
        t = rng.randint(1, n)
        assert check(n, k, a0, a1, t)

import itertools
from math import comb

import pytest

from harperlab.classifier import (
    EnumerationMode,
    classes_in,
    enumerate_extremal,
    full_space,
    predicted_classes,
    sandwich_space,
    segment_class,
    split_search,
)
from harperlab.cube import Family, _expand
from harperlab.errors import InfeasibleError
from harperlab.extremality import is_extremal
from harperlab.isomorphism import Automorphism, apply_automorphism, canonical_form
from harperlab.orders import f_value, g_value, initial_segment_colex, window_radius
from harperlab.isomorphism import transposition_fixes


def brute_classes(n, k, weak=False):
    """Orbit count of extremal k-families by explicit group action."""
    autos = [Automorphism(p, s) for p in itertools.permutations(range(1, n + 1)) for s in range(1 << n)]
    orbits = set()
    for combo in itertools.combinations(range(1 << n), k):
        A = Family.from_vertices(n, combo)
        if is_extremal(A, weak=weak):
            orbits.add(min(apply_automorphism(A, phi).bits for phi in autos))
    return len(orbits)


def test_examples():
    res = enumerate_extremal(3, 2, "full")
    assert len(res.representatives) == 2
    assert {tuple(r.as_sets()) for r in res.representatives} == {((), (1,)), ((), (1, 2))}
    assert len(enumerate_extremal(4, 6, "full").representatives) == 2
    assert len(enumerate_extremal(2, 2, "full").representatives) == 2


def test_full_mode_matches_brute_orbits_n_le_3():
    for n in (1, 2, 3):
        for k in range((1 << n) + 1):
            for weak in (False, True):
                assert len(enumerate_extremal(n, k, "full", weak=weak).representatives) == brute_classes(n, k, weak)


def test_theorem2_full_n_3_4():
    for n in (3, 4):
        for k in range(1, 1 << n):
            if window_radius(n, k) is None:
                continue
            res = enumerate_extremal(n, k, EnumerationMode.FULL)
            assert res.theorem2_verified, (n, k, res.matched)


def test_predicted_multiplicity_follows_transpositions():
    for n in range(3, 7):
        for r in range(0, n):
            for kk in range(1, comb(n - 1, r) + 1):
                size = f_value(n, n - r - 1) + kk
                if window_radius(n, size) is None:
                    continue
                seg = initial_segment_colex(n, r, kk)
                blocks = []
                for i in range(1, n + 1):
                    for b in blocks:
                        if transposition_fixes(seg, i, b[0]):
                            b.append(i)
                            break
                    else:
                        blocks.append([i])
                assert len(predicted_classes(n, size)) == len(blocks), (n, r, kk)


def test_split_search_matches_plain_subsets():
    for n in (2, 3, 4):
        for k in range((1 << n) + 1):
            for cap in {g_value(n, 0), 1 << n, k + 2}:
                got = sorted(split_search(n, k, cap))
                masks = (sum(1 << v for v in c) for c in itertools.combinations(range(1 << n), k))
                assert got == sorted(b for b in masks if _expand(b, n).bit_count() <= cap)


def test_split_search_counts_n4():
    # 2-subsets of Q_4 with |N| <= 8: the 32 edges and the 48 pairs at distance 2
    assert len(list(split_search(4, 2, 8))) == 80


def test_full_and_sandwich_agree_n_le_5():
    for n in (3, 4, 5):
        for k in range(1, 1 << n):
            if window_radius(n, k) is None:
                continue
            full = enumerate_extremal(n, k, "full")
            sand = enumerate_extremal(n, k, "sandwich")
            assert [r.bits for r in full.representatives] == [r.bits for r in sand.representatives]


def test_threads_give_identical_output():
    one = enumerate_extremal(5, 10, "full")
    many = enumerate_extremal(5, 10, "full", threads=3)
    assert [r.bits for r in one.representatives] == [r.bits for r in many.representatives]
    assert one.stats["qualifying_families"] == many.stats["qualifying_families"]
    a, _ = classes_in(sandwich_space(6, 30), 30, threads=1)
    b, _ = classes_in(sandwich_space(6, 30), 30, threads=2)
    assert [r.bits for r in a] == [r.bits for r in b]


def test_stats_and_serialisation():
    res = enumerate_extremal(4, 6)
    d = res.to_dict()
    assert d["theorem2_verified"] and d["stats"]["candidates"] == comb(16, 6)
    assert len(d["classes"]) == 2 and d["missing"] == []


def test_segment_class():
    assert segment_class(3, 2) == canonical_form(Family.from_sets(3, [[], [1]]))


def test_limits():
    with pytest.raises(InfeasibleError):
        enumerate_extremal(6, 10, "full")
    with pytest.raises(InfeasibleError):
        enumerate_extremal(5, 10, "sandwich", weak=True)
    with pytest.raises(InfeasibleError):
        sandwich_space(4, 5)
    assert full_space(3, 2).candidates == 28


@pytest.mark.slow
def test_sandwich_n6_all_windows():
    for k in range(1, 64):
        if window_radius(6, k) is not None:
            assert enumerate_extremal(6, k, "sandwich").theorem2_verified, k

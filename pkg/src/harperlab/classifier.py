"""Enumeration of extremal families up to isomorphism.

The search picks family members slot by slot and prunes with two monotone
bounds.  Adding members can only grow ``N(A)``, so a partial family whose
neighbourhood already exceeds Harper's bound is dead.  Symmetrically, the
vertices that can no longer be chosen are certainly in the complement, so
their neighbourhood bounds ``N(A^c)`` from below.  Survivors get the full
per-t check and only then a canonical form.
"""

from __future__ import annotations

import enum
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

import numpy as np

from .constructions import build_A_i
from .cube import Family, _expand, _full_bits, check_dimension, complement_family, hamming_ball, layer, layers_at_most
from .errors import InfeasibleError
from .extremality import growth_within
from .isomorphism import canonical_key, canonical_form
from .orders import _segment_growth, f_value, g_value, initial_segment_simplicial, window_radius

log = logging.getLogger(__name__)


class EnumerationMode(enum.Enum):
    """How the candidate space is laid out.

    FULL makes no assumption: every k-subset of Q_n is a candidate.
    SANDWICH relies on the ball-sandwich lemma for strongly extremal sets
    with ``f(n,r) < k <= g(n,r)``: some centre x has
    ``B(x, r) ⊆ A ⊆ B(x, r+2)``, and translating x to ∅ leaves only the
    members on layers r+1 and r+2 to choose.
    """

    FULL = "full"
    SANDWICH = "sandwich"


FULL_MAX_N = 5
SANDWICH_MAX_N = 7
SPLIT_MAX_N = 5


@dataclass(frozen=True)
class SearchSpace:
    n: int
    base: int
    slots: tuple[int, ...]
    picks: int
    note: str
    split: bool = False

    @property
    def candidates(self) -> int:
        return comb(len(self.slots), self.picks)


def full_space(n: int, k: int) -> SearchSpace:
    return SearchSpace(n, 0, tuple(range(1 << n)), k, "all k-subsets of Q_n")


def split_space(n: int, k: int) -> SearchSpace:
    """All k-subsets of Q_n, generated section by section (see ``split_search``)."""
    if n > SPLIT_MAX_N:
        raise InfeasibleError(f"the section split tabulates every subset of Q_(n-1) and is capped at n={SPLIT_MAX_N}")
    return SearchSpace(n, 0, tuple(range(1 << n)), k, "all k-subsets of Q_n, paired by top-coordinate sections", True)


def anchored_space(n: int, k: int) -> SearchSpace:
    """Every k-subset containing ∅; covers every orbit since Q_n is vertex-transitive."""
    if k == 0:
        return SearchSpace(n, 0, (), 0, "empty family")
    return SearchSpace(n, 1, tuple(range(1, 1 << n)), k - 1, "k-subsets containing the empty set")


def sandwich_space(n: int, k: int) -> SearchSpace:
    r = window_radius(n, k)
    if r is None:
        raise InfeasibleError(f"sandwich mode needs f(n,r) < k <= g(n,r) for some r; k={k} is in no window")
    base = layers_at_most(n, r)
    slots = tuple(sorted(layer(n, r + 1).vertices() + layer(n, r + 2).vertices()))
    return SearchSpace(n, base.bits, slots, k - f_value(n, r), f"X^(<={r}) ⊆ A ⊆ X^(<={r + 2})")


def search(space: SearchSpace, fwd_cap: int | None, bwd_cap: int | None, first: int | None = None, stats=None):
    """Yield bitsets ``base ∪ S`` over ``picks``-subsets S of ``slots``.

    Branches are cut when ``|N(partial)| > fwd_cap`` or when the vertices
    already excluded have ``|N| > bwd_cap``.  ``first`` restricts the first
    chosen slot, which is how the space is partitioned across workers.
    """
    n, slots, m = space.n, space.slots, space.picks
    full = _full_bits(n)
    L = len(slots)
    # suffix[j] = bitset of slots[j:]
    suffix = [0] * (L + 1)
    for j in range(L - 1, -1, -1):
        suffix[j] = suffix[j + 1] | (1 << slots[j])
    visited = 0

    def feasible(cur: int, j: int) -> bool:
        if fwd_cap is not None and _expand(cur, n).bit_count() > fwd_cap:
            return False
        if bwd_cap is not None:
            out = full ^ (cur | suffix[j])
            if out and _expand(out, n).bit_count() > bwd_cap:
                return False
        return True

    def rec(cur: int, j: int, left: int):
        nonlocal visited
        visited += 1
        if left == 0:
            if bwd_cap is None or feasible(cur, L):
                yield cur
            return
        for jj in range(j, L - left + 1):
            nxt = cur | (1 << slots[jj])
            if feasible(nxt, jj + 1):
                yield from rec(nxt, jj + 1, left - 1)

    if m == 0:
        if first is None and feasible(space.base, L):
            yield space.base
    elif first is None:
        if feasible(space.base, 0):
            yield from rec(space.base, 0, m)
    elif first <= L - m:
        nxt = space.base | (1 << slots[first])
        if feasible(nxt, first + 1):
            yield from rec(nxt, first + 1, m - 1)
    if stats is not None:
        stats["nodes"] = stats.get("nodes", 0) + visited


@lru_cache(maxsize=4)
def _half_tables(h: int):
    subsets = np.arange(1 << (1 << h), dtype=np.int64)
    grown = np.array([_expand(int(x), h) for x in subsets], dtype=np.int64)
    return np.bitwise_count(subsets).astype(np.int64), grown, np.bitwise_count(grown).astype(np.int64)


def split_search(n: int, k: int, cap: int, low_size: int | None = None):
    """Yield every k-subset A of Q_n with ``|N(A)| <= cap``.

    Write A = L ∪ (H + {n}) with L, H ⊆ Q_(n-1).  Then
    ``|N(A)| = |N(L) ∪ H| + |N(H) ∪ L|``, which is at least
    ``|N(L)| + |N(H)|``.  Every subset of Q_(n-1) is tabulated once, so the
    pairing only visits section pairs that pass that bound.
    ``low_size`` restricts |L|, which is how the work is partitioned.
    """
    if n == 0:
        if k <= 1 and cap >= k:
            yield (1 if k else 0)
        return
    h = n - 1
    half = 1 << h
    size, grown, grown_size = _half_tables(h)
    sizes = range(max(0, k - half), min(k, half) + 1) if low_size is None else [low_size]
    for a in sizes:
        b = k - a
        if not 0 <= b <= half:
            continue
        lows = np.flatnonzero(size == a)
        highs = np.flatnonzero(size == b)
        order = np.argsort(grown_size[highs], kind="stable")
        highs = highs[order]
        high_n = grown_size[highs]
        for low in lows[np.argsort(grown_size[lows], kind="stable")]:
            room = cap - grown_size[low]
            stop = int(np.searchsorted(high_n, room, side="right"))
            if stop == 0:
                break
            hs = highs[:stop]
            total = np.bitwise_count(grown[low] | hs).astype(np.int64) + np.bitwise_count(grown[hs] | low)
            for hb in hs[total <= cap]:
                yield int(low) | (int(hb) << half)


def _caps(n: int, k: int, weak: bool, forward_only: bool):
    fwd = _segment_growth(n, k)
    bwd = _segment_growth(n, (1 << n) - k)
    return fwd, (None if forward_only else bwd)


def _collect(space: SearchSpace, k: int, weak: bool, forward_only: bool, first: int | None):
    """Canonical keys of all survivors in one part of the space."""
    n = space.n
    fwd, bwd = _caps(n, k, weak, forward_only)
    t_max = 1 if weak else n
    stats: dict = {}
    keys: dict[tuple, int] = {}
    seen_bits = set()
    hits = 0
    if space.split:
        source = split_search(n, k, fwd[1], first)
    else:
        source = search(space, fwd[1], None if bwd is None else bwd[1], first, stats)
    for bits in source:
        if not growth_within(bits, n, fwd, t_max):
            continue
        if bwd is not None and not growth_within(_full_bits(n) ^ bits, n, bwd, t_max):
            continue
        hits += 1
        if bits in seen_bits:
            continue
        seen_bits.add(bits)
        key = canonical_key(Family(n, bits))
        keys.setdefault(key, bits)
    return keys, hits, stats.get("nodes", 0)


def _collect_part(args):
    return _collect(*args)


def classes_in(space: SearchSpace, k: int, *, weak: bool = False, forward_only: bool = False,
               threads: int = 1) -> tuple[list[Family], dict]:
    """Canonical representatives of the qualifying families in ``space``.

    ``forward_only`` asks only for minimal ``|N(A)|`` (t = 1 when weak,
    every t otherwise) and ignores the complement.
    """
    if threads <= 1 or space.picks == 0:
        keys, hits, nodes = _collect(space, k, weak, forward_only, None)
    else:
        if space.split:
            parts = [(space, k, weak, forward_only, a) for a in range(min(k, 1 << (space.n - 1)) + 1)]
        else:
            parts = [(space, k, weak, forward_only, j) for j in range(len(space.slots) - space.picks + 1)]
        keys, hits, nodes = {}, 0, 0
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for part_keys, part_hits, part_nodes in pool.map(_collect_part, parts):
                for key, bits in part_keys.items():
                    keys.setdefault(key, bits)
                hits += part_hits
                nodes += part_nodes
    reps = [canonical_form(Family(space.n, bits)) for _, bits in sorted(keys.items())]
    reps.sort(key=lambda F: F.bits)
    stats = {"candidates": space.candidates, "search_nodes": nodes, "qualifying_families": hits,
             "classes": len(reps), "space": space.note}
    return reps, stats


@dataclass(frozen=True)
class PredictedClass:
    label: str
    family: Family


def predicted_classes(n: int, k: int) -> list[PredictedClass]:
    """The extremal classes the classification predicts for size k.

    Sizes in a window ``f(n,ρ) < k <= g(n,ρ)`` get the A_i built on the top
    layers with ``r = n-ρ-1`` and colex segment size ``k - f(n,ρ)``, since
    ``|X^(>=r+1)| = f(n, n-r-1)``.  Sizes between windows are complements
    of window sizes; sizes f(n,ρ) give the exact ball.
    """
    check_dimension(n)
    total = 1 << n
    if k in (0, total):
        return [PredictedClass("empty" if k == 0 else "full cube", Family(n, 0 if k == 0 else _full_bits(n)))]
    for rho in range(n + 1):
        if f_value(n, rho) == k:
            return [PredictedClass(f"ball(rho={rho})", hamming_ball(n, 0, rho))]
    rho = window_radius(n, k)
    if rho is not None:
        return _ai_classes(n, rho, k, complemented=False)
    rho = window_radius(n, total - k)
    if rho is None:
        raise InfeasibleError(f"size {k} is in no window for n={n}")
    return _ai_classes(n, rho, total - k, complemented=True)


def _ai_classes(n: int, rho: int, size: int, complemented: bool) -> list[PredictedClass]:
    r, kk = n - rho - 1, size - f_value(n, rho)
    groups: dict[tuple, list[int]] = {}
    fams: dict[tuple, Family] = {}
    for i in range(1, n + 1):
        A = build_A_i(n, r, kk, i)
        if complemented:
            A = complement_family(A)
        key = canonical_key(A)
        groups.setdefault(key, []).append(i)
        fams.setdefault(key, canonical_form(A))
    out = []
    for key, idx in sorted(groups.items(), key=lambda kv: kv[1]):
        label = f"A_i(n={n},r={r},k={kk},i={idx})"
        if complemented:
            label = "complement of " + label
        out.append(PredictedClass(label, fams[key]))
    return out


@dataclass
class ClassificationResult:
    n: int
    size: int
    mode: EnumerationMode
    weak: bool
    representatives: list[Family]
    matched: list[str]
    predicted: list[PredictedClass]
    stats: dict = field(default_factory=dict)

    @property
    def unmatched(self) -> list[Family]:
        return [rep for rep, label in zip(self.representatives, self.matched) if label == "unmatched"]

    @property
    def missing(self) -> list[PredictedClass]:
        found = {rep.bits for rep in self.representatives}
        return [p for p in self.predicted if p.family.bits not in found]

    @property
    def theorem2_verified(self) -> bool:
        return not self.unmatched and not self.missing

    def to_dict(self) -> dict:
        from .serialization import emit_family

        return {
            "n": self.n,
            "size": self.size,
            "mode": self.mode.value,
            "weak": self.weak,
            "classes": [
                {"representative": emit_family(rep), "matched": label}
                for rep, label in zip(self.representatives, self.matched)
            ],
            "predicted": [{"label": p.label, "representative": emit_family(p.family)} for p in self.predicted],
            "missing": [p.label for p in self.missing],
            "theorem2_verified": self.theorem2_verified,
            "stats": self.stats,
        }


def enumerate_extremal(n: int, k: int, mode: EnumerationMode | str = EnumerationMode.FULL,
                       weak: bool = False, threads: int = 1) -> ClassificationResult:
    """All isomorphism classes of (strong or weak) extremal families of size k."""
    mode = EnumerationMode(mode)
    check_dimension(n)
    if not 0 <= k <= 1 << n:
        raise InfeasibleError(f"size {k} outside 0..{1 << n}")
    if mode is EnumerationMode.FULL:
        if n > FULL_MAX_N:
            raise InfeasibleError(f"full mode enumerates all k-subsets and is capped at n={FULL_MAX_N}")
        space = full_space(n, k) if n <= 4 else split_space(n, k)
    else:
        if n > SANDWICH_MAX_N:
            raise InfeasibleError(f"sandwich mode is capped at n={SANDWICH_MAX_N}")
        if weak:
            raise InfeasibleError("sandwich mode relies on a lemma that only holds for strong extremality")
        space = sandwich_space(n, k)
    reps, stats = classes_in(space, k, weak=weak, threads=threads)
    predicted = predicted_classes(n, k) if not weak else []
    by_bits = {p.family.bits: p.label for p in predicted}
    matched = [by_bits.get(rep.bits, "unmatched") for rep in reps]
    return ClassificationResult(n, k, mode, weak, reps, matched, predicted, stats)


def segment_class(n: int, k: int) -> Family:
    return canonical_form(initial_segment_simplicial(n, k))


__all__ = [
    "ClassificationResult",
    "EnumerationMode",
    "PredictedClass",
    "SearchSpace",
    "anchored_space",
    "classes_in",
    "enumerate_extremal",
    "full_space",
    "predicted_classes",
    "sandwich_space",
    "search",
    "segment_class",
    "split_search",
    "split_space",
]

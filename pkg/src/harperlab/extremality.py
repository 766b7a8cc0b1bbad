"""Minimality tests, extremality reports, ball sandwiches and compression."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .cube import (
    Family,
    _expand,
    _flip_masks,
    _full_bits,
    bits_to_array,
    complement_family,
    join_sections,
    neighborhood,
    neighborhood_sizes,
    sections,
    t_neighborhood,
    translate,
    SectionPair,
)
from .orders import _segment_growth, harper_min, initial_segment_simplicial, simplicial_rank


def is_neighborhood_minimal(A: Family) -> bool:
    """True iff ``|N(A)|`` meets Harper's bound for ``|A|``."""
    return len(neighborhood(A)) == harper_min(A.n, len(A))


@dataclass(frozen=True)
class TRecord:
    t: int
    forward_size: int
    forward_min: int
    backward_size: int
    backward_min: int

    @property
    def forward_ok(self) -> bool:
        return self.forward_size == self.forward_min

    @property
    def backward_ok(self) -> bool:
        return self.backward_size == self.backward_min

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "forward_size": self.forward_size,
            "forward_min": self.forward_min,
            "forward_ok": self.forward_ok,
            "backward_size": self.backward_size,
            "backward_min": self.backward_min,
            "backward_ok": self.backward_ok,
        }


@dataclass(frozen=True)
class ExtremalityReport:
    """Per-t comparison of ``|N^t(A)|`` and ``|N^t(A^c)|`` with Harper's bound.

    t runs over 1..n; past n both sides equal 2^n.
    """

    n: int
    size: int
    records: tuple[TRecord, ...] = field(default_factory=tuple)

    @property
    def strong_extremal(self) -> bool:
        return all(rec.forward_ok and rec.backward_ok for rec in self.records)

    @property
    def weak_extremal(self) -> bool:
        if not self.records:
            return True
        first = self.records[0]
        return first.forward_ok and first.backward_ok

    @property
    def forward_only(self) -> bool:
        """Every ``N^t(A)`` is minimal but the complement fails somewhere."""
        return all(rec.forward_ok for rec in self.records) and not self.strong_extremal

    def first_failure(self) -> tuple[int, str] | None:
        for rec in self.records:
            if not rec.forward_ok:
                return rec.t, "forward"
            if not rec.backward_ok:
                return rec.t, "backward"
        return None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "size": self.size,
            "strong_extremal": self.strong_extremal,
            "weak_extremal": self.weak_extremal,
            "forward_only": self.forward_only,
            "records": [rec.to_dict() for rec in self.records],
        }


def extremality_report(A: Family) -> ExtremalityReport:
    """Full forward/backward table for t = 1..n.

    Sizes 0 and 2^n come out vacuously extremal.
    """
    n, k = A.n, len(A)
    fwd = neighborhood_sizes(A, n)
    bwd = neighborhood_sizes(complement_family(A), n)
    fmin = _segment_growth(n, k)
    bmin = _segment_growth(n, (1 << n) - k)
    records = tuple(TRecord(t, fwd[t], fmin[t], bwd[t], bmin[t]) for t in range(1, n + 1))
    return ExtremalityReport(n, k, records)


def growth_within(bits: int, n: int, targets: tuple[int, ...], t_max: int) -> bool:
    """Check ``|N^t| <= targets[t]`` for t = 1..t_max on a raw bitset."""
    full = _full_bits(n)
    for t in range(1, t_max + 1):
        if bits == full:
            return targets[t] >= bits.bit_count()
        bits = _expand(bits, n)
        if bits.bit_count() > targets[t]:
            return False
    return True


def is_extremal(A: Family, weak: bool = False) -> bool:
    """Strong (all t) or weak (t = 1) extremality, with early exit."""
    n, k = A.n, len(A)
    t_max = 1 if weak else n
    fwd = _segment_growth(n, k)
    if not growth_within(A.bits, n, fwd, t_max):
        return False
    bwd = _segment_growth(n, (1 << n) - k)
    return growth_within(_full_bits(n) ^ A.bits, n, bwd, t_max)


def balls_contained(A: Family, r: int) -> list[int]:
    """All centres x with ``B(x, r) ⊆ A``, ascending by mask."""
    if r < 0:
        raise ValueError("radius must be nonnegative")
    outside = t_neighborhood(complement_family(A), r)
    return complement_family(outside).vertices()


def distance_field(A: Family) -> np.ndarray:
    """``d(x, A)`` for every vertex x; -1 everywhere when A is empty."""
    n = A.n
    dist = np.full(1 << n, -1, dtype=np.int16)
    if not A.bits:
        return dist
    bits, full = A.bits, _full_bits(n)
    dist[bits_to_array(bits, n)] = 0
    t = 0
    while bits != full:
        t += 1
        new = _expand(bits, n)
        dist[bits_to_array(new ^ bits, n)] = t
        bits = new
    return dist


@dataclass(frozen=True)
class BallSandwich:
    """``B(center, inner) ⊆ A ⊆ B(center, outer)``."""

    center: int
    inner_radius: int
    outer_radius: int

    @property
    def gap(self) -> int:
        return self.outer_radius - self.inner_radius

    def to_dict(self) -> dict:
        return {"center": self.center, "inner_radius": self.inner_radius,
                "outer_radius": self.outer_radius, "gap": self.gap}


def sandwich_table(A: Family) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Centres (members of A) with their best inner and outer radii."""
    n = A.n
    arr = A.to_array()
    centers = np.flatnonzero(arr)
    inner = distance_field(complement_family(A))[centers].astype(np.int64) - 1
    outer = n - distance_field(A)[centers ^ ((1 << n) - 1)].astype(np.int64)
    return centers, inner, outer


def ball_sandwich(A: Family) -> BallSandwich | None:
    """The sandwich with the smallest gap over all centres.

    For each centre the inner radius is maximal and the outer radius minimal.
    Ties between centres go to the larger inner radius, then to the centre
    that comes first in simplicial order.  Returns None for empty or full A.
    """
    if not A.bits or A.bits == _full_bits(A.n):
        return None
    centers, inner, outer = sandwich_table(A)
    rank = simplicial_rank(A.n)[centers]
    best = np.lexsort((rank, -inner, outer - inner))[0]
    return BallSandwich(int(centers[best]), int(inner[best]), int(outer[best]))


def min_sandwich_gap(A: Family) -> int | None:
    s = ball_sandwich(A)
    return None if s is None else s.gap


def is_hamming_ball(A: Family) -> bool:
    """True iff ``B(x, r) ⊂ A ⊆ B(x, r+1)`` for some x and r.

    An exact ball B(x, r) counts, taking the inner ball one radius smaller
    (the empty ball when r = 0).
    """
    if not A.bits:
        return False
    if A.bits == _full_bits(A.n):
        return True
    return ball_sandwich(A).gap <= 1


def section_sizes(A: Family) -> list[tuple[int, int]]:
    """``(|A_+|, |A_-|)`` for every direction i = 1..n."""
    out = []
    for m in _flip_masks(A.n):
        minus = (A.bits & m).bit_count()
        out.append((len(A) - minus, minus))
    return out


def balance_sections(A: Family) -> tuple[Family, int]:
    """Translate A so that ``|A_+| <= |A_-|`` in every direction.

    Returns the translated family and the translation vertex I (the set of
    directions where the upper section was strictly larger).
    """
    shift = 0
    for b, (plus, minus) in enumerate(section_sizes(A)):
        if plus > minus:
            shift |= 1 << b
    return translate(A, shift), shift


def compress_codim1(A: Family, i: int) -> Family:
    """Replace both i-sections by simplicial initial segments of the same sizes."""
    p = sections(A, i)
    plus = initial_segment_simplicial(A.n - 1, len(p.plus))
    minus = initial_segment_simplicial(A.n - 1, len(p.minus))
    return join_sections(SectionPair(plus, minus, i))

"""Uniform set systems over an explicit ground set."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .cube import coords_of, mask_of, popcount


@dataclass(frozen=True)
class UniformFamily:
    """An r-uniform family of subsets of ``ground``.

    Members are masks over the global coordinate labels (label ``i`` is bit
    ``i - 1``), so a family over ``X_i`` and one over ``[n]`` can be mixed
    without re-indexing.
    """

    ground: tuple[int, ...]
    r: int
    members: frozenset = frozenset()

    def __post_init__(self):
        ground = tuple(self.ground)
        if list(ground) != sorted(set(ground)) or any(g < 1 for g in ground):
            raise ValueError(f"ground must be sorted distinct positive labels, got {ground}")
        object.__setattr__(self, "ground", ground)
        if not 0 <= self.r <= len(ground):
            raise ValueError(f"uniformity {self.r} impossible over {len(ground)} points")
        members = frozenset(int(m) for m in self.members)
        gm = mask_of(ground)
        for m in members:
            if m & ~gm or popcount(m) != self.r:
                raise ValueError(f"member {set(coords_of(m))} is not an {self.r}-subset of the ground")
        object.__setattr__(self, "members", members)

    @classmethod
    def from_sets(cls, ground: Iterable[int], r: int, sets: Iterable[Iterable[int]]) -> "UniformFamily":
        return cls(tuple(sorted(ground)), r, frozenset(mask_of(s) for s in sets))

    @classmethod
    def full_layer(cls, ground: Iterable[int], r: int) -> "UniformFamily":
        ground = tuple(sorted(ground))
        return cls(ground, r, frozenset(mask_of(c) for c in combinations(ground, r)))

    @property
    def ground_mask(self) -> int:
        return mask_of(self.ground)

    @property
    def n(self) -> int:
        """Size of the ground set."""
        return len(self.ground)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __contains__(self, m) -> bool:
        if not isinstance(m, int):
            m = mask_of(m)
        return m in self.members

    def as_sets(self) -> list[tuple[int, ...]]:
        return sorted(coords_of(m) for m in self.members)

    def with_members(self, members: Iterable[int], r: int | None = None) -> "UniformFamily":
        return UniformFamily(self.ground, self.r if r is None else r, frozenset(members))

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, s)) + "}" for s in self.as_sets())
        return f"UniformFamily(ground={list(self.ground)}, r={self.r}, [{body}])"


def drop_one(masks: Iterable[int]) -> set[int]:
    """One step of the lower shadow on raw masks."""
    out = set()
    for m in masks:
        x = m
        while x:
            low = x & -x
            out.add(m ^ low)
            x ^= low
    return out


def add_one(masks: Iterable[int], ground_mask: int) -> set[int]:
    """One step of the upper shadow on raw masks, within ``ground_mask``."""
    out = set()
    for m in masks:
        free = ground_mask & ~m
        while free:
            low = free & -free
            out.add(m | low)
            free ^= low
    return out

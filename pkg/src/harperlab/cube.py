"""Vertices and families of the hypercube Q_n.

A vertex is a subset of ``{1, ..., n}`` stored as an integer mask: coordinate
``i`` lives in bit ``i - 1``.  A family is a subset of Q_n stored as a
membership bitset, an integer whose bit ``v`` is set iff vertex ``v`` belongs
to the family.  Both are plain immutable values.

Neighbourhoods are computed with whole-bitset shifts: flipping coordinate
``b`` of every vertex at once swaps adjacent blocks of ``2**b`` bits in the
membership bitset.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Union

import numpy as np

from .errors import DimensionError

MAX_N = 20
ENV_MAX_N = "HARPERLAB_MAX_N"


def dimension_cap() -> int:
    """Largest supported dimension; ``HARPERLAB_MAX_N`` may lower it."""
    raw = os.environ.get(ENV_MAX_N)
    if not raw:
        return MAX_N
    try:
        value = int(raw)
    except ValueError:
        return MAX_N
    return max(1, min(MAX_N, value))


def check_dimension(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise DimensionError(f"dimension must be an integer, got {n!r}")
    cap = dimension_cap()
    if not 1 <= n <= cap:
        raise DimensionError(f"dimension {n} outside 1..{cap}")


def popcount(x: int) -> int:
    return int(x).bit_count()


def mask_of(coords: Iterable[int]) -> int:
    """Mask of a set of 1-based coordinates."""
    m = 0
    for c in coords:
        if c < 1:
            raise ValueError(f"coordinates are 1-based, got {c}")
        m |= 1 << (c - 1)
    return m


def coords_of(mask: int) -> tuple[int, ...]:
    """Sorted 1-based coordinates of a mask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class Vertex:
    """A point of Q_n."""

    mask: int
    dim: int

    def __post_init__(self):
        check_dimension(self.dim)
        if not 0 <= self.mask < (1 << self.dim):
            raise DimensionError(f"mask {self.mask} is not a vertex of Q_{self.dim}")

    @classmethod
    def of(cls, n: int, coords: Iterable[int] = ()) -> "Vertex":
        return cls(mask_of(coords), n)

    def coords(self) -> tuple[int, ...]:
        return coords_of(self.mask)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __repr__(self) -> str:
        return f"Vertex({set(self.coords()) or '{}'}, n={self.dim})"


VertexLike = Union[Vertex, int]


def _as_mask(x: VertexLike, n: int | None = None) -> int:
    if isinstance(x, Vertex):
        if n is not None and x.dim != n:
            raise DimensionError(f"vertex of Q_{x.dim} used in Q_{n}")
        return x.mask
    x = int(x)
    if n is not None and not 0 <= x < (1 << n):
        raise DimensionError(f"mask {x} is not a vertex of Q_{n}")
    return x


@lru_cache(maxsize=None)
def _full_bits(n: int) -> int:
    return (1 << (1 << n)) - 1


@lru_cache(maxsize=None)
def _flip_masks(n: int) -> tuple[int, ...]:
    """For each bit b, the bitset of vertices whose bit b is clear."""
    size = 1 << n
    masks = []
    for b in range(n):
        s = 1 << b
        pattern, length = (1 << s) - 1, 2 * s
        while length < size:
            pattern |= pattern << length
            length *= 2
        masks.append(pattern)
    return tuple(masks)


@lru_cache(maxsize=None)
def vertex_weights(n: int) -> np.ndarray:
    """popcount of every vertex of Q_n, as a read-only array."""
    v = np.arange(1 << n, dtype=np.uint32)
    w = np.zeros(1 << n, dtype=np.uint8)
    for b in range(n):
        w += ((v >> b) & 1).astype(np.uint8)
    w.setflags(write=False)
    return w


def bits_to_array(bits: int, n: int) -> np.ndarray:
    size = 1 << n
    raw = bits.to_bytes(max(1, (size + 7) // 8), "little")
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:size].astype(bool)


def array_to_bits(arr: np.ndarray) -> int:
    packed = np.packbits(np.asarray(arr, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


@dataclass(frozen=True)
class Family:
    """A subset of Q_n as a membership bitset."""

    n: int
    bits: int = 0

    def __post_init__(self):
        check_dimension(self.n)
        if self.bits < 0 or self.bits > _full_bits(self.n):
            raise DimensionError(f"bitset has members outside Q_{self.n}")

    @classmethod
    def from_vertices(cls, n: int, vertices: Iterable[VertexLike]) -> "Family":
        check_dimension(n)
        bits = 0
        for v in vertices:
            bits |= 1 << _as_mask(v, n)
        return cls(n, bits)

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "Family":
        """Build from subsets of ``{1..n}`` given as coordinate collections."""
        return cls.from_vertices(n, (mask_of(s) for s in sets))

    @classmethod
    def from_array(cls, n: int, arr: np.ndarray) -> "Family":
        return cls(n, array_to_bits(arr))

    @classmethod
    def full(cls, n: int) -> "Family":
        check_dimension(n)
        return cls(n, _full_bits(n))

    @classmethod
    def empty(cls, n: int) -> "Family":
        return cls(n, 0)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: VertexLike) -> bool:
        m = _as_mask(v)
        return 0 <= m < (1 << self.n) and bool((self.bits >> m) & 1)

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def vertices(self) -> list[int]:
        if len(self) > 4096:
            return np.flatnonzero(self.to_array()).tolist()
        return list(self)

    def as_sets(self) -> list[tuple[int, ...]]:
        return [coords_of(v) for v in self]

    def to_array(self) -> np.ndarray:
        return bits_to_array(self.bits, self.n)

    def _same_dim(self, other: "Family") -> None:
        if not isinstance(other, Family):
            raise TypeError(f"expected Family, got {type(other).__name__}")
        if other.n != self.n:
            raise DimensionError(f"families live in Q_{self.n} and Q_{other.n}")

    def __or__(self, other: "Family") -> "Family":
        self._same_dim(other)
        return Family(self.n, self.bits | other.bits)

    def __and__(self, other: "Family") -> "Family":
        self._same_dim(other)
        return Family(self.n, self.bits & other.bits)

    def __sub__(self, other: "Family") -> "Family":
        self._same_dim(other)
        return Family(self.n, self.bits & ~other.bits)

    def __le__(self, other: "Family") -> bool:
        self._same_dim(other)
        return self.bits & ~other.bits == 0

    def __ge__(self, other: "Family") -> bool:
        return other <= self

    def __repr__(self) -> str:
        if len(self) > 12:
            return f"Family(n={self.n}, size={len(self)})"
        body = ", ".join("{" + ",".join(map(str, s)) + "}" if s else "∅" for s in self.as_sets())
        return f"Family(n={self.n}, [{body}])"


@dataclass(frozen=True)
class SectionPair:
    """The two i-sections of a family, both living in Q_{n-1}."""

    plus: Family
    minus: Family
    direction: int


def distance(x: VertexLike, y: VertexLike) -> int:
    """Hamming distance ``|x Δ y|``."""
    if isinstance(x, Vertex) and isinstance(y, Vertex) and x.dim != y.dim:
        raise DimensionError(f"vertices of Q_{x.dim} and Q_{y.dim}")
    return popcount(_as_mask(x) ^ _as_mask(y))


def flip_bits(bits: int, n: int, b: int) -> int:
    """Image of a membership bitset under ``v -> v XOR (1 << b)``."""
    s = 1 << b
    m = _flip_masks(n)[b]
    return ((bits & m) << s) | ((bits >> s) & m)


def _expand(bits: int, n: int) -> int:
    acc = bits
    for b in range(n):
        acc |= flip_bits(bits, n, b)
    return acc


def neighborhood(A: Family) -> Family:
    """All vertices within distance 1 of A (empty for empty A)."""
    return Family(A.n, _expand(A.bits, A.n))


def t_neighborhood(A: Family, t: int) -> Family:
    """All vertices within distance t of A; saturates at Q_n for t >= n."""
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    bits, full = A.bits, _full_bits(A.n)
    for _ in range(min(t, A.n)):
        if bits == full or bits == 0:
            break
        bits = _expand(bits, A.n)
    return Family(A.n, bits)


def neighborhood_sizes(A: Family, t_max: int | None = None) -> list[int]:
    """``[|N^0(A)|, |N^1(A)|, ..., |N^t_max(A)|]`` in one sweep."""
    t_max = A.n if t_max is None else t_max
    bits, full = A.bits, _full_bits(A.n)
    sizes = [bits.bit_count()]
    for _ in range(t_max):
        if bits != full and bits != 0:
            bits = _expand(bits, A.n)
        sizes.append(bits.bit_count())
    return sizes


def hamming_ball(n: int, x: VertexLike, r: int) -> Family:
    """Exact Hamming ball B(x, r); radii above n are treated as n."""
    if r < 0:
        raise ValueError(f"radius must be nonnegative, got {r}")
    check_dimension(n)
    return t_neighborhood(Family(n, 1 << _as_mask(x, n)), min(r, n))


def complement_family(A: Family) -> Family:
    return Family(A.n, _full_bits(A.n) ^ A.bits)


@lru_cache(maxsize=None)
def _layer_bits(n: int, r: int) -> int:
    return array_to_bits(vertex_weights(n) == r)


def layer(n: int, r: int) -> Family:
    """``[n]^(r)`` as a family; empty when r is out of range."""
    check_dimension(n)
    return Family(n, _layer_bits(n, r) if 0 <= r <= n else 0)


def layers_at_most(n: int, r: int) -> Family:
    """``X^(<=r)``."""
    check_dimension(n)
    return Family(n, array_to_bits(vertex_weights(n) <= r) if r >= 0 else 0)


def layers_at_least(n: int, r: int) -> Family:
    """``X^(>=r)``."""
    check_dimension(n)
    return Family(n, array_to_bits(vertex_weights(n) >= r) if r <= n else 0)


def _check_direction(n: int, i: int) -> int:
    if not 1 <= i <= n:
        raise DimensionError(f"coordinate {i} outside 1..{n}")
    return i - 1


def sections(A: Family, i: int) -> SectionPair:
    """Split A along coordinate i into its upper and lower i-sections.

    Both halves are re-indexed onto Q_{n-1} by deleting coordinate i and
    shifting the later coordinates down by one.
    """
    b = _check_direction(A.n, i)
    if A.n < 2:
        raise DimensionError("sections need n >= 2")
    n, s = A.n, 1 << b
    blocks = 1 << (n - b - 1)
    if blocks <= 64:
        block_mask = (1 << s) - 1
        plus = minus = 0
        bits = A.bits
        for j in range(blocks):
            minus |= ((bits >> (2 * j * s)) & block_mask) << (j * s)
            plus |= ((bits >> ((2 * j + 1) * s)) & block_mask) << (j * s)
    else:
        arr = A.to_array().reshape(blocks, 2, s)
        minus = array_to_bits(arr[:, 0, :].ravel())
        plus = array_to_bits(arr[:, 1, :].ravel())
    return SectionPair(Family(n - 1, plus), Family(n - 1, minus), i)


def join_sections(p: SectionPair) -> Family:
    """Inverse of :func:`sections`."""
    if p.plus.n != p.minus.n:
        raise DimensionError("sections live in different cubes")
    n = p.plus.n + 1
    b = _check_direction(n, p.direction)
    s = 1 << b
    blocks = 1 << (n - b - 1)
    if blocks <= 64:
        block_mask = (1 << s) - 1
        bits = 0
        for j in range(blocks):
            bits |= ((p.minus.bits >> (j * s)) & block_mask) << (2 * j * s)
            bits |= ((p.plus.bits >> (j * s)) & block_mask) << ((2 * j + 1) * s)
    else:
        arr = np.empty((blocks, 2, s), dtype=bool)
        arr[:, 0, :] = p.minus.to_array().reshape(blocks, s)
        arr[:, 1, :] = p.plus.to_array().reshape(blocks, s)
        bits = array_to_bits(arr.ravel())
    return Family(n, bits)


def translate(A: Family, shift: VertexLike) -> Family:
    """``A Δ shift = {v XOR shift : v in A}``."""
    s = _as_mask(shift, A.n)
    bits = A.bits
    for b in range(A.n):
        if (s >> b) & 1:
            bits = flip_bits(bits, A.n, b)
    return Family(A.n, bits)

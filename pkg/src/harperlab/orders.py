"""Lex, colex and simplicial orders, size functions, and minimum oracles.

``harper_min`` and the Kruskal-Katona minima are computed by building the
relevant initial segment and expanding it; no closed formulas are used.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

from .cube import (
    Family,
    Vertex,
    VertexLike,
    _as_mask,
    check_dimension,
    neighborhood_sizes,
    popcount,
    vertex_weights,
)
from .errors import DimensionError
from .uniform import UniformFamily, drop_one


class OrderKind(enum.Enum):
    LEX = "lex"
    COLEX = "colex"
    SIMPLICIAL = "simplicial"


def compare(kind: OrderKind | str, a: VertexLike, b: VertexLike) -> int:
    """Three-way comparison: -1 if a precedes b, 0 if equal, 1 otherwise.

    lex and colex apply their set definitions verbatim to any pair, so they
    are defined across layers too.
    """
    kind = OrderKind(kind)
    if isinstance(a, Vertex) and isinstance(b, Vertex) and a.dim != b.dim:
        raise DimensionError("vertices from different cubes")
    a, b = _as_mask(a), _as_mask(b)
    if a == b:
        return 0
    if kind is OrderKind.SIMPLICIAL:
        wa, wb = popcount(a), popcount(b)
        if wa != wb:
            return -1 if wa < wb else 1
        kind = OrderKind.LEX
    d = a ^ b
    if kind is OrderKind.LEX:
        return -1 if a & (d & -d) else 1
    return -1 if b & (1 << (d.bit_length() - 1)) else 1


@lru_cache(maxsize=None)
def simplicial_order(n: int) -> np.ndarray:
    """All vertices of Q_n listed in simplicial order."""
    check_dimension(n)
    out = np.empty(1 << n, dtype=np.int64)
    pos = 0
    for r in range(n + 1):
        # combinations() of range(n) come out in lex order of sorted tuples,
        # which is exactly the lex order on the layer
        for c in combinations(range(n), r):
            m = 0
            for j in c:
                m |= 1 << j
            out[pos] = m
            pos += 1
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def simplicial_rank(n: int) -> np.ndarray:
    """``rank[v]`` = position of vertex v in the simplicial order."""
    order = simplicial_order(n)
    rank = np.empty(1 << n, dtype=np.int64)
    rank[order] = np.arange(1 << n)
    rank.setflags(write=False)
    return rank


def initial_segment_simplicial(n: int, k: int) -> Family:
    """The first k vertices of Q_n in simplicial order."""
    check_dimension(n)
    if not 0 <= k <= 1 << n:
        raise ValueError(f"segment size {k} outside 0..{1 << n}")
    return _segment(n, k)


@lru_cache(maxsize=4096)
def _segment(n: int, k: int) -> Family:
    arr = np.zeros(1 << n, dtype=bool)
    arr[simplicial_order(n)[:k]] = True
    return Family.from_array(n, arr)


def colex_layer(n: int, r: int, limit: int | None = None) -> list[int]:
    """r-subsets of [n] in colex order, which is increasing mask order."""
    if not 0 <= r <= n:
        raise ValueError(f"no {r}-subsets of [{n}]")
    total = comb(n, r)
    limit = total if limit is None else min(limit, total)
    out = []
    if limit == 0:
        return out
    if r == 0:
        return [0]
    m = (1 << r) - 1
    while len(out) < limit:
        out.append(m)
        # next mask with the same popcount
        low = m & -m
        ripple = m + low
        m = ripple | (((m ^ ripple) >> 2) // low)
    return out


def initial_segment_colex(n: int, r: int, m: int) -> UniformFamily:
    """The m colex-smallest r-subsets of [n]."""
    if not 0 <= m <= comb(n, r):
        raise ValueError(f"colex segment size {m} outside 0..C({n},{r})")
    return UniformFamily(tuple(range(1, n + 1)), r, frozenset(colex_layer(n, r, m)))


def binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def f_value(n: int, r: int) -> int:
    """``|X^(<=r)|``, the size of an exact ball of radius r."""
    if not 0 <= r <= n:
        raise ValueError(f"f({n},{r}) needs 0 <= r <= n")
    return sum(comb(n, j) for j in range(r + 1))


def g_value(n: int, r: int) -> int:
    """``|G_r| = f(n, r) + C(n-1, r)``."""
    if not 0 <= r <= n - 1:
        raise ValueError(f"g({n},{r}) needs 0 <= r <= n-1")
    return f_value(n, r) + comb(n - 1, r)


@dataclass(frozen=True)
class SizeTable:
    n: int
    f: tuple[int, ...]
    g: tuple[int, ...]


def size_table(n: int) -> SizeTable:
    return SizeTable(n, tuple(f_value(n, r) for r in range(n + 1)), tuple(g_value(n, r) for r in range(n)))


def window_radius(n: int, k: int) -> int | None:
    """The r with ``f(n,r) < k <= g(n,r)``, or None if k is in no window."""
    for r in range(n):
        if f_value(n, r) < k <= g_value(n, r):
            return r
    return None


@lru_cache(maxsize=None)
def _segment_growth(n: int, k: int) -> tuple[int, ...]:
    return tuple(neighborhood_sizes(_segment(n, k), n))


def harper_min(n: int, k: int) -> int:
    """Smallest possible ``|N(A)|`` over ``A ⊆ Q_n`` with ``|A| = k``."""
    return harper_min_t(n, k, 1)


def harper_min_t(n: int, k: int, t: int) -> int:
    """Smallest possible ``|N^t(A)|`` over ``|A| = k``."""
    check_dimension(n)
    if not 0 <= k <= 1 << n:
        raise ValueError(f"size {k} outside 0..{1 << n}")
    if t < 0:
        raise ValueError("t must be nonnegative")
    growth = _segment_growth(n, k)
    return growth[min(t, n)]


@lru_cache(maxsize=None)
def _colex_shadow_sizes(n: int, r: int, m: int) -> tuple[int, ...]:
    level = set(colex_layer(n, r, m))
    sizes = [len(level)]
    for _ in range(r):
        level = drop_one(level)
        sizes.append(len(level))
    return tuple(sizes)


def kk_min_lower_shadow(n: int, r: int, m: int, t: int = 1) -> int:
    """Smallest ``|∂^t F|`` over ``F ⊆ [n]^(r)`` with ``|F| = m``."""
    if not 0 <= r <= n:
        raise ValueError(f"no {r}-subsets of [{n}]")
    if not 0 <= m <= comb(n, r):
        raise ValueError(f"family size {m} outside 0..C({n},{r})")
    if not 0 <= t <= r:
        raise ValueError(f"shadow depth {t} outside 0..{r}")
    return _colex_shadow_sizes(n, r, m)[t]


def kk_min_upper_shadow(n: int, r: int, m: int, t: int = 1) -> int:
    """Smallest ``|∂^{+t} F|`` over ``F ⊆ [n]^(r)`` with ``|F| = m``.

    Complementing every member turns upper shadows in [n]^(r) into lower
    shadows in [n]^(n-r) of the same size.
    """
    if not 0 <= r <= n:
        raise ValueError(f"no {r}-subsets of [{n}]")
    if not 0 <= t <= n - r:
        raise ValueError(f"upper shadow depth {t} outside 0..{n - r}")
    return kk_min_lower_shadow(n, n - r, m, t)


def total_weight(A: Family) -> int:
    """Sum of the cardinalities of the members of A."""
    if len(A) <= 4096:
        return sum(popcount(v) for v in A)
    return int(vertex_weights(A.n)[A.to_array()].sum(dtype=np.int64))

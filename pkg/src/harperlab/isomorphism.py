"""Automorphisms of Q_n, canonical forms and isomorphism tests.

An automorphism is a coordinate permutation followed by a translation:
``v -> perm(v) XOR shift``.  Composition ``phi * psi`` means "apply psi
first", which gives ``(perm_phi ∘ perm_psi, perm_phi(shift_psi) ^ shift_phi)``.

Canonical forms are exact up to n = 8.  The representative of an orbit is
the image whose members, read in simplicial order, give the smallest
sequence of simplicial ranks after first comparing the sorted weight
profile.  Because weight profiles are invariant under coordinate
permutations, only translations that move a member with the smallest
distance profile onto ∅ have to be tried.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import factorial

import numpy as np

from .cube import Family, VertexLike, _as_mask, check_dimension, popcount, translate, vertex_weights
from .errors import DimensionError, UnsupportedDimensionError
from .orders import simplicial_order, simplicial_rank
from .uniform import UniformFamily

CANONICAL_MAX_N = 8
_BACKTRACK_NODE_LIMIT = 200_000


def permute_mask(mask: int, perm: tuple[int, ...]) -> int:
    """Relabel coordinates: coordinate i goes to ``perm[i-1]``."""
    out = 0
    for i, target in enumerate(perm):
        if (mask >> i) & 1:
            out |= 1 << (target - 1)
    return out


@dataclass(frozen=True)
class Automorphism:
    """``v -> perm(v) XOR shift`` on Q_n, with 1-based ``perm``."""

    perm: tuple[int, ...]
    shift: int = 0

    def __post_init__(self):
        perm = tuple(int(p) for p in self.perm)
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise ValueError(f"{perm} is not a permutation of 1..{len(perm)}")
        object.__setattr__(self, "perm", perm)
        if not 0 <= self.shift < (1 << len(perm)):
            raise DimensionError(f"shift {self.shift} is not a vertex of Q_{len(perm)}")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "Automorphism":
        return cls(tuple(range(1, n + 1)), 0)

    @classmethod
    def translation(cls, n: int, shift: VertexLike) -> "Automorphism":
        return cls(tuple(range(1, n + 1)), _as_mask(shift, n))

    @classmethod
    def permutation(cls, perm) -> "Automorphism":
        return cls(tuple(perm), 0)

    @classmethod
    def random(cls, n: int, rng: random.Random | None = None) -> "Automorphism":
        rng = rng or random.Random()
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        return cls(tuple(perm), rng.randrange(1 << n))

    def __call__(self, v: VertexLike) -> int:
        return permute_mask(_as_mask(v, self.n), self.perm) ^ self.shift

    def __mul__(self, other: "Automorphism") -> "Automorphism":
        if other.n != self.n:
            raise DimensionError("automorphisms of different cubes")
        perm = tuple(self.perm[p - 1] for p in other.perm)
        return Automorphism(perm, permute_mask(other.shift, self.perm) ^ self.shift)

    def inverse(self) -> "Automorphism":
        inv = [0] * self.n
        for i, p in enumerate(self.perm, start=1):
            inv[p - 1] = i
        inv = tuple(inv)
        return Automorphism(inv, permute_mask(self.shift, inv))

    def table(self) -> np.ndarray:
        """Image of every vertex, indexed by vertex."""
        return _perm_table(self.perm) ^ self.shift


def compose(phi: Automorphism, psi: Automorphism) -> Automorphism:
    """``phi ∘ psi``: apply psi, then phi."""
    return phi * psi


@lru_cache(maxsize=512)
def _perm_table(perm: tuple[int, ...]) -> np.ndarray:
    n = len(perm)
    v = np.arange(1 << n, dtype=np.int64)
    out = np.zeros(1 << n, dtype=np.int64)
    for i, target in enumerate(perm):
        out |= ((v >> i) & 1) << (target - 1)
    out.setflags(write=False)
    return out


def apply_automorphism(A: Family, phi: Automorphism) -> Family:
    if phi.n != A.n:
        raise DimensionError(f"automorphism of Q_{phi.n} applied to a family in Q_{A.n}")
    if len(A) <= 64:
        return Family.from_vertices(A.n, (phi(v) for v in A))
    arr = np.zeros(1 << A.n, dtype=bool)
    arr[phi.table()[np.flatnonzero(A.to_array())]] = True
    return Family.from_array(A.n, arr)


@lru_cache(maxsize=None)
def _all_perm_tables(n: int) -> np.ndarray:
    """Vertex images under every coordinate permutation, shape (n!, 2^n)."""
    perms = np.array(list(permutations(range(n))), dtype=np.int64).reshape(-1, n)
    v = np.arange(1 << n, dtype=np.int64)
    out = np.zeros((perms.shape[0], 1 << n), dtype=np.int64)
    for i in range(n):
        out |= ((v >> i) & 1)[None, :] << perms[:, i][:, None]
    dtype = np.uint8 if n <= 8 else np.uint16
    out = out.astype(dtype)
    out.setflags(write=False)
    return out


def _lexmin_row(rows: np.ndarray) -> int:
    idx = np.arange(rows.shape[0])
    for col in range(rows.shape[1]):
        vals = rows[idx, col]
        idx = idx[vals == vals.min()]
        if idx.size == 1:
            break
    return int(idx[0])


def _best_anchors(members: np.ndarray, n: int) -> np.ndarray:
    """Members whose sorted distance profile to A is lexicographically least."""
    w = vertex_weights(n)
    profiles = np.sort(w[members[:, None] ^ members[None, :]], axis=1)
    best = profiles[_lexmin_row(profiles)]
    return members[np.all(profiles == best, axis=1)]


def canonical_key(A: Family) -> tuple[int, ...]:
    """Sorted simplicial ranks of the canonical representative."""
    if A.n > CANONICAL_MAX_N:
        raise UnsupportedDimensionError(
            f"canonical forms are exhaustive over the group and capped at n={CANONICAL_MAX_N}"
        )
    if not A.bits:
        return ()
    n = A.n
    members = np.flatnonzero(A.to_array()).astype(np.int64)
    tables = _all_perm_tables(n)
    rank = simplicial_rank(n).astype(np.uint16)
    best = None
    for a in _best_anchors(members, n):
        images = tables[:, members ^ a]
        ranks = np.sort(rank[images], axis=1)
        row = ranks[_lexmin_row(ranks)]
        if best is None or tuple(row) < best:
            best = tuple(int(x) for x in row)
    return best


def canonical_form(A: Family) -> Family:
    """The canonical representative of A's orbit under Aut(Q_n)."""
    key = canonical_key(A)
    order = simplicial_order(A.n)
    return Family.from_vertices(A.n, (int(order[r]) for r in key))


def _distance_histogram(A: Family) -> tuple[int, ...]:
    members = np.flatnonzero(A.to_array())
    if members.size > 4096:
        return ()
    d = vertex_weights(A.n)[members[:, None] ^ members[None, :]]
    return tuple(np.bincount(d.ravel(), minlength=A.n + 1).tolist())


def _max_ball(A: Family) -> tuple[int, list[int]]:
    from .extremality import balls_contained

    if not A.bits:
        return -1, []
    r = 0
    centers = balls_contained(A, 0)
    while r < A.n:
        nxt = balls_contained(A, r + 1)
        if not nxt:
            break
        r, centers = r + 1, nxt
    return r, centers


def _pairwise_distances(vs: list[int]) -> tuple[int, ...]:
    return tuple(sorted(popcount(a ^ b) for i, a in enumerate(vs) for b in vs[i + 1:]))


@dataclass(frozen=True)
class IsoVerdict:
    """Outcome of an isomorphism test.

    ``exact`` is False only when the bounded search for large n gave up; the
    ``isomorphic`` field is then a best effort negative.
    """

    isomorphic: bool
    exact: bool
    method: str
    witness: Automorphism | None = None

    def __bool__(self) -> bool:
        return self.isomorphic


def check_isomorphism(A: Family, B: Family) -> IsoVerdict:
    if A.n != B.n:
        raise DimensionError(f"families live in Q_{A.n} and Q_{B.n}")
    if len(A) != len(B):
        return IsoVerdict(False, True, "size")
    if A == B:
        return IsoVerdict(True, True, "equal", Automorphism.identity(A.n))
    if _distance_histogram(A) != _distance_histogram(B):
        return IsoVerdict(False, True, "distance-profile")
    if A.n <= CANONICAL_MAX_N:
        return IsoVerdict(canonical_key(A) == canonical_key(B), True, "canonical-form")
    return _anchored_search(A, B)


def are_isomorphic(A: Family, B: Family) -> bool:
    """Exact isomorphism test; raises if the large-n search is inconclusive."""
    verdict = check_isomorphism(A, B)
    if not verdict.exact:
        raise UnsupportedDimensionError("anchored isomorphism search was inconclusive")
    return verdict.isomorphic


def _coordinate_profiles(members: list[int], n: int):
    single = []
    for i in range(n):
        single.append(tuple(sorted(popcount(v) for v in members if (v >> i) & 1)))
    pair = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            bi, bj = 1 << i, 1 << j
            pair[i][j] = tuple(sorted(popcount(v) for v in members if v & bi and v & bj))
    return single, pair


def _anchored_search(A: Family, B: Family) -> IsoVerdict:
    """Isomorphism search anchored at the centres of the largest contained balls.

    Any isomorphism maps the set of centres of maximal-radius balls inside A
    onto the corresponding set for B, so fixing one centre of A and trying
    every centre of B leaves only coordinate permutations, which are found by
    backtracking under pairwise coordinate profiles.
    """
    ra, ca = _max_ball(A)
    rb, cb = _max_ball(B)
    if ra != rb or len(ca) != len(cb) or _pairwise_distances(ca) != _pairwise_distances(cb):
        return IsoVerdict(False, True, "ball-structure")
    n = A.n
    a0 = ca[0]
    Aa = translate(A, a0)
    target_a = Aa.vertices()
    single_a, pair_a = _coordinate_profiles(target_a, n)
    budget = [_BACKTRACK_NODE_LIMIT]
    exhausted = False
    for b in cb:
        Bb = translate(B, b)
        members_b = Bb.vertices()
        single_b, pair_b = _coordinate_profiles(members_b, n)
        if sorted(single_a) != sorted(single_b):
            continue
        goal = set(members_b)
        perm = _match_coordinates(n, single_a, pair_a, single_b, pair_b, target_a, goal, budget)
        if perm is not None:
            phi = Automorphism(tuple(p + 1 for p in perm), 0)
            # x -> phi(x ^ a0) ^ b maps A onto B
            witness = Automorphism.translation(n, b) * phi * Automorphism.translation(n, a0)
            return IsoVerdict(True, True, "anchored-search", witness)
        if budget[0] <= 0:
            exhausted = True
            break
    return IsoVerdict(False, not exhausted, "anchored-search")


def _match_coordinates(n, single_a, pair_a, single_b, pair_b, members_a, goal, budget):
    image = [-1] * n
    used = [False] * n

    def extend(i):
        budget[0] -= 1
        if budget[0] <= 0:
            return False
        if i == n:
            perm = tuple(image)
            return all(permute_mask(v, tuple(p + 1 for p in perm)) in goal for v in members_a)
        for j in range(n):
            if used[j] or single_a[i] != single_b[j]:
                continue
            if any(pair_a[i][p] != pair_b[j][image[p]] for p in range(i)):
                continue
            image[i], used[j] = j, True
            if extend(i + 1):
                return True
            image[i], used[j] = -1, False
        return False

    return tuple(image) if extend(0) else None


def transposition_fixes(F: UniformFamily, i: int, j: int) -> bool:
    """True iff swapping labels i and j maps F onto itself."""
    if i == j:
        raise ValueError("transposition needs two distinct labels")
    if i not in F.ground or j not in F.ground:
        raise ValueError(f"labels {i}, {j} must lie in the ground set {F.ground}")
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    for m in F.members:
        if bool(m & bi) != bool(m & bj) and m ^ bi ^ bj not in F.members:
            return False
    return True


def is_left_compressed(F: UniformFamily) -> bool:
    """For i < j: ``j ∈ A, i ∉ A`` implies ``A - j + i ∈ F``."""
    for m in F.members:
        for a, i in enumerate(F.ground):
            bi = 1 << (i - 1)
            if m & bi:
                continue
            for j in F.ground[a + 1:]:
                bj = 1 << (j - 1)
                if m & bj and m ^ bj ^ bi not in F.members:
                    return False
    return True


def uniform_are_isomorphic(F: UniformFamily, G: UniformFamily, max_ground: int = 9) -> bool:
    """Is there a bijection of grounds carrying F onto G?"""
    if F.n != G.n or F.r != G.r or len(F) != len(G):
        return False
    if F.n > max_ground:
        raise UnsupportedDimensionError(f"uniform isomorphism is brute force up to {max_ground} points")
    degree_f = sorted(sum(1 for m in F.members if m >> (g - 1) & 1) for g in F.ground)
    degree_g = sorted(sum(1 for m in G.members if m >> (g - 1) & 1) for g in G.ground)
    if degree_f != degree_g:
        return False
    goal = G.members
    for image in permutations(G.ground):
        mapping = dict(zip(F.ground, image))
        if all(_relabel(m, mapping) in goal for m in F.members):
            return True
    return False


def _relabel(mask: int, mapping: dict[int, int]) -> int:
    out = 0
    for src, dst in mapping.items():
        if (mask >> (src - 1)) & 1:
            out |= 1 << (dst - 1)
    return out


def group_order(n: int) -> int:
    check_dimension(n)
    return (1 << n) * factorial(n)


def orbit_invariants(A: Family) -> dict:
    """Cheap invariants used for fast rejection and reporting."""
    r, centers = _max_ball(A)
    return {
        "size": len(A),
        "distance_histogram": _distance_histogram(A),
        "max_ball_radius": r,
        "max_ball_centers": len(centers),
        "center_distances": _pairwise_distances(centers),
    }


__all__ = [
    "Automorphism",
    "CANONICAL_MAX_N",
    "IsoVerdict",
    "apply_automorphism",
    "are_isomorphic",
    "canonical_form",
    "canonical_key",
    "check_isomorphism",
    "compose",
    "group_order",
    "is_left_compressed",
    "orbit_invariants",
    "permute_mask",
    "transposition_fixes",
    "uniform_are_isomorphic",
]

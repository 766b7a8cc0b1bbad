"""Shared helpers for the section and shadow decomposition identities."""

from harperlab.cube import Family, _expand, layer, layers_at_least, layers_at_most, neighborhood_sizes, sections
from harperlab.shadows import lower_shadow, upper_shadow
from harperlab.uniform import UniformFamily


def section_recursion_holds(A: Family) -> bool:
    """|N^t(A)| = |N^t(A_+) ∪ N^(t-1)(A_-)| + |N^t(A_-) ∪ N^(t-1)(A_+)| for every i and t."""
    n = A.n
    sizes = neighborhood_sizes(A, n)
    for i in range(1, n + 1):
        p = sections(A, i)
        plus_prev, minus_prev = p.plus.bits, p.minus.bits
        for t in range(1, n + 1):
            plus_now, minus_now = _expand(plus_prev, n - 1), _expand(minus_prev, n - 1)
            total = (plus_now | minus_prev).bit_count() + (minus_now | plus_prev).bit_count()
            if total != sizes[t]:
                return False
            plus_prev, minus_prev = plus_now, minus_now
    return True


def theorem2_family(n: int, k: int, a0: set[int], a1: set[int]):
    """A = X^(>=k) ∪ 𝒜_1 ∪ 𝒜_0 with 𝒜_0 ⊆ [n-1]^(k-2), 𝒜_1 ⊆ [n-1]^(k-1).

    Returns A together with 𝒜 = (𝒜_0 + {n}) ∪ 𝒜_1 and its layer complement ℬ.
    """
    top = 1 << (n - 1)
    A = layers_at_least(n, k) | Family.from_vertices(n, a0 | a1)
    calA = UniformFamily(tuple(range(1, n + 1)), k - 1, frozenset({m | top for m in a0} | a1))
    full = UniformFamily.full_layer(range(1, n + 1), k - 1)
    calB = full.with_members(full.members - calA.members)
    return A, calA, calB


def parts(n: int, k: int, a0: set[int], a1: set[int]):
    ground = tuple(range(1, n))
    A0 = UniformFamily(ground, k - 2, frozenset(a0))
    A1 = UniformFamily(ground, k - 1, frozenset(a1))
    B0 = UniformFamily.full_layer(ground, k - 2).with_members(set(UniformFamily.full_layer(ground, k - 2).members) - a0)
    B1 = UniformFamily.full_layer(ground, k - 1).with_members(set(UniformFamily.full_layer(ground, k - 1).members) - a1)
    return A0, A1, B0, B1


def _shadow(F: UniformFamily, t: int) -> set[int]:
    if t < 0:
        return set()
    if t > F.r:
        return set()
    return set(lower_shadow(F, t).members)


def _up(F: UniformFamily, t: int) -> set[int]:
    if t < 0 or F.r + t > F.n:
        return set()
    return set(upper_shadow(F, t).members)


def eq2_holds(n, k, a0, a1, t) -> bool:
    """∂^-t 𝒜 = (∂^-t 𝒜_0 + {n}) ∪ (∂^-(t-1) 𝒜_0 ∪ ∂^-t 𝒜_1)."""
    _, calA, _ = theorem2_family(n, k, a0, a1)
    A0, A1, _, _ = parts(n, k, a0, a1)
    top = 1 << (n - 1)
    lhs = _shadow(calA, t)
    rhs = {m | top for m in _shadow(A0, t)} | _shadow(A0, t - 1) | _shadow(A1, t)
    return lhs == rhs


def eq4_holds(n, k, a0, a1, t) -> bool:
    """|N^t(A)| = |X^(>=k-t)| + |∂^-t 𝒜|."""
    A, calA, _ = theorem2_family(n, k, a0, a1)
    lhs = neighborhood_sizes(A, t)[t]
    return lhs == len(layers_at_least(n, max(0, k - t))) + len(_shadow(calA, t))


def eq5_holds(n, k, a0, a1, t) -> bool:
    """∂^+t ℬ = ((∂_n^+t ℬ_0 ∪ ∂_n^+(t-1) ℬ_1) + {n}) ∪ ∂_n^+t ℬ_1, ground of ∂_n^+ being [n-1]."""
    _, _, calB = theorem2_family(n, k, a0, a1)
    _, _, B0, B1 = parts(n, k, a0, a1)
    top = 1 << (n - 1)
    lhs = _up(calB, t)
    rhs = {m | top for m in _up(B0, t) | _up(B1, t - 1)} | _up(B1, t)
    return lhs == rhs


def eq8_holds(n, k, a0, a1, t) -> bool:
    """|∂_n^+t ℬ_0 ∪ ∂_n^+(t-1) ℬ_1| + |∂_n^+t ℬ_1| = |∂^+t ℬ|."""
    _, _, calB = theorem2_family(n, k, a0, a1)
    _, _, B0, B1 = parts(n, k, a0, a1)
    return len(_up(B0, t) | _up(B1, t - 1)) + len(_up(B1, t)) == len(_up(calB, t))


def eq10_holds(n, k, a0, a1, t) -> bool:
    """|N^t(A^c)| = |X^(<=k+t-2)| + |∂^+t ℬ|."""
    from harperlab.cube import complement_family

    A, _, calB = theorem2_family(n, k, a0, a1)
    lhs = neighborhood_sizes(complement_family(A), t)[t]
    return lhs == len(layers_at_most(n, min(n, k + t - 2))) + len(_up(calB, t))


def random_parts(rng, n, k):
    """Random 𝒜_0 ⊆ [n-2]^(k-2) and 𝒜_1 ⊆ [n-2]^(k-1), the shape Lemma 4 forces."""
    keep = (1 << (n - 2)) - 1
    l0 = [v for v in layer(n, k - 2) if v & ~keep == 0]
    l1 = [v for v in layer(n, k - 1) if v & ~keep == 0]
    a0 = {v for v in l0 if rng.random() < 0.5}
    a1 = {v for v in l1 if rng.random() < 0.5}
    return a0, a1

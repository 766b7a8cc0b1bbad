"""Lower and upper shadows, uniform sections, and Local LYM."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .cube import mask_of
from .orders import kk_min_lower_shadow, kk_min_upper_shadow
from .uniform import UniformFamily, add_one, drop_one

__all__ = [
    "UniformFamily",
    "lower_shadow",
    "upper_shadow",
    "uniform_sections",
    "local_lym_margin",
    "is_shadow_minimal",
    "is_upper_shadow_minimal",
    "complement_members",
    "shift_members",
]


def lower_shadow(F: UniformFamily, t: int = 1) -> UniformFamily:
    """The iterated lower shadow ``∂^{-t} F``; ``t = 0`` returns F."""
    if not 0 <= t <= F.r:
        raise ValueError(f"cannot take a depth-{t} lower shadow of an {F.r}-uniform family")
    level = set(F.members)
    for _ in range(t):
        if not level:
            break
        level = drop_one(level)
    return F.with_members(level, F.r - t)


def upper_shadow(F: UniformFamily, t: int = 1) -> UniformFamily:
    """The iterated upper shadow ``∂^{+t} F`` inside F's own ground set."""
    if t < 0 or F.r + t > F.n:
        raise ValueError(f"cannot take a depth-{t} upper shadow of an {F.r}-uniform family over {F.n} points")
    gm = F.ground_mask
    level = set(F.members)
    for _ in range(t):
        if not level:
            break
        level = add_one(level, gm)
    return F.with_members(level, F.r + t)


def uniform_sections(F: UniformFamily, i: int) -> tuple[UniformFamily, UniformFamily]:
    """Split F by membership of ``i``.

    Returns ``(F_i0, F_i1)`` over the ground ``ground \\ {i}``: ``F_i0`` holds
    ``B`` with ``B ∪ {i} ∈ F`` and ``F_i1`` the members avoiding ``i``.
    """
    if i not in F.ground:
        raise ValueError(f"{i} is not in the ground set {F.ground}")
    bit = 1 << (i - 1)
    ground = tuple(g for g in F.ground if g != i)
    with_i = frozenset(m ^ bit for m in F.members if m & bit)
    without_i = frozenset(m for m in F.members if not m & bit)
    return (
        UniformFamily(ground, F.r - 1, with_i) if F.r >= 1 else UniformFamily(ground, 0, frozenset()),
        UniformFamily(ground, F.r, without_i) if F.r <= len(ground) else UniformFamily(ground, 0, frozenset()),
    )


def local_lym_margin(F: UniformFamily) -> Fraction:
    """``|∂^+F| / C(n, r+1) - |F| / C(n, r)`` as an exact rational."""
    n, r = F.n, F.r
    if r + 1 > n:
        raise ValueError("local LYM needs r + 1 <= |ground|")
    return Fraction(len(upper_shadow(F, 1)), comb(n, r + 1)) - Fraction(len(F), comb(n, r))


def is_shadow_minimal(F: UniformFamily, t: int = 1) -> bool:
    return len(lower_shadow(F, t)) == kk_min_lower_shadow(F.n, F.r, len(F), t)


def is_upper_shadow_minimal(F: UniformFamily, t: int = 1) -> bool:
    return len(upper_shadow(F, t)) == kk_min_upper_shadow(F.n, F.r, len(F), t)


def complement_members(F: UniformFamily) -> UniformFamily:
    """Replace every member by its complement inside the ground set."""
    gm = F.ground_mask
    return F.with_members((gm ^ m for m in F.members), F.n - F.r)


def shift_members(F: UniformFamily, label: int, ground=None) -> UniformFamily:
    """``F + {label}``: add ``label`` to every member."""
    bit = mask_of([label])
    ground = tuple(sorted(set(F.ground) | {label})) if ground is None else tuple(ground)
    members = []
    for m in F.members:
        if m & bit:
            raise ValueError(f"{label} already belongs to a member")
        members.append(m | bit)
    return UniformFamily(ground, F.r + 1, frozenset(members))

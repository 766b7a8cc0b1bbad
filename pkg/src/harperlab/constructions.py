"""Generators for the named families, each built from its defining recipe."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .cube import (
    Family,
    VertexLike,
    _as_mask,
    check_dimension,
    hamming_ball,
    layer,
    layers_at_least,
    layers_at_most,
    mask_of,
)
from .errors import InfeasibleError
from .orders import g_value, initial_segment_colex, initial_segment_simplicial
from .shadows import UniformFamily, uniform_sections


def build_G(n: int, r: int) -> Family:
    """``G_r = X^(<=r) ∪ {B ∈ X^(r+1) : 1 ∈ B}``."""
    check_dimension(n)
    if not 0 <= r <= n - 1:
        raise InfeasibleError(f"G_r needs 0 <= r <= n-1, got r={r}")
    top = [v for v in layer(n, r + 1) if v & 1]
    return layers_at_most(n, r) | Family.from_vertices(n, top)


def build_C(n: int, r: int) -> Family:
    """The simplicial initial segment of size g(n, r)."""
    if not 0 <= r <= n - 1:
        raise InfeasibleError(f"C_r needs 0 <= r <= n-1, got r={r}")
    return initial_segment_simplicial(n, g_value(n, r))


def build_B(n: int, r: int) -> Family:
    """``B_r = X^(<=r) ∪ {B in layers r+1, r+2 : {1,2} ⊆ B}``.

    This is the union of the exact balls of radius r around ∅ and {1,2}.
    For r > n-3 the family coincides with an initial segment or is not
    defined, so the range is restricted to ``1 <= r <= n-3``.
    """
    check_dimension(n)
    if not 1 <= r <= n - 3:
        raise InfeasibleError(f"B_r needs 1 <= r <= n-3, got n={n}, r={r}")
    pair = 0b11
    extra = [v for v in (layer(n, r + 1) | layer(n, r + 2)) if v & pair == pair]
    return layers_at_most(n, r) | Family.from_vertices(n, extra)


def build_A_i(n: int, r: int, k: int, i: int) -> Family:
    """``A_i = X^(>=r+1) ∪ 𝒜_{i,1} ∪ 𝒜_{i,0}`` for the colex segment 𝒜 of size k."""
    check_dimension(n)
    if not 0 <= r <= n - 1:
        raise InfeasibleError(f"A_i needs 0 <= r <= n-1, got r={r}")
    if not 1 <= k <= comb(n - 1, r):
        raise InfeasibleError(f"A_i needs 1 <= k <= C(n-1, r) = {comb(n - 1, r)}, got k={k}")
    if not 1 <= i <= n:
        raise InfeasibleError(f"A_i needs 1 <= i <= n, got i={i}")
    segment = initial_segment_colex(n, r, k)
    below, avoid = _split(segment, i)
    return layers_at_least(n, r + 1) | Family.from_vertices(n, list(below) + list(avoid))


def _split(F: UniformFamily, i: int):
    if F.r == 0:
        return frozenset(), frozenset(F.members)
    lower, upper = uniform_sections(F, i)
    return lower.members, upper.members


def colex_base(n: int, r: int, k: int) -> UniformFamily:
    """The colex segment that ``build_A_i(n, r, k, ·)`` is built from."""
    return initial_segment_colex(n, r, k)


@dataclass(frozen=True)
class Prop10Parameters:
    s: int
    n: int
    r: int
    k: int


def prop10_parameters(s: int) -> Prop10Parameters:
    return Prop10Parameters(s, 2 * s + 8, s + 4, s + 2)


def build_prop10(s: int) -> Family:
    """``X^(>=r)`` minus the chain ``{1..r}, {1..r+1}, ..., {1..r+k-1}``.

    Uses n = 2s+8, r = s+4, k = s+2.
    """
    if s < 1:
        raise InfeasibleError(f"s must be a positive integer, got {s}")
    p = prop10_parameters(s)
    try:
        check_dimension(p.n)
    except Exception as exc:
        raise InfeasibleError(f"s={s} needs n={p.n}, above the dimension cap") from exc
    chain = [(1 << (p.r + j)) - 1 for j in range(p.k)]
    return layers_at_least(p.n, p.r) - Family.from_vertices(p.n, chain)


def build_punctured_ball(n: int, x: VertexLike, r: int) -> Family:
    """``B(x, r) \\ {x}``."""
    if r < 1:
        raise InfeasibleError("punctured ball needs r >= 1")
    x = _as_mask(x, n)
    return hamming_ball(n, x, r) - Family.from_vertices(n, [x])


def build_two_ball_union(n: int, x: VertexLike, y: VertexLike, r: int) -> Family:
    """``B(x, r) ∪ B(y, r)`` for distinct centres."""
    if r < 1:
        raise InfeasibleError("two-ball union needs r >= 1")
    x, y = _as_mask(x, n), _as_mask(y, n)
    if x == y:
        raise InfeasibleError("centres must be distinct")
    return hamming_ball(n, x, r) | hamming_ball(n, y, r)


KINDS = ("initial_segment", "G", "C", "B", "A_i", "prop10", "punctured_ball", "two_ball_union")

_ALIASES = {
    "initial_segment": "initial_segment",
    "segment": "initial_segment",
    "g": "G",
    "c": "C",
    "b": "B",
    "br": "B",
    "a_i": "A_i",
    "ai": "A_i",
    "prop10": "prop10",
    "punctured_ball": "punctured_ball",
    "two_ball_union": "two_ball_union",
}


def normalize_kind(kind: str) -> str:
    key = kind.strip().replace("-", "_")
    if key in KINDS:
        return key
    try:
        return _ALIASES[key.lower()]
    except KeyError:
        raise InfeasibleError(f"unknown construction kind {kind!r}") from None


@dataclass(frozen=True)
class ConstructionSpec:
    """A named construction plus its parameters."""

    kind: str
    n: int | None = None
    r: int | None = None
    k: int | None = None
    i: int | None = None
    s: int | None = None
    x: int | None = None
    y: int | None = None
    size: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", normalize_kind(self.kind))

    def parameters(self) -> dict:
        return {
            name: getattr(self, name)
            for name in ("n", "r", "k", "i", "s", "x", "y", "size")
            if getattr(self, name) is not None
        }


def _need(spec: ConstructionSpec, *names: str):
    missing = [n for n in names if getattr(spec, n) is None]
    if missing:
        raise InfeasibleError(f"construction {spec.kind} needs parameters: {', '.join(missing)}")
    return [getattr(spec, n) for n in names]


def construct(spec: ConstructionSpec) -> Family:
    kind = spec.kind
    if kind == "initial_segment":
        n, size = _need(spec, "n", "size")
        try:
            return initial_segment_simplicial(n, size)
        except ValueError as exc:
            raise InfeasibleError(str(exc)) from exc
    if kind == "G":
        return build_G(*_need(spec, "n", "r"))
    if kind == "C":
        return build_C(*_need(spec, "n", "r"))
    if kind == "B":
        return build_B(*_need(spec, "n", "r"))
    if kind == "A_i":
        return build_A_i(*_need(spec, "n", "r", "k", "i"))
    if kind == "prop10":
        return build_prop10(*_need(spec, "s"))
    if kind == "punctured_ball":
        n, r = _need(spec, "n", "r")
        return build_punctured_ball(n, spec.x or 0, r)
    if kind == "two_ball_union":
        n, y, r = _need(spec, "n", "y", "r")
        return build_two_ball_union(n, spec.x or 0, y, r)
    raise InfeasibleError(f"unknown construction kind {kind!r}")


def coordinate_set(*coords: int) -> int:
    """Mask of a coordinate set, for readable call sites."""
    return mask_of(coords)


__all__ = [
    "ConstructionSpec",
    "KINDS",
    "build_A_i",
    "build_B",
    "build_C",
    "build_G",
    "build_prop10",
    "build_punctured_ball",
    "build_two_ball_union",
    "colex_base",
    "construct",
    "coordinate_set",
    "prop10_parameters",
]

"""One-shot verifiers for the classification results.

Each verifier runs an exhaustive check inside a documented envelope and
returns a Verdict.  A failing verdict always carries a witness family.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from math import comb

from .classifier import (
    EnumerationMode,
    classes_in,
    enumerate_extremal,
    full_space,
    segment_class,
    split_space,
)
from .constructions import build_A_i, build_B, build_prop10, colex_base, prop10_parameters
from .cube import Family, check_dimension, complement_family, distance, hamming_ball, layer
from .errors import InfeasibleError
from .extremality import balls_contained, extremality_report, is_hamming_ball, min_sandwich_gap
from .isomorphism import canonical_form, canonical_key, check_isomorphism, transposition_fixes, uniform_are_isomorphic
from .orders import f_value, g_value, initial_segment_colex, kk_min_lower_shadow, kk_min_upper_shadow, window_radius
from .shadows import lower_shadow, upper_shadow
from .uniform import UniformFamily


@dataclass
class Verdict:
    statement: str
    params: dict
    holds: bool
    stats: dict = field(default_factory=dict)
    witness: Family | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        from .serialization import emit_family

        return {
            "statement": self.statement,
            "params": self.params,
            "holds": self.holds,
            "detail": self.detail,
            "stats": self.stats,
            "witness": None if self.witness is None else emit_family(self.witness),
        }


def _uniform_as_family(F: UniformFamily, n: int) -> Family:
    return Family.from_vertices(n, sorted(F.members))


def _exhaustive_space(n: int, k: int):
    """Assumption-free candidate space: plain combinations up to n=4, section pairing at n=5."""
    if n <= 4:
        return full_space(n, k)
    if n == 5:
        return split_space(n, k)
    raise InfeasibleError(f"exhaustive enumeration is capped at n=5, got n={n}")


def _sizes(n: int, k: int | None, keep) -> list[int]:
    if k is not None:
        if not 0 <= k <= 1 << n:
            raise InfeasibleError(f"size {k} outside 0..{1 << n}")
        return [k]
    return [k for k in range(1, 1 << n) if keep(k)]


def _radii(r, lo: int, hi: int) -> list[int]:
    if r is None:
        return list(range(lo, hi + 1))
    if not lo <= r <= hi:
        raise InfeasibleError(f"r={r} outside {lo}..{hi}")
    return [r]


def _extremal_classes(n: int, k: int, threads: int = 1) -> list[Family]:
    reps, _ = classes_in(_exhaustive_space(n, k), k, threads=threads)
    return reps


# --- individual statements -------------------------------------------------


def verify_theorem2(n: int, k: int | None = None, mode: str = "full", threads: int = 1) -> Verdict:
    """Every extremal family is isomorphic to some A_i, and every A_i class occurs."""
    mode = EnumerationMode(mode)
    check_dimension(n)
    total = 1 << n
    ks = _sizes(n, k, lambda s: True)
    stats = {"sizes": 0, "classes": 0}
    for size in ks:
        target = size
        if mode is EnumerationMode.SANDWICH and window_radius(n, size) is None:
            target = total - size
            if window_radius(n, target) is None:
                continue  # exact balls: the ball-radius statement covers these
        res = enumerate_extremal(n, target, mode, threads=threads)
        stats["sizes"] += 1
        stats["classes"] += len(res.representatives)
        if not res.theorem2_verified:
            if res.unmatched:
                return Verdict("theorem2", {"n": n, "k": size, "mode": mode.value}, False, stats, res.unmatched[0],
                               f"size {target}: extremal class matches no A_i")
            return Verdict("theorem2", {"n": n, "k": size, "mode": mode.value}, False, stats, res.missing[0].family,
                           f"size {target}: predicted class {res.missing[0].label} not found")
    return Verdict("theorem2", {"n": n, "k": k, "mode": mode.value}, True, stats)


def verify_prop3(n: int, r: int | None = None) -> Verdict:
    """A family of size f(n,r) with minimal |N| is an exact ball."""
    check_dimension(n)
    stats = {"families": 0}
    for rad in _radii(r, 0, n - 1):
        size = f_value(n, rad)
        reps, st = classes_in(_exhaustive_space(n, size), size, weak=True, forward_only=True)
        stats["families"] += st["qualifying_families"]
        ball = canonical_form(hamming_ball(n, 0, rad))
        for rep in reps:
            if rep.bits != ball.bits:
                return Verdict("prop3", {"n": n, "r": rad}, False, stats, rep, "minimal family is not an exact ball")
    return Verdict("prop3", {"n": n, "r": r}, True, stats)


def _lemma4_failure(A: Family, r: int) -> str | None:
    n = A.n
    xs = balls_contained(A, r)
    ys = balls_contained(complement_family(A), n - r - 2)
    if not xs:
        return f"no exact ball of radius {r} inside A"
    if len(ys) < 2:
        return f"fewer than two exact balls of radius {n - r - 2} inside A^c"
    for x in xs:
        if not A <= hamming_ball(n, x, r + 2):
            return f"A not inside B({x}, {r + 2})"
    for y, z in itertools.combinations(ys, 2):
        if distance(y, z) > 2:
            return f"complement ball centres {y}, {z} at distance {distance(y, z)}"
    return None


def verify_lemma4(n: int, k: int | None = None) -> Verdict:
    """Ball sandwich of width 2 and close complement centres, for every extremal A in a window."""
    check_dimension(n)
    ks = _sizes(n, k, lambda s: window_radius(n, s) is not None and s < 1 << n)
    stats = {"sizes": 0, "classes": 0}
    for size in ks:
        r = window_radius(n, size)
        if r is None or size == 1 << n:
            raise InfeasibleError(f"size {size} is not in a window f(n,r) < k <= g(n,r) with r <= n-2")
        stats["sizes"] += 1
        for rep in _extremal_classes(n, size):
            stats["classes"] += 1
            why = _lemma4_failure(rep, r)
            if why:
                return Verdict("lemma4", {"n": n, "k": size}, False, stats, rep, why)
    return Verdict("lemma4", {"n": n, "k": k}, True, stats)


def verify_lemma5(n: int, r: int | None = None) -> Verdict:
    """``|B(x,r) ∪ B(y,r)| >= g(n,r)``, with equality iff ``d(x,y) <= 2``, over all pairs."""
    check_dimension(n)
    if n > 8:
        raise InfeasibleError("the pair sweep is capped at n=8")
    stats = {"pairs": 0}
    for rad in _radii(r, 1, n - 1):
        g = g_value(n, rad)
        union_by_diff: dict[int, int] = {}
        for x, y in itertools.combinations(range(1 << n), 2):
            stats["pairs"] += 1
            diff = x ^ y
            if diff not in union_by_diff:
                union_by_diff[diff] = len(hamming_ball(n, 0, rad) | hamming_ball(n, diff, rad))
            size = union_by_diff[diff]
            close = diff.bit_count() <= 2
            if size < g or (size == g) != close:
                witness = hamming_ball(n, x, rad) | hamming_ball(n, y, rad)
                return Verdict("lemma5", {"n": n, "r": rad}, False, stats, witness,
                               f"x={x}, y={y}, d={diff.bit_count()}: union {size}, g={g}")
    return Verdict("lemma5", {"n": n, "r": r}, True, stats)


def verify_prop6(n: int, k: int | None = None) -> Verdict:
    """An extremal family squeezed between B(x,r) and B(x,r+1) is a segment up to isomorphism."""
    check_dimension(n)
    stats = {"sizes": 0, "ball_classes": 0}
    for size in _sizes(n, k, lambda s: True):
        stats["sizes"] += 1
        seg = segment_class(n, size)
        for rep in _extremal_classes(n, size):
            if is_hamming_ball(rep):
                stats["ball_classes"] += 1
                if rep.bits != seg.bits:
                    return Verdict("prop6", {"n": n, "k": size}, False, stats, rep,
                                   "extremal Hamming ball not isomorphic to the segment")
    return Verdict("prop6", {"n": n, "k": k}, True, stats)


def verify_cor12(n: int, r: int | None = None) -> Verdict:
    """Weakly extremal ``X^(>=r) ⊆ A ⊆ X^(>=r-1)`` is a segment up to isomorphism."""
    from .extremality import is_extremal

    check_dimension(n)
    if n > 6:
        raise InfeasibleError("cor12 sweeps every subset of a layer and is capped at n=6")
    stats = {"families": 0, "weak_extremal": 0}
    for rad in _radii(r, 1, n):
        top = Family(n, 0)
        for j in range(rad, n + 1):
            top = top | layer(n, j)
        lower = layer(n, rad - 1).vertices()
        for m in range(len(lower) + 1):
            seg = segment_class(n, len(top) + m)
            for pick in itertools.combinations(lower, m):
                A = top | Family.from_vertices(n, pick)
                stats["families"] += 1
                if not is_extremal(A, weak=True):
                    continue
                stats["weak_extremal"] += 1
                if canonical_key(A) != canonical_key(seg):
                    return Verdict("cor12", {"n": n, "r": rad}, False, stats, A,
                                   "weakly extremal family not isomorphic to the segment")
    return Verdict("cor12", {"n": n, "r": r}, True, stats)


def _all_t_minimal(F: UniformFamily, upper: bool) -> bool:
    n, r, m = F.n, F.r, len(F)
    if upper:
        return all(len(upper_shadow(F, t)) == kk_min_upper_shadow(n, r, m, t) for t in range(1, n - r + 1))
    return all(len(lower_shadow(F, t)) == kk_min_lower_shadow(n, r, m, t) for t in range(1, r + 1))


def verify_cor7(n: int, r: int | None = None) -> Verdict:
    """If every lower shadow of 𝒜 and every upper shadow of its layer complement is minimal,
    𝒜 is a colex segment up to relabelling."""
    check_dimension(n)
    if n > 5:
        raise InfeasibleError("cor7 sweeps every subset of a layer and is capped at n=5")
    stats = {"families": 0, "qualifying": 0}
    for rad in _radii(r, 0, n):
        full = UniformFamily.full_layer(range(1, n + 1), rad)
        members = sorted(full.members)
        for m in range(len(members) + 1):
            seg = initial_segment_colex(n, rad, m)
            for pick in itertools.combinations(members, m):
                A = full.with_members(pick)
                B = full.with_members(set(members) - set(pick))
                stats["families"] += 1
                if not (_all_t_minimal(A, False) and _all_t_minimal(B, True)):
                    continue
                stats["qualifying"] += 1
                if not uniform_are_isomorphic(A, seg):
                    return Verdict("cor7", {"n": n, "r": rad}, False, stats, _uniform_as_family(A, n),
                                   "shadow-minimal layer family is not a colex segment")
    return Verdict("cor7", {"n": n, "r": r}, True, stats)


def verify_cor8(n: int, k: int | None = None, threads: int = 1) -> Verdict:
    """Every size other than a ball size admits an extremal class that is not a segment."""
    check_dimension(n)
    ball_sizes = {f_value(n, r) for r in range(n + 1)}
    ks = _sizes(n, k, lambda s: s not in ball_sizes)
    stats = {"sizes": 0, "classes": 0}
    for size in ks:
        if size in ball_sizes or size in (0, 1 << n):
            raise InfeasibleError(f"size {size} is a ball size; the statement excludes it")
        stats["sizes"] += 1
        if n <= 5:
            reps = _extremal_classes(n, size, threads)
        else:
            target = size if window_radius(n, size) is not None else (1 << n) - size
            reps = enumerate_extremal(n, target, EnumerationMode.SANDWICH, threads=threads).representatives
            if target != size:
                reps = [canonical_form(complement_family(rep)) for rep in reps]
        stats["classes"] += len(reps)
        seg = segment_class(n, size)
        if not any(rep.bits != seg.bits for rep in reps):
            return Verdict("cor8", {"n": n, "k": size}, False, stats, seg,
                           "every extremal class of this size is the segment")
    return Verdict("cor8", {"n": n, "k": k}, True, stats)


def verify_lemma9(n: int, r: int | None = None, k: int | None = None) -> Verdict:
    """``A_i ≅ A_j`` iff the transposition (i j) fixes the colex segment."""
    check_dimension(n)
    if n > 8:
        raise InfeasibleError("lemma9 compares canonical forms and is capped at n=8")
    stats = {"pairs": 0}
    for rad in _radii(r, 0, n - 1):
        top = comb(n - 1, rad)
        if k is not None and not 1 <= k <= top:
            raise InfeasibleError(f"k={k} outside 1..C(n-1,r)={top}")
        for size in ([k] if k is not None else range(1, top + 1)):
            base = colex_base(n, rad, size)
            keys = [canonical_key(build_A_i(n, rad, size, i)) for i in range(1, n + 1)]
            for i, j in itertools.combinations(range(1, n + 1), 2):
                stats["pairs"] += 1
                if (keys[i - 1] == keys[j - 1]) != transposition_fixes(base, i, j):
                    return Verdict("lemma9", {"n": n, "r": rad, "k": size, "i": i, "j": j}, False, stats,
                                   build_A_i(n, rad, size, i), "isomorphism and transposition symmetry disagree")
    return Verdict("lemma9", {"n": n, "r": r, "k": k}, True, stats)


def verify_prop10(s: int) -> Verdict:
    """The family without a thin ball sandwich: forward all-t, backward t=1, every gap > s."""
    p = prop10_parameters(s)
    if s > 6:
        raise InfeasibleError("prop10 is capped at s=6 (n=20)")
    A = build_prop10(s)
    rep = extremality_report(A)
    expected = f_value(p.n, p.r) + sum(p.n - p.r - i for i in range(p.k))
    back = rep.records[0]
    gap = min_sandwich_gap(A)
    stats = {"n": p.n, "size": len(A), "complement_boundary": back.backward_size,
             "expected_complement_boundary": expected, "min_gap": gap}
    problems = []
    if not all(rec.forward_ok for rec in rep.records):
        problems.append(f"forward growth not minimal at t={next(rec.t for rec in rep.records if not rec.forward_ok)}")
    if not back.backward_ok:
        problems.append("N(A^c) not minimal")
    if back.backward_size != expected:
        problems.append(f"|N(A^c)|={back.backward_size}, expected {expected}")
    if gap is None or gap <= s:
        problems.append(f"sandwich of gap {gap} <= s")
    if problems:
        return Verdict("prop10", {"s": s}, False, stats, A, "; ".join(problems))
    return Verdict("prop10", {"s": s}, True, stats)


def verify_theorem11(n: int, r: int | None = None) -> Verdict:
    """Minimal first shadow forces minimal iterated shadows."""
    check_dimension(n)
    if n > 5:
        raise InfeasibleError("theorem11 sweeps every subset of a layer and is capped at n=5")
    stats = {"families": 0, "shadow_minimal": 0}
    for rad in _radii(r, 0, n):
        full = UniformFamily.full_layer(range(1, n + 1), rad)
        members = sorted(full.members)
        for m in range(len(members) + 1):
            for pick in itertools.combinations(members, m):
                A = full.with_members(pick)
                stats["families"] += 1
                if rad == 0 or len(lower_shadow(A, 1)) != kk_min_lower_shadow(n, rad, m, 1):
                    continue
                stats["shadow_minimal"] += 1
                if not _all_t_minimal(A, False):
                    return Verdict("theorem11", {"n": n, "r": rad}, False, stats, _uniform_as_family(A, n),
                                   "first shadow minimal but a deeper shadow is not")
    return Verdict("theorem11", {"n": n, "r": r}, True, stats)


def verify_theorem13(n: int, r: int | None = None, threads: int = 1) -> Verdict:
    """Size g(n,r) with minimal |N|: exactly the segment and B_r, up to isomorphism."""
    check_dimension(n)
    stats = {"sizes": 0, "families": 0, "classes": 0}
    for rad in _radii(r, 1, n - 3):
        size = g_value(n, rad)
        reps, st = classes_in(_exhaustive_space(n, size), size, weak=True, forward_only=True, threads=threads)
        stats["sizes"] += 1
        stats["families"] += st["qualifying_families"]
        stats["classes"] += len(reps)
        expected = {segment_class(n, size).bits, canonical_form(build_B(n, rad)).bits}
        found = {rep.bits for rep in reps}
        extra = [rep for rep in reps if rep.bits not in expected]
        if extra:
            return Verdict("theorem13", {"n": n, "r": rad}, False, stats, extra[0],
                           "minimal family is neither the segment nor B_r")
        if found != expected:
            missing = Family(n, min(expected - found))
            return Verdict("theorem13", {"n": n, "r": rad}, False, stats, missing, "expected class not found")
    return Verdict("theorem13", {"n": n, "r": r}, True, stats)


def multiplicity_parameters(s: int) -> tuple[int, int, int]:
    """``(n, r, k)`` for the family of s pairwise non-isomorphic A_i."""
    return 2 * s + 3, s + 1, sum(comb(2 * (i - 1), i) for i in range(2, s + 2))


def verify_multiplicity(s: int, enumerate_classes: bool = True) -> Verdict:
    """The A_i with even i <= 2s are extremal and pairwise non-isomorphic."""
    if s < 1:
        raise InfeasibleError("s must be positive")
    n, r, k = multiplicity_parameters(s)
    check_dimension(n)
    fams = {i: build_A_i(n, r, k, i) for i in range(2, 2 * s + 1, 2)}
    stats = {"n": n, "r": r, "k": k, "size": len(next(iter(fams.values())))}
    for i, A in fams.items():
        if not extremality_report(A).strong_extremal:
            return Verdict("multiplicity", {"s": s}, False, stats, A, f"A_{i} is not extremal")
    for i, j in itertools.combinations(fams, 2):
        verdict = check_isomorphism(fams[i], fams[j])
        if verdict.isomorphic or not verdict.exact:
            return Verdict("multiplicity", {"s": s}, False, stats, fams[i],
                           f"A_{i} and A_{j} not certified non-isomorphic")
    if enumerate_classes and n <= 7:
        res = enumerate_extremal(n, stats["size"], EnumerationMode.SANDWICH)
        stats["classes"] = len(res.representatives)
        if len(res.representatives) < s:
            return Verdict("multiplicity", {"s": s}, False, stats, fams[2], "fewer than s extremal classes")
    return Verdict("multiplicity", {"s": s}, True, stats)


STATEMENTS = {
    "theorem2": verify_theorem2,
    "prop3": verify_prop3,
    "lemma4": verify_lemma4,
    "lemma5": verify_lemma5,
    "prop6": verify_prop6,
    "cor7": verify_cor7,
    "cor8": verify_cor8,
    "lemma9": verify_lemma9,
    "prop10": verify_prop10,
    "theorem11": verify_theorem11,
    "cor12": verify_cor12,
    "theorem13": verify_theorem13,
    "multiplicity": verify_multiplicity,
}


def verify_statement(name: str, **params) -> Verdict:
    """Run the named verifier; unknown names and bad parameters raise InfeasibleError."""
    try:
        fn = STATEMENTS[name.lower()]
    except KeyError:
        raise InfeasibleError(f"unknown statement {name!r}; choose from {', '.join(STATEMENTS)}") from None
    params = {key: val for key, val in params.items() if val is not None}
    start = time.perf_counter()
    try:
        verdict = fn(**params)
    except TypeError as exc:
        raise InfeasibleError(f"{name}: {exc}") from exc
    verdict.stats["seconds"] = round(time.perf_counter() - start, 3)
    return verdict


__all__ = ["STATEMENTS", "Verdict", "multiplicity_parameters", "verify_statement"] + [f.__name__ for f in STATEMENTS.values()]

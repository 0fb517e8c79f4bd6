"""Closed-form invariants from epsilon-sequences.

A *free linear segment of level n* of a cyclic epsilon-sequence starts at
a -1, ends at a +1, keeps every intermediate partial sum strictly
negative, and dips to exactly -n.  a_n counts segments of level n.  An
orbit with total epsilon 0 is *circular of level n* where n is the spread
(max - min) of its prefix-sum walk.

From those two counts:

    gamma(m)   = number of segments of level <= m          (automorphism
                 scheme dimension of the level-m truncation)
    c_m        = sum over circular orbits of level n <= m-1
                 of (m - n) * |orbit|                      (log_p of the
                 component count of the endomorphism scheme)

gamma stabilizes at the largest segment level; that level is the
isomorphism number, and gamma there is the specializing height.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .permutations import (
    EpsilonSeq,
    Permutation,
    ProductOrbit,
    Signature,
    epsilon_sequence,
    pair_orbits,
)


class Segment(NamedTuple):
    start: int  # 1-based position of the leading -1
    length: int
    level: int


def segment_scan(e: EpsilonSeq) -> tuple[Segment, ...]:
    """All free linear segments of ``e``, sorted by start index.

    Each -1 position starts at most one segment: walk the cyclic partial
    sums until they first return to 0 (that step must read +1), recording
    the depth.  A walk of |e| steps suffices: once a full loop completes
    the sum can only repeat offsets of the (nonzero) total, never 0,
    without first violating strict negativity.
    """
    l = len(e)
    segments = []
    for s0 in range(l):
        if e[s0] != -1:
            continue
        total = 0
        deepest = 0
        for k in range(l):
            total += e[(s0 + k) % l]
            if total < deepest:
                deepest = total
            if total == 0:
                segments.append(Segment(s0 + 1, k + 1, -deepest))
                break
    return tuple(segments)


def a_n(e: EpsilonSeq, n: int) -> int:
    """Number of free linear segments of level exactly ``n``."""
    if n < 1:
        raise ValueError("segment levels start at 1")
    return sum(1 for seg in segment_scan(e) if seg.level == n)


def circular_level(e: EpsilonSeq) -> int | None:
    """Spread of the prefix-sum walk, or None when the total is nonzero.

    For total 0 every cyclic interval sum is a difference of two prefix
    sums (wrapping intervals included), so the maximal interval-sum
    magnitude equals max(prefix) - min(prefix).
    """
    if sum(e) != 0:
        return None
    hi = lo = cum = 0
    for v in e:
        cum += v
        if cum > hi:
            hi = cum
        elif cum < lo:
            lo = cum
    return hi - lo


@dataclass(frozen=True)
class OrbitProfile:
    orbit: ProductOrbit
    eps: EpsilonSeq
    segments: tuple[Segment, ...]
    circular_level: int | None


def orbit_profile(orbit: ProductOrbit, sig: Signature) -> OrbitProfile:
    eps = epsilon_sequence(orbit, sig)
    return OrbitProfile(orbit, eps, segment_scan(eps), circular_level(eps))


def orbit_profiles(p: Permutation, sig: Signature) -> list[OrbitProfile]:
    return [orbit_profile(o, sig) for o in pair_orbits(p)]


def gamma(profiles: Sequence[OrbitProfile], m: int) -> int:
    if m < 1:
        raise ValueError("gamma is defined for levels m >= 1")
    return sum(1 for prof in profiles for seg in prof.segments if seg.level <= m)


def component_exponent(profiles: Sequence[OrbitProfile], m: int) -> int:
    if m < 1:
        raise ValueError("component exponent is defined for levels m >= 1")
    total = 0
    for prof in profiles:
        n = prof.circular_level
        if n is not None and n <= m - 1:
            total += (m - n) * len(prof.orbit)
    return total


def isomorphism_number(profiles: Sequence[OrbitProfile]) -> int:
    """Level at which gamma stabilizes.

    All-zero epsilon data happens exactly when c*d = 0; that group is the
    unique one of its signature, so level 0 already determines it.  With
    c*d > 0 the number is the largest segment level, and at least 1 even
    when no segments exist (gamma is constant from m = 1 on).
    """
    if all(v == 0 for prof in profiles for v in prof.eps):
        return 0
    levels = [seg.level for prof in profiles for seg in prof.segments]
    return max(levels, default=1)


@dataclass(frozen=True)
class InvariantReport:
    h: int
    c: int
    d: int
    perm: Permutation
    profiles: tuple[OrbitProfile, ...]
    gamma: tuple[int, ...]  # gamma[m-1] for m = 1..max_level
    c_exponent: tuple[int, ...]
    isomorphism_number: int
    specializing_height: int


def invariant_report(p: Permutation, sig: Signature, max_level: int) -> InvariantReport:
    if p.h != sig.h:
        raise ValueError(f"permutation degree {p.h} != c+d = {sig.h}")
    if max_level < 1:
        raise ValueError("max_level must be >= 1")
    profiles = tuple(orbit_profiles(p, sig))
    n_iso = isomorphism_number(profiles)
    # gamma(n_iso) without tabulating that far: every segment has level <= n_iso
    height = sum(len(prof.segments) for prof in profiles) if n_iso > 0 else 0
    return InvariantReport(
        h=sig.h,
        c=sig.c,
        d=sig.d,
        perm=p,
        profiles=profiles,
        gamma=tuple(gamma(profiles, m) for m in range(1, max_level + 1)),
        c_exponent=tuple(component_exponent(profiles, m) for m in range(1, max_level + 1)),
        isomorphism_number=n_iso,
        specializing_height=height,
    )

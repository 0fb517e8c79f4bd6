"""Permutations of {1,...,h} and the orbits of the diagonal action on pairs.

A permutation pi together with a signature (c, d), c + d = h, splits the
square J^2 = {1..h}^2 into three regions:

    J_+ = {(i, j) : i <= d < j},   J_0 = {both <= d or both > d},
    J_- = {(i, j) : j <= d < i}.

Every orbit of (pi, pi) acting on J^2 gets an epsilon-sequence over
{-1, 0, +1} (the region of each point) and a mu-sequence over {0, 1}
(mu = 1 exactly at epsilon = -1 positions).  These sequences drive all
invariant computations downstream.

Indices are 1-based throughout, matching J = {1, ..., h}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import InputError

EpsilonSeq = tuple[int, ...]
MuSeq = tuple[int, ...]


class EmptyInput(InputError):
    pass


class DuplicateImage(InputError):
    pass


class OutOfRange(InputError):
    pass


@dataclass(frozen=True)
class Permutation:
    """Bijection of {1,...,h}; images[i-1] = pi(i)."""

    images: tuple[int, ...]

    def __post_init__(self):
        h = len(self.images)
        if h == 0:
            raise EmptyInput("permutation has no points")
        seen = set()
        for v in self.images:
            if not isinstance(v, int) or not 1 <= v <= h:
                raise OutOfRange(f"image {v!r} outside 1..{h}")
            if v in seen:
                raise DuplicateImage(f"image {v} appears twice")
            seen.add(v)

    @property
    def h(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def one_line(self) -> str:
        return ",".join(str(v) for v in self.images)

    def __str__(self) -> str:
        return self.one_line()


@dataclass(frozen=True)
class Signature:
    """Codimension c and dimension d; h = c + d."""

    c: int
    d: int

    def __post_init__(self):
        if self.c < 0 or self.d < 0 or self.c + self.d == 0:
            raise OutOfRange(f"signature ({self.c},{self.d}) needs c,d >= 0 and c+d > 0")

    @property
    def h(self) -> int:
        return self.c + self.d


@dataclass(frozen=True)
class ProductOrbit:
    """One orbit of (pi,pi) on J^2, rotated so points[0] is the least pair."""

    points: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @property
    def rep(self) -> tuple[int, int]:
        return self.points[0]


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _parse_point(token: str) -> int:
    token = token.strip()
    if not token:
        raise EmptyInput("empty entry in permutation text")
    if not token.isdigit():
        raise OutOfRange(f"token {token!r} is not a positive integer")
    return int(token)


def parse_permutation(text: str, degree: int | None = None) -> Permutation:
    """Parse one-line ("4,5,1,2,3") or cycle ("(1 2 3 4)") notation.

    Cycle notation: points not mentioned are fixed; the degree defaults
    to the largest point mentioned and can be raised with ``degree``.
    For one-line notation the degree is the number of entries.
    """
    text = text.strip()
    if not text:
        raise EmptyInput("empty permutation text")
    if text.startswith("("):
        return _parse_cycles(text, degree)
    entries = [_parse_point(tok) for tok in text.split(",")]
    h = len(entries)
    if degree is not None and degree != h:
        raise OutOfRange(f"one-line form has {h} entries but degree {degree} was given")
    return Permutation(tuple(entries))


def _parse_cycles(text: str, degree: int | None) -> Permutation:
    cycles = []
    consumed = _CYCLE_RE.sub("", text)
    if consumed.strip():
        raise OutOfRange(f"unexpected text {consumed.strip()!r} outside cycle parentheses")
    for body in _CYCLE_RE.findall(text):
        tokens = [t for t in re.split(r"[,\s]+", body.strip()) if t]
        if not tokens:
            raise EmptyInput("empty cycle '()'")
        cycles.append([_parse_point(t) for t in tokens])
    if not cycles:
        raise EmptyInput("no cycles found")
    mentioned = [pt for cyc in cycles for pt in cyc]
    h = max(mentioned) if degree is None else degree
    seen = set()
    for pt in mentioned:
        if pt < 1 or pt > h:
            raise OutOfRange(f"point {pt} outside 1..{h}")
        if pt in seen:
            raise DuplicateImage(f"point {pt} appears in two cycle positions")
        seen.add(pt)
    images = list(range(1, h + 1))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a - 1] = b
    return Permutation(tuple(images))


def cycle_decomposition(p: Permutation) -> list[tuple[int, ...]]:
    """Disjoint cycles covering {1..h}, each starting at its least element,
    sorted by that element.  Fixed points appear as length-1 cycles."""
    seen = set()
    cycles = []
    for start in range(1, p.h + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        nxt = p(start)
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = p(nxt)
        cycles.append(tuple(cyc))
    return cycles


def pair_orbits(p: Permutation) -> list[ProductOrbit]:
    """Orbits of (pi,pi) on J^2, canonically rotated and sorted.

    Scanning J^2 in lexicographic order guarantees that each walk starts
    at the orbit's least pair, so discovery order is already canonical.
    """
    h = p.h
    seen = set()
    orbits = []
    for i in range(1, h + 1):
        for j in range(1, h + 1):
            if (i, j) in seen:
                continue
            pts = []
            a, b = i, j
            while (a, b) not in seen:
                seen.add((a, b))
                pts.append((a, b))
                a, b = p(a), p(b)
            orbits.append(ProductOrbit(tuple(pts)))
    return orbits


def epsilon_value(i: int, j: int, d: int) -> int:
    if i <= d < j:
        return 1
    if j <= d < i:
        return -1
    return 0


def epsilon_sequence(o: ProductOrbit, sig: Signature) -> EpsilonSeq:
    h = sig.h
    for i, j in o.points:
        if not (1 <= i <= h and 1 <= j <= h):
            raise OutOfRange(f"orbit point ({i},{j}) outside 1..{h} square")
    return tuple(epsilon_value(i, j, sig.d) for i, j in o.points)


def mu_sequence(e: EpsilonSeq) -> MuSeq:
    return tuple(1 if v == -1 else 0 for v in e)

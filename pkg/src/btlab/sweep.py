"""Randomized verification sweep: formulas versus the graph oracle."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph_oracle import CrossCheck, cross_check
from .permutations import Permutation, Signature
from .rng import SplitMix64


def random_cases(samples: int, max_h: int, seed: int) -> Iterator[tuple[Permutation, Signature]]:
    """Seeded stream of (permutation, signature) cases.

    Per case: h uniform in 2..max_h, d uniform in 0..h, pi by
    Fisher-Yates shuffle of the identity.  All draws come from one
    SplitMix64 stream, so the case list is a pure function of the seed.
    """
    if max_h < 2:
        raise ValueError("max_h must be at least 2")
    rng = SplitMix64(seed)
    for _ in range(samples):
        h = 2 + rng.below(max_h - 1)
        d = rng.below(h + 1)
        images = list(range(1, h + 1))
        rng.shuffle(images)
        yield Permutation(tuple(images)), Signature(c=h - d, d=d)


def random_epsilon_sequences(samples: int, max_len: int, seed: int) -> Iterator[tuple[int, ...]]:
    """Seeded stream of cyclic epsilon-sequences over {-1, 0, +1}."""
    rng = SplitMix64(seed)
    for _ in range(samples):
        l = 1 + rng.below(max_len)
        yield tuple(rng.below(3) - 1 for _ in range(l))


@dataclass(frozen=True)
class SweepResult:
    samples: int
    max_h: int
    max_level: int
    seed: int
    checks: tuple[CrossCheck, ...]

    @property
    def failures(self) -> tuple[CrossCheck, ...]:
        return tuple(c for c in self.checks if not c.ok)

    @property
    def ok(self) -> bool:
        return not self.failures


def verification_sweep(samples: int, max_h: int, max_level: int, seed: int) -> SweepResult:
    checks = tuple(
        cross_check(p, sig, max_level) for p, sig in random_cases(samples, max_h, seed)
    )
    return SweepResult(samples, max_h, max_level, seed, checks)

"""Flocks (conjugacy classes of S_n) and their stem permutations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Iterator

from .conjugacy import count_conjugators
from .perm import (
    Partition,
    Permutation,
    cycle_lengths,
    from_cycles,
    partitions_of,
)

ENUMERATION_MAX_DEGREE = 12


def stem_permutation(p: Partition) -> Permutation:
    """Consecutive integers cut into cycles of lengths k_1 <= ... <= k_r."""
    cycles = []
    start = 1
    for k in p.parts:
        cycles.append(range(start, start + k))
        start += k
    return from_cycles(cycles, p.n)


@dataclass(frozen=True)
class Flock:
    n: int
    partition: Partition
    stem: Permutation
    size: int

    def __contains__(self, phi: Permutation) -> bool:
        return membership(self, phi)

    def __len__(self) -> int:
        return self.size


def flock_of(p: Partition, n: int | None = None) -> Flock:
    if n is not None and n != p.n:
        raise ValueError(f"{p} is not a partition of {n}")
    size = factorial(p.n) // count_conjugators(p.to_cycle_type())
    return Flock(n=p.n, partition=p, stem=stem_permutation(p), size=size)


def all_flocks(n: int) -> list[Flock]:
    return [flock_of(p) for p in partitions_of(n)]


def membership(f: Flock, phi: Permutation) -> bool:
    if phi.n != f.n:
        raise ValueError(f"degree mismatch: flock has n={f.n}, permutation n={phi.n}")
    return cycle_lengths(phi.image) == f.partition.parts


def ranked_members(f: Flock, start: int = 0, stop: int | None = None) -> Iterator[tuple[int, Permutation]]:
    """``(rank, member)`` pairs with rank in ``[start, stop)``, ascending.

    Lexicographic order of images is rank order, so ``itertools.permutations``
    walks S_n in rank order.
    """
    if f.n > ENUMERATION_MAX_DEGREE:
        raise ValueError(
            f"full flock enumeration is limited to n <= {ENUMERATION_MAX_DEGREE}, got {f.n}"
        )
    total = factorial(f.n)
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return
    target = f.partition.parts
    it = itertools.permutations(range(1, f.n + 1))
    it = itertools.islice(it, start, stop) if start or stop != total else it
    for r, image in enumerate(it, start=start):
        if cycle_lengths(image) == target:
            yield r, Permutation._trusted(image)


def enumerate_flock(f: Flock) -> Iterator[Permutation]:
    for _, phi in ranked_members(f):
        yield phi

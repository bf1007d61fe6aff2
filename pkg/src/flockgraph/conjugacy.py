"""Solutions of the conjugation equation ``rho phi rho^-1 = psi``."""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from math import factorial
from typing import Iterator

from .perm import (
    CycleType,
    Permutation,
    conjugate,
    decompose,
    identity,
    type_of,
)

UINT64_MAX = 2**64 - 1
BRUTE_FORCE_MAX_DEGREE = 7


class NotConjugateError(ValueError):
    """The two permutations have different cycle types."""

    def __init__(self, phi: Permutation, psi: Permutation):
        super().__init__(
            f"{phi} and {psi} are not conjugate: "
            f"types {type_of(phi)} and {type_of(psi)} differ "
            "(permutations are conjugate iff they have the same type)"
        )


def are_conjugate(phi: Permutation, psi: Permutation) -> bool:
    if phi.n != psi.n:
        raise ValueError(f"degree mismatch: {phi.n} vs {psi.n}")
    return type_of(phi) == type_of(psi)


def _cycles_by_length(phi: Permutation) -> dict[int, list[tuple[int, ...]]]:
    # within a length, cycles stay in ascending order of their minimum
    by_length: dict[int, list[tuple[int, ...]]] = defaultdict(list)
    for cycle in decompose(phi):
        by_length[len(cycle)].append(cycle)
    return dict(sorted(by_length.items()))


def _require_conjugate(phi: Permutation, psi: Permutation) -> None:
    if not are_conjugate(phi, psi):
        raise NotConjugateError(phi, psi)


def canonical_conjugator(phi: Permutation, psi: Permutation) -> Permutation:
    """The two-row solution: write both cycle lists in (length, minimum) order and
    map phi's entries onto psi's position by position."""
    _require_conjugate(phi, psi)
    image = [0] * phi.n
    src, dst = _cycles_by_length(phi), _cycles_by_length(psi)
    for length, cycles in src.items():
        for a, b in zip(cycles, dst[length]):
            for x, y in zip(a, b):
                image[x - 1] = y
    return Permutation(tuple(image))


def count_conjugators(t: CycleType) -> int:
    """Exact number of solutions for a pair of type ``t``: prod l_i! * i**l_i."""
    total = 1
    for length, count in enumerate(t.counts, start=1):
        total *= factorial(count) * length**count
        if total > UINT64_MAX:
            raise OverflowError(f"conjugator count for {t} exceeds 64 bits")
    return total


@dataclass(frozen=True)
class ConjugatorFamily:
    """Every ``rho`` with ``rho phi rho^-1 == psi``, enumerated lazily.

    Order: length classes ascending, the last class varying fastest. Inside a
    class of ``m`` cycles of length ``k``, assignments of phi-cycles to
    psi-cycles run in lexicographic order, and for each assignment the ``m``
    rotation offsets count as a little-endian base-``k`` number. The first
    member is always ``base``.
    """

    phi: Permutation
    psi: Permutation
    base: Permutation
    length_classes: tuple[tuple[int, int], ...]  # (multiplicity, length)
    total: int

    def __len__(self) -> int:
        return self.total

    def __iter__(self) -> Iterator[Permutation]:
        src = _cycles_by_length(self.phi)
        dst = _cycles_by_length(self.psi)
        lengths = [length for _, length in self.length_classes]
        image = [0] * self.phi.n

        # nested generators instead of itertools.product, which would
        # materialise every class up front
        def fill(depth: int) -> Iterator[Permutation]:
            if depth == len(lengths):
                yield Permutation._trusted(tuple(image))
                return
            length = lengths[depth]
            for pairs in _class_maps(src[length], dst[length]):
                for x, y in pairs:
                    image[x - 1] = y
                yield from fill(depth + 1)

        yield from fill(0)


def _class_maps(
    src: list[tuple[int, ...]], dst: list[tuple[int, ...]]
) -> Iterator[tuple[tuple[int, int], ...]]:
    m, k = len(src), len(src[0])
    for assignment in itertools.permutations(range(m)):
        offsets = [0] * m
        for _ in range(k**m):
            pairs = []
            for i, a in enumerate(src):
                b = dst[assignment[i]]
                r = offsets[i]
                pairs.extend((a[j], b[(j + r) % k]) for j in range(k))
            yield tuple(pairs)
            # little-endian increment
            for i in range(m):
                offsets[i] += 1
                if offsets[i] < k:
                    break
                offsets[i] = 0


def all_conjugators(phi: Permutation, psi: Permutation) -> ConjugatorFamily:
    _require_conjugate(phi, psi)
    t = type_of(phi)
    classes = tuple(
        (count, length) for length, count in enumerate(t.counts, start=1) if count
    )
    return ConjugatorFamily(
        phi=phi,
        psi=psi,
        base=canonical_conjugator(phi, psi),
        length_classes=classes,
        total=count_conjugators(t),
    )


def brute_force_conjugators(phi: Permutation, psi: Permutation) -> set[Permutation]:
    """Filter all of S_n by the equation; an oracle for small n only."""
    if phi.n != psi.n:
        raise ValueError(f"degree mismatch: {phi.n} vs {psi.n}")
    if phi.n > BRUTE_FORCE_MAX_DEGREE:
        raise ValueError(
            f"brute force is limited to n <= {BRUTE_FORCE_MAX_DEGREE}, got {phi.n}"
        )
    found = set()
    for image in itertools.permutations(identity(phi.n).image):
        rho = Permutation._trusted(image)
        if conjugate(rho, phi) == psi:
            found.add(rho)
    return found

"""Permutations of {1..n}: composition, cycle structure, ranking and cycle notation.

Cycle text is read left to right, so ``(123456.)`` sends 1->2->...->6->1, and
products act right to left: ``compose(phi, psi)(x) == phi(psi(x))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

MAX_DEGREE = 20


class ParseError(ValueError):
    """Cycle text could not be turned into a permutation."""


def check_degree(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"degree must be an int, got {type(n).__name__}")
    if not 1 <= n <= MAX_DEGREE:
        raise ValueError(f"degree must satisfy 1 <= n <= {MAX_DEGREE}, got {n}")
    return n


@dataclass(frozen=True, slots=True)
class Permutation:
    """A bijection of {1..n}; ``image[i - 1]`` is the image of ``i``."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        image = tuple(self.image)
        object.__setattr__(self, "image", image)
        check_degree(len(image))
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"not a permutation of 1..{len(image)}: {list(image)}")

    @classmethod
    def _trusted(cls, image: tuple[int, ...]) -> Permutation:
        # skips validation; callers guarantee a bijection
        p = object.__new__(cls)
        object.__setattr__(p, "image", image)
        return p

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        return self.image[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return inverse(self) ** (-k)
        result = identity(self.n)
        for _ in range(k):
            result = compose(self, result)
        return result

    def __lt__(self, other: Permutation) -> bool:
        # lexicographic on images == rank order
        return (self.n, self.image) < (other.n, other.image)

    def __str__(self) -> str:
        return format_perm(self)

    def __repr__(self) -> str:
        return f"Permutation({format_perm(self)!r})"


@dataclass(frozen=True, slots=True)
class CycleType:
    """Counts ``l_1..l_n``: ``counts[i - 1]`` cycles of length ``i``."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        counts = tuple(self.counts)
        object.__setattr__(self, "counts", counts)
        check_degree(len(counts))
        if any(c < 0 for c in counts):
            raise ValueError(f"negative cycle count in {counts}")
        total = sum(i * c for i, c in enumerate(counts, start=1))
        if total != len(counts):
            raise ValueError(f"sum of i*l_i is {total}, expected {len(counts)}")

    @property
    def n(self) -> int:
        return len(self.counts)

    def to_partition(self) -> Partition:
        parts: list[int] = []
        for length, count in enumerate(self.counts, start=1):
            parts.extend([length] * count)
        return Partition(tuple(parts))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.counts)) + "}"


@dataclass(frozen=True, slots=True)
class Partition:
    """Non-decreasing positive parts summing to ``n``; the cyclic type of a permutation."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        if any(not isinstance(k, int) or k < 1 for k in parts):
            raise ValueError(f"parts must be positive integers: {parts}")
        if list(parts) != sorted(parts):
            raise ValueError(f"parts must be non-decreasing: {parts}")
        check_degree(sum(parts))

    @classmethod
    def of(cls, parts: Sequence[int]) -> Partition:
        """Build from parts in any order."""
        return cls(tuple(sorted(parts)))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def to_cycle_type(self) -> CycleType:
        counts = [0] * self.n
        for k in self.parts:
            counts[k - 1] += 1
        return CycleType(tuple(counts))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.parts)) + "]"


def identity(n: int) -> Permutation:
    check_degree(n)
    return Permutation._trusted(tuple(range(1, n + 1)))


def _same_degree(*perms: Permutation) -> None:
    degrees = {p.n for p in perms}
    if len(degrees) != 1:
        raise ValueError(f"degree mismatch: {sorted(degrees)}")


def compose(phi: Permutation, psi: Permutation) -> Permutation:
    """Return ``phi psi``, i.e. ``x -> phi(psi(x))``."""
    _same_degree(phi, psi)
    a = phi.image
    return Permutation._trusted(tuple(a[y - 1] for y in psi.image))


def inverse(phi: Permutation) -> Permutation:
    out = [0] * phi.n
    for x, y in enumerate(phi.image, start=1):
        out[y - 1] = x
    return Permutation._trusted(tuple(out))


def conjugate_images(rho: tuple[int, ...], phi: tuple[int, ...]) -> tuple[int, ...]:
    # rho phi rho^-1 sends rho(x) to rho(phi(x))
    out = [0] * len(rho)
    for x, fx in enumerate(phi):
        out[rho[x] - 1] = rho[fx - 1]
    return tuple(out)


def conjugate(rho: Permutation, phi: Permutation) -> Permutation:
    """Return ``rho phi rho^-1``."""
    _same_degree(rho, phi)
    return Permutation._trusted(conjugate_images(rho.image, phi.image))


def cycles_of(image: Sequence[int]) -> list[tuple[int, ...]]:
    """Cycles of a one-line image, each starting at its minimum, ordered by minimum."""
    n = len(image)
    seen = [False] * (n + 1)
    cycles = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = image[x - 1]
        cycles.append(tuple(cycle))
    return cycles


def decompose(phi: Permutation) -> list[tuple[int, ...]]:
    """Canonical cycle decomposition, singletons included."""
    return cycles_of(phi.image)


def from_cycles(cycles: Sequence[Sequence[int]], n: int) -> Permutation:
    """Build a permutation from disjoint cycles; unmentioned points are fixed."""
    check_degree(n)
    image = list(range(1, n + 1))
    seen: set[int] = set()
    for cycle in cycles:
        for i, x in enumerate(cycle):
            if not 1 <= x <= n:
                raise ValueError(f"element {x} out of range 1..{n}")
            if x in seen:
                raise ValueError(f"element {x} repeated")
            seen.add(x)
            image[x - 1] = cycle[(i + 1) % len(cycle)]
    return Permutation._trusted(tuple(image))


def cycle_lengths(image: Sequence[int]) -> tuple[int, ...]:
    """Sorted cycle lengths of a one-line image (hot path for flock filters)."""
    n = len(image)
    seen = bytearray(n + 1)
    lengths = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = 1
            length += 1
            x = image[x - 1]
        lengths.append(length)
    lengths.sort()
    return tuple(lengths)


def type_of(phi: Permutation) -> CycleType:
    counts = [0] * phi.n
    for k in cycle_lengths(phi.image):
        counts[k - 1] += 1
    return CycleType(tuple(counts))


def cyclic_type(phi: Permutation) -> Partition:
    return Partition(cycle_lengths(phi.image))


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n``, lexicographic on their non-decreasing part lists.

    >>> [str(p) for p in partitions_of(4)]
    ['[1,1,1,1]', '[1,1,2]', '[1,3]', '[2,2]', '[4]']
    """
    check_degree(n)
    out: list[Partition] = []

    def extend(prefix: list[int], remaining: int, smallest: int) -> None:
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for k in range(smallest, remaining + 1):
            # a part k must leave either nothing or at least k behind
            if remaining - k == 0 or remaining - k >= k:
                prefix.append(k)
                extend(prefix, remaining - k, k)
                prefix.pop()

    extend([], n, 1)
    return out


def rank(phi: Permutation) -> int:
    """Lehmer-code index of ``phi`` in [0, n!); equals lexicographic position of its image."""
    image = phi.image
    n = len(image)
    r = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if image[j] < image[i])
        r += smaller * factorial(n - 1 - i)
    return r


def unrank(n: int, index: int) -> Permutation:
    check_degree(n)
    total = factorial(n)
    if not 0 <= index < total:
        raise ValueError(f"index {index} out of range [0, {total})")
    pool = list(range(1, n + 1))
    image = []
    for i in range(n - 1, -1, -1):
        digit, index = divmod(index, factorial(i))
        image.append(pool.pop(digit))
    return Permutation._trusted(tuple(image))


_DOTTED_FORM = re.compile(r"\((?:\d+\.)+\)")
_EXTENDED_CYCLE = re.compile(r"\(\s*(\d+(?:\s+\d+)*)\s*\)")


def parse(text: str, n: int) -> Permutation:
    """Parse cycle text of degree ``n``.

    Accepts the dotted form ``(123.45.6.)`` (single digits, ``n <= 9``) and the
    spaced form ``(1 2 3)(4 5)(6)``. Omitted points are fixed.
    """
    check_degree(n)
    s = text.strip()
    if not s:
        raise ParseError("empty permutation text")
    cycles: list[list[int]] = []
    if "." in s:
        if n > 9:
            raise ParseError(f"dotted notation needs n <= 9, got n={n}")
        if not _DOTTED_FORM.fullmatch(s):
            raise ParseError(f"malformed cycle text {text!r}")
        cycles = [[int(c) for c in chunk] for chunk in s[1:-1].split(".")[:-1]]
    else:
        pos = 0
        for m in _EXTENDED_CYCLE.finditer(s):
            if m.start() != pos:
                raise ParseError(f"malformed cycle text {text!r}")
            cycles.append([int(tok) for tok in m.group(1).split()])
            pos = m.end()
        if pos != len(s) or not cycles:
            raise ParseError(f"malformed cycle text {text!r}")
    try:
        return from_cycles(cycles, n)
    except ValueError as exc:
        raise ParseError(f"{exc} in {text!r}") from None


def format_perm(phi: Permutation) -> str:
    """Canonical cycle text: dotted form for n <= 9, spaced form otherwise."""
    cycles = decompose(phi)
    if phi.n <= 9:
        return "(" + "".join("".join(map(str, c)) + "." for c in cycles) + ")"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

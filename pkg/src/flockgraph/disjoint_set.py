from __future__ import annotations

from collections import defaultdict
from typing import Generic, Hashable, Iterable, TypeVar

T = TypeVar("T", bound=Hashable)


class DisjointSet(Generic[T]):
    """Union-find with path halving and union by size."""

    def __init__(self, items: Iterable[T] = ()):
        self.parent: dict[T, T] = {}
        self.size: dict[T, int] = {}
        for item in items:
            self.add(item)

    def add(self, x: T) -> None:
        if x not in self.parent:
            self.parent[x] = x
            self.size[x] = 1

    def find(self, x: T) -> T:
        self.add(x)
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: T, y: T) -> T:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return rx
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        return rx

    def groups(self) -> list[set[T]]:
        by_root: dict[T, set[T]] = defaultdict(set)
        for x in self.parent:
            by_root[self.find(x)].add(x)
        return list(by_root.values())

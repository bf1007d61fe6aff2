"""Self-check harness: compare the fast paths against brute-force oracles."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Callable, Iterator

from .canon import iso_classes
from .conjugacy import (
    BRUTE_FORCE_MAX_DEGREE,
    all_conjugators,
    brute_force_conjugators,
    count_conjugators,
)
from .configurations import atlas, build_configuration, check_theorem2, oracle_components
from .flocks import all_flocks, enumerate_flock, flock_of
from .perm import Partition, inverse, rank, type_of

EXHAUSTIVE_PAIRS_MAX_DEGREE = 4
SAMPLES_PER_FLOCK = 6


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


def _spread(items: list, k: int) -> list:
    if len(items) <= k:
        return items
    step = (len(items) - 1) / (k - 1)
    return [items[round(i * step)] for i in range(k)]


def _check_conjugators(n: int) -> CheckResult:
    pairs = 0
    for flock in all_flocks(n):
        members = list(enumerate_flock(flock))
        if n <= EXHAUSTIVE_PAIRS_MAX_DEGREE:
            todo = itertools.product(members, members)
        else:
            sample = _spread(members, SAMPLES_PER_FLOCK)
            todo = itertools.product(sample, sample)
        for phi, psi in todo:
            family = list(all_conjugators(phi, psi))
            expected = count_conjugators(type_of(phi))
            if len(family) != expected or len(set(family)) != expected:
                return CheckResult(f"conjugators n={n}", False, f"count mismatch for {phi}, {psi}")
            if set(family) != brute_force_conjugators(phi, psi):
                return CheckResult(f"conjugators n={n}", False, f"set mismatch for {phi}, {psi}")
            pairs += 1
    return CheckResult(f"conjugators n={n}", True, f"{pairs} pairs agree with brute force")


def _check_orbit_stabilizer(n: int) -> CheckResult:
    flocks = all_flocks(n)
    for f in flocks:
        if f.size * count_conjugators(f.partition.to_cycle_type()) != factorial(n):
            return CheckResult(f"orbit-stabilizer n={n}", False, str(f.partition))
    if sum(f.size for f in flocks) != factorial(n):
        return CheckResult(f"orbit-stabilizer n={n}", False, "flock sizes do not sum to n!")
    return CheckResult(f"orbit-stabilizer n={n}", True, f"{len(flocks)} flocks")


def _check_components(n: int) -> CheckResult:
    for f in all_flocks(n):
        graph = atlas(f)
        got = sorted((frozenset(graph.members[r] for r in c.nodes) for c in graph.components),
                     key=lambda g: (len(g), min(g)))
        if got != oracle_components(f):
            return CheckResult(f"components n={n}", False, f"atlas vs union-find on {f.partition}")
        for comp in graph.components:
            for r in {comp.nodes[0], comp.nodes[-1]}:
                built = build_configuration(graph.members[r], f.stem)
                if set(built.members) != set(comp.nodes):
                    return CheckResult(
                        f"components n={n}", False,
                        f"configuration of {graph.members[r]} in {f.partition}",
                    )
    return CheckResult(f"components n={n}", True)


def _check_theorem2(n: int) -> CheckResult:
    for f in all_flocks(n):
        holds, counterexample = check_theorem2(f)
        if not holds:
            return CheckResult(f"telomere closure n={n}", False, f"{counterexample} in {f.partition}")
    return CheckResult(f"telomere closure n={n}", True)


def _check_golden_s6() -> CheckResult:
    graph = atlas(flock_of(Partition((6,))))
    sizes = [c.size for c in graph.components]
    sigma = graph.sigma
    ok = (
        sizes == [2, 6, 10, 18, 42, 42]
        and set(graph.component_of(sigma).nodes) == {rank(sigma), rank(inverse(sigma))}
        and len(iso_classes(graph)) == 5
    )
    return CheckResult("golden F1 of S6", ok, f"sizes {sizes}")


def run_checks(n_max: int) -> Iterator[CheckResult]:
    if not 1 <= n_max <= BRUTE_FORCE_MAX_DEGREE:
        raise ValueError(f"--max-n must be in 1..{BRUTE_FORCE_MAX_DEGREE}, got {n_max}")
    suites: list[Callable[[int], CheckResult]] = [
        _check_orbit_stabilizer,
        _check_conjugators,
        _check_components,
        _check_theorem2,
    ]
    for n in range(1, n_max + 1):
        for suite in suites:
            yield suite(n)
    if n_max >= 6:
        yield _check_golden_s6()

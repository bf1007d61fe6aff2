"""Functional graph of the step map ``phi -> phi sigma phi^-1`` on a flock.

Every member of a flock has exactly one successor, so each weakly connected
component (a configuration) is one directed cycle with in-trees hanging off it.
Nodes are identified by their rank, and every list is sorted by rank.
"""

from __future__ import annotations

from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple

from .conjugacy import BRUTE_FORCE_MAX_DEGREE, all_conjugators
from .disjoint_set import DisjointSet
from .flocks import ENUMERATION_MAX_DEGREE, Flock, ranked_members
from .perm import (
    Permutation,
    conjugate,
    conjugate_images,
    cycle_lengths,
    cyclic_type,
    rank,
)

ATLAS_MAX_NODES = 20_000_000


class FlockMismatchError(ValueError):
    """A permutation is not in the flock it was used with."""


class ResourceGuardError(RuntimeError):
    """The requested graph is larger than the memory guard allows."""


def step(phi: Permutation, sigma: Permutation) -> Permutation:
    return conjugate(phi, sigma)


def _require_same_flock(phi: Permutation, sigma: Permutation) -> None:
    if phi.n != sigma.n:
        raise ValueError(f"degree mismatch: {phi.n} vs {sigma.n}")
    if cyclic_type(phi) != cyclic_type(sigma):
        raise FlockMismatchError(
            f"{phi} has cyclic type {cyclic_type(phi)}, "
            f"but the stem {sigma} has {cyclic_type(sigma)}"
        )


@dataclass(frozen=True)
class OrbitTrace:
    start: Permutation
    tail: tuple[Permutation, ...]
    cycle: tuple[Permutation, ...]

    @property
    def tail_length(self) -> int:
        return len(self.tail)

    @property
    def cycle_length(self) -> int:
        return len(self.cycle)


def forward_orbit(phi0: Permutation, sigma: Permutation) -> OrbitTrace:
    """Iterate the step map from ``phi0`` until the first repeat."""
    _require_same_flock(phi0, sigma)
    seq: list[Permutation] = []
    position: dict[Permutation, int] = {}
    phi = phi0
    while phi not in position:
        position[phi] = len(seq)
        seq.append(phi)
        phi = step(phi, sigma)
    t = position[phi]
    return OrbitTrace(start=phi0, tail=tuple(seq[:t]), cycle=tuple(seq[t:]))


def preimages_in_flock(psi: Permutation, sigma: Permutation) -> list[Permutation]:
    """All ``rho`` in sigma's flock with ``rho sigma rho^-1 == psi``, sorted by rank."""
    target = cyclic_type(sigma).parts
    found = [rho for rho in all_conjugators(sigma, psi) if cycle_lengths(rho.image) == target]
    return sorted(found)


class NodeClass(NamedTuple):
    kind: str  # "telomere" | "simple" | "branching"
    count: int


def _node_class(count: int) -> NodeClass:
    if count == 0:
        return NodeClass("telomere", 0)
    if count == 1:
        return NodeClass("simple", 1)
    return NodeClass("branching", count)


def classify(psi: Permutation, sigma: Permutation) -> NodeClass:
    return _node_class(len(preimages_in_flock(psi, sigma)))


@dataclass(frozen=True)
class Component:
    id: int
    nodes: tuple[int, ...]
    cycle: tuple[int, ...]  # successor order, starting at its smallest rank
    telomeres: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.nodes)

    @property
    def cycle_length(self) -> int:
        return len(self.cycle)

    @property
    def telomere_count(self) -> int:
        return len(self.telomeres)


@dataclass(frozen=True)
class ConfigurationGraph:
    """Nodes keyed by rank, with successor, predecessor lists and components."""

    sigma: Permutation
    members: dict[int, Permutation]
    successor: dict[int, int]
    predecessors: dict[int, tuple[int, ...]]
    components: tuple[Component, ...]
    _component_of: dict[int, int] = field(repr=False, compare=False, default_factory=dict)

    @property
    def n(self) -> int:
        return self.sigma.n

    @property
    def nodes(self) -> list[Permutation]:
        return list(self.members.values())

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, phi: Permutation) -> bool:
        return phi.n == self.n and rank(phi) in self.members

    @property
    def telomeres(self) -> list[int]:
        return sorted(r for r, preds in self.predecessors.items() if not preds)

    def node_class(self, r: int) -> NodeClass:
        return _node_class(len(self.predecessors[r]))

    def component_of(self, phi: Permutation | int) -> Component:
        r = phi if isinstance(phi, int) else rank(phi)
        return self.components[self._component_of[r]]

    def subgraph(self, comp: Component) -> ConfigurationGraph:
        """The single configuration ``comp`` as a graph of its own."""
        return _assemble(
            self.sigma,
            {r: self.members[r] for r in comp.nodes},
            {r: self.successor[r] for r in comp.nodes},
            {r: self.predecessors[r] for r in comp.nodes},
        )


def _functional_components(successor: dict[int, int]) -> list[tuple[list[int], list[int]]]:
    """Split a functional graph into (nodes, cycle) pairs by walking successors."""
    label: dict[int, int] = {}
    comps: list[tuple[list[int], list[int]]] = []
    for start in successor:
        if start in label:
            continue
        path: list[int] = []
        on_path: dict[int, int] = {}
        x = start
        while x not in label and x not in on_path:
            on_path[x] = len(path)
            path.append(x)
            x = successor[x]
        if x in on_path:
            cid = len(comps)
            comps.append(([], path[on_path[x]:]))
        else:
            cid = label[x]
        for y in path:
            label[y] = cid
            comps[cid][0].append(y)
    return comps


def _assemble(
    sigma: Permutation,
    members: dict[int, Permutation],
    successor: dict[int, int],
    predecessors: dict[int, tuple[int, ...]],
) -> ConfigurationGraph:
    order = sorted(members)
    members = {r: members[r] for r in order}
    successor = {r: successor[r] for r in order}
    predecessors = {r: tuple(sorted(predecessors[r])) for r in order}
    raw = []
    for nodes, cycle in _functional_components(successor):
        nodes.sort()
        i = cycle.index(min(cycle))
        cycle = cycle[i:] + cycle[:i]
        raw.append((len(nodes), nodes[0], nodes, cycle))
    raw.sort(key=lambda c: (c[0], c[1]))
    components = []
    component_of = {}
    for cid, (_, _, nodes, cycle) in enumerate(raw):
        tel = tuple(r for r in nodes if not predecessors[r])
        components.append(Component(cid, tuple(nodes), tuple(cycle), tel))
        for r in nodes:
            component_of[r] = cid
    return ConfigurationGraph(
        sigma=sigma,
        members=members,
        successor=successor,
        predecessors=predecessors,
        components=tuple(components),
        _component_of=component_of,
    )


def build_configuration(phi0: Permutation, sigma: Permutation) -> ConfigurationGraph:
    """The configuration of ``phi0``: its forward orbit, closed backwards under
    in-flock preimages until only telomeres are left to expand."""
    orbit = forward_orbit(phi0, sigma)
    found: dict[int, Permutation] = {}
    predecessors: dict[int, tuple[int, ...]] = {}
    queue: deque[Permutation] = deque()
    for phi in orbit.tail + orbit.cycle:
        found[rank(phi)] = phi
        queue.append(phi)
    while queue:
        psi = queue.popleft()
        preds = preimages_in_flock(psi, sigma)
        pred_ranks = []
        for rho in preds:
            r = rank(rho)
            pred_ranks.append(r)
            if r not in found:
                found[r] = rho
                queue.append(rho)
        predecessors[rank(psi)] = tuple(pred_ranks)
    successor = {r: rank(step(phi, sigma)) for r, phi in found.items()}
    return _assemble(sigma, found, successor, predecessors)


def _check_atlas_args(flock: Flock, sigma: Permutation) -> None:
    if sigma.n != flock.n or cyclic_type(sigma) != flock.partition:
        raise FlockMismatchError(f"stem {sigma} is not in the flock {flock.partition}")
    if flock.n > ENUMERATION_MAX_DEGREE:
        raise ResourceGuardError(
            f"the atlas enumerates S_n and is limited to n <= {ENUMERATION_MAX_DEGREE}"
        )
    if flock.size > ATLAS_MAX_NODES:
        raise ResourceGuardError(
            f"flock {flock.partition} of S_{flock.n} has {flock.size} members; "
            f"the atlas is limited to {ATLAS_MAX_NODES} nodes"
        )


def _successor_chunk(images: list[tuple[int, ...]], sigma: tuple[int, ...], index: dict) -> list[int]:
    return [index[conjugate_images(img, sigma)] for img in images]


def atlas(
    flock: Flock, sigma: Permutation | None = None, threads: int = 1, chunk_size: int = 4096
) -> ConfigurationGraph:
    """Whole-flock graph with every configuration labelled.

    Successors are computed per rank range, optionally on a thread pool; results
    are stitched back in rank order so output never depends on ``threads``.
    """
    sigma = flock.stem if sigma is None else sigma
    _check_atlas_args(flock, sigma)
    ranked = list(ranked_members(flock))
    ranks = [r for r, _ in ranked]
    images = [phi.image for _, phi in ranked]
    index = {img: r for r, img in zip(ranks, images)}
    chunks = [images[i:i + chunk_size] for i in range(0, len(images), chunk_size)]
    if threads > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda c: _successor_chunk(c, sigma.image, index), chunks))
    else:
        parts = [_successor_chunk(c, sigma.image, index) for c in chunks]
    succ_list = [s for part in parts for s in part]
    successor = dict(zip(ranks, succ_list))
    predecessors: dict[int, list[int]] = {r: [] for r in ranks}
    for r, s in zip(ranks, succ_list):
        predecessors[s].append(r)
    return _assemble(
        sigma,
        {r: phi for r, phi in ranked},
        successor,
        {r: tuple(p) for r, p in predecessors.items()},
    )


def oracle_components(flock: Flock, sigma: Permutation | None = None) -> list[frozenset[Permutation]]:
    """Weak components by union-find over the edges ``phi -> step(phi)``, sorted by
    (size, smallest member). Independent of the atlas and of the preimage solver."""
    sigma = flock.stem if sigma is None else sigma
    if flock.n > BRUTE_FORCE_MAX_DEGREE:
        raise ValueError(f"oracle is limited to n <= {BRUTE_FORCE_MAX_DEGREE}, got {flock.n}")
    if cyclic_type(sigma) != flock.partition:
        raise FlockMismatchError(f"stem {sigma} is not in the flock {flock.partition}")
    ds: DisjointSet[Permutation] = DisjointSet()
    for _, phi in ranked_members(flock):
        ds.union(phi, step(phi, sigma))
    groups = [frozenset(g) for g in ds.groups()]
    return sorted(groups, key=lambda g: (len(g), min(g)))


def telomere_set(graph: ConfigurationGraph) -> list[Permutation]:
    return [graph.members[r] for r in graph.telomeres]


class TheoremCheck(NamedTuple):
    holds: bool
    counterexample: Permutation | None


def check_theorem2(
    flock: Flock, sigma: Permutation | None = None, graph: ConfigurationGraph | None = None
) -> TheoremCheck:
    """Is the telomere set closed under ``x -> sigma x sigma^-1``?"""
    sigma = flock.stem if sigma is None else sigma
    graph = atlas(flock, sigma) if graph is None else graph
    tel = set(graph.telomeres)
    for r in sorted(tel):
        image = conjugate(sigma, graph.members[r])
        if rank(image) not in tel:
            return TheoremCheck(False, graph.members[r])
    return TheoremCheck(True, None)


__all__ = [
    "ATLAS_MAX_NODES",
    "Component",
    "ConfigurationGraph",
    "FlockMismatchError",
    "NodeClass",
    "OrbitTrace",
    "ResourceGuardError",
    "TheoremCheck",
    "atlas",
    "build_configuration",
    "check_theorem2",
    "classify",
    "forward_orbit",
    "oracle_components",
    "preimages_in_flock",
    "step",
    "telomere_set",
]

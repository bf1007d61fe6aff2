"""Label-free canonical codes for configuration components.

A component of a functional graph is a directed cycle whose nodes each carry an
in-tree. Each in-tree gets an AHU bracket code (child codes sorted, then
concatenated inside one pair of brackets); the component code is the
lexicographically least rotation of the cycle's sequence of tree codes.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Mapping

from .configurations import Component, ConfigurationGraph


def _cycle_of(successor: Mapping[int, int]) -> list[int]:
    x = next(iter(successor))
    seen: dict[int, int] = {}
    path = []
    while x not in seen:
        seen[x] = len(path)
        path.append(x)
        x = successor[x]
    return path[seen[x]:]


def functional_code(successor: Mapping[int, int]) -> str:
    """Canonical code of a connected functional graph given as a successor map."""
    if not successor:
        raise ValueError("empty graph")
    if any(s not in successor for s in successor.values()):
        raise ValueError("successor map is not closed over its nodes")
    cycle = _cycle_of(successor)
    on_cycle = set(cycle)
    children: dict[int, list[int]] = defaultdict(list)
    for x, s in successor.items():
        if x not in on_cycle:
            children[s].append(x)

    code: dict[int, str] = {}
    reached = 0
    for root in cycle:
        # iterative post-order; tails can be deeper than the recursion limit
        stack = [(root, False)]
        while stack:
            x, expanded = stack.pop()
            if expanded:
                code[x] = "(" + "".join(sorted(code[c] for c in children[x])) + ")"
                reached += 1
            else:
                stack.append((x, True))
                stack.extend((c, False) for c in children[x])
    if reached != len(successor):
        raise ValueError("graph has more than one component")

    seq = [code[x] for x in cycle]
    best = min(tuple(seq[i:] + seq[:i]) for i in range(len(seq)))
    return "[" + "".join(best) + "]"


def canonical_code(graph: ConfigurationGraph, component: Component | None = None) -> str:
    """Code of ``component`` of ``graph``; ``graph`` alone must then be a single component."""
    if component is None:
        if len(graph.components) != 1:
            raise ValueError(f"expected a single component, got {len(graph.components)}")
        component = graph.components[0]
    return functional_code({r: graph.successor[r] for r in component.nodes})


def is_isomorphic(
    g1: ConfigurationGraph,
    g2: ConfigurationGraph,
    c1: Component | None = None,
    c2: Component | None = None,
) -> bool:
    return canonical_code(g1, c1) == canonical_code(g2, c2)


def iso_classes(graph: ConfigurationGraph) -> list[tuple[str, list[Component]]]:
    """Components grouped by code; classes ordered by code string."""
    groups: dict[str, list[Component]] = defaultdict(list)
    for comp in graph.components:
        groups[canonical_code(graph, comp)].append(comp)
    return sorted(groups.items())

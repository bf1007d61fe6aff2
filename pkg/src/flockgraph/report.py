"""JSON, DOT and plain-text renderings of configuration graphs."""

from __future__ import annotations

import json
from typing import Any

from .canon import canonical_code
from .configurations import ConfigurationGraph
from .flocks import Flock
from .perm import cyclic_type, format_perm

SCHEMA_VERSION = 1


def atlas_report(
    graph: ConfigurationGraph, flock: Flock | None = None, members: bool = False
) -> dict[str, Any]:
    """AtlasReport dict: per-component records in id order, plus totals."""
    partition = flock.partition if flock is not None else cyclic_type(graph.sigma)
    components = []
    for comp in graph.components:
        record: dict[str, Any] = {
            "id": comp.id,
            "size": comp.size,
            "cycle_length": comp.cycle_length,
            "telomere_count": comp.telomere_count,
            "canonical_code": canonical_code(graph, comp),
            "cycle": [format_perm(graph.members[r]) for r in comp.cycle],
        }
        if members:
            record["members"] = [format_perm(graph.members[r]) for r in comp.nodes]
            record["telomeres"] = [format_perm(graph.members[r]) for r in comp.telomeres]
        components.append(record)
    return {
        "schema_version": SCHEMA_VERSION,
        "n": graph.n,
        "partition": list(partition.parts),
        "stem": format_perm(graph.sigma),
        "flock_size": flock.size if flock is not None else None,
        "components": components,
        "totals": {
            "components": len(components),
            "nodes": len(graph),
            "telomeres": len(graph.telomeres),
            "iso_classes": len({c["canonical_code"] for c in components}),
        },
    }


def to_json(report: dict[str, Any]) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def to_dot(graph: ConfigurationGraph, name: str = "configuration") -> str:
    """Telomeres are boxes, cycle nodes have a bold border, edges are phi -> T(phi)."""
    on_cycle = {r for comp in graph.components for r in comp.cycle}
    tel = set(graph.telomeres)
    lines = [f"digraph {name} {{", "  node [shape=ellipse];"]
    for r, phi in graph.members.items():
        attrs = [f'label="{format_perm(phi)}"']
        if r in tel:
            attrs.append("shape=box")
        if r in on_cycle:
            attrs.append("style=bold")
        lines.append(f"  n{r} [{', '.join(attrs)}];")
    for r, s in graph.successor.items():
        lines.append(f"  n{r} -> n{s};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def atlas_text(report: dict[str, Any]) -> str:
    out = [
        f"n={report['n']} partition={report['partition']} stem={report['stem']}",
        f"flock size {report['flock_size']}, {report['totals']['components']} configurations, "
        f"{report['totals']['telomeres']} telomeres, {report['totals']['iso_classes']} iso classes",
        f"{'id':>4} {'size':>8} {'cycle':>6} {'telomeres':>10}  code",
    ]
    for c in report["components"]:
        out.append(
            f"{c['id']:>4} {c['size']:>8} {c['cycle_length']:>6} {c['telomere_count']:>10}  {c['canonical_code']}"
        )
        if "members" in c:
            out.append("       members: " + " ".join(c["members"]))
    return "\n".join(out) + "\n"


def config_text(graph: ConfigurationGraph) -> str:
    """One line per node: notation, successor, class and predecessor count."""
    out = []
    for r, phi in graph.members.items():
        kind, count = graph.node_class(r)
        out.append(
            f"{format_perm(phi)} -> {format_perm(graph.members[graph.successor[r]])}"
            f"  {kind} ({count})"
        )
    comp = graph.components[0] if len(graph.components) == 1 else None
    if comp is not None:
        out.append(
            f"{comp.size} nodes, cycle length {comp.cycle_length}, {comp.telomere_count} telomeres"
        )
    return "\n".join(out) + "\n"

"""Byte-stable graph serialization: plain edge lists and GraphML.

Identical inputs always produce identical bytes: edges are emitted sorted
as (u, v) with u < v, and the GraphML layout is fixed.
"""

from __future__ import annotations

from .centrality import CentralityTable
from .errors import BadValueError
from .graph import Graph


def edge_list_text(g: Graph) -> str:
    """One "u v" line per edge, sorted. Isolated nodes are not represented."""
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def parse_edge_list(text: str) -> Graph:
    """Graph from "u v" lines; node count is the largest id + 1."""
    edges = []
    max_id = -1
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise BadValueError(f"line {lineno}: expected 'u v', got {stripped!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise BadValueError(f"line {lineno}: node ids must be integers") from None
        if u < 0 or v < 0:
            raise BadValueError(f"line {lineno}: node ids must be >= 0")
        edges.append((u, v))
        max_id = max(max_id, u, v)
    return Graph.from_edges(max_id + 1, edges)


def graphml_text(g: Graph, centrality: CentralityTable | None = None) -> str:
    """GraphML with a role attribute per node and an optional centrality score."""
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<graphml xmlns="http://graphml.graphdrawing.org/xmlns">',
        '  <key id="role" for="node" attr.name="role" attr.type="string"/>',
    ]
    if centrality is not None:
        lines.append(
            f'  <key id="centrality" for="node" attr.name="{centrality.metric.value}"'
            ' attr.type="double"/>'
        )
    lines.append('  <graph edgedefault="undirected">')
    for v in range(g.node_count):
        lines.append(f'    <node id="n{v}">')
        lines.append(f'      <data key="role">{g.roles[v].value}</data>')
        if centrality is not None:
            lines.append(f'      <data key="centrality">{centrality.scores[v]:.12g}</data>')
        lines.append("    </node>")
    for u, v in g.edges():
        lines.append(f'    <edge source="n{u}" target="n{v}"/>')
    lines.append("  </graph>")
    lines.append("</graphml>")
    return "\n".join(lines) + "\n"

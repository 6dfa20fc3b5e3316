"""Deterministic node placement for the mind-map.

Two styles: ``layered`` ranks nodes by their longest prerequisite chain and
orders each layer by a single barycenter pass, ``concentric`` rings nodes by
importance so the core concepts sit innermost. Both are pure functions of
the graph: identical inputs give bit-identical positions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import SrlTutorError
from .model import KnowledgeGraph

X_SPACING = 1.0
Y_SPACING = 1.0
RING_SPACING = 1.0
# Half spacing keeps several top-importance nodes apart when they share ring 0.
INNER_RING_RADIUS = 0.5


class CyclicGraph(SrlTutorError):
    pass


@dataclass(frozen=True)
class LayoutResult:
    positions: dict[str, tuple[float, float]]
    style: str


def prerequisite_ranks(graph: KnowledgeGraph) -> dict[str, int]:
    """Rank = length of the longest prerequisite chain ending at each node."""
    parents: dict[str, list[str]] = {n: [] for n in graph.nodes}
    children: dict[str, list[str]] = {n: [] for n in graph.nodes}
    indegree = {n: 0 for n in graph.nodes}
    for source, target in graph.prerequisite_edges():
        parents[target].append(source)
        children[source].append(target)
        indegree[target] += 1

    ranks: dict[str, int] = {}
    ready = sorted(n for n, d in indegree.items() if d == 0)
    order: list[str] = []
    while ready:
        node = ready.pop()
        order.append(node)
        ranks[node] = max((ranks[p] + 1 for p in parents[node]), default=0)
        for child in children[node]:
            indegree[child] -= 1
            if indegree[child] == 0:
                ready.append(child)
    if len(order) != len(graph.nodes):
        raise CyclicGraph("prerequisite subgraph contains a cycle")
    return ranks


def layout_layered(graph: KnowledgeGraph) -> LayoutResult:
    ranks = prerequisite_ranks(graph)
    layers: dict[int, list[str]] = {}
    for node, rank in ranks.items():
        layers.setdefault(rank, []).append(node)

    positions: dict[str, tuple[float, float]] = {}
    for rank in sorted(layers):
        members = layers[rank]
        if rank == 0:
            ordered = sorted(members)
        else:
            def barycenter(node: str) -> float:
                parent_xs = [positions[p][0] for p in graph.prerequisite_parents(node)]
                return sum(parent_xs) / len(parent_xs) if parent_xs else 0.0

            ordered = sorted(members, key=lambda n: (barycenter(n), n))
        offset = (len(ordered) - 1) / 2.0
        for i, node in enumerate(ordered):
            positions[node] = ((i - offset) * X_SPACING, rank * Y_SPACING)
    return LayoutResult(positions=positions, style="layered")


def layout_concentric(graph: KnowledgeGraph) -> LayoutResult:
    n = len(graph.nodes)
    if n == 0:
        return LayoutResult(positions={}, style="concentric")

    by_importance = sorted(graph.nodes.values(), key=lambda p: (-p.importance, p.id))
    ring_count = math.ceil(math.sqrt(n))
    rings: dict[int, list[str]] = {}
    for position, point in enumerate(by_importance):
        rings.setdefault(position * ring_count // n, []).append(point.id)

    positions: dict[str, tuple[float, float]] = {}
    for ring, members in rings.items():
        if ring == 0:
            radius = 0.0 if len(members) == 1 else INNER_RING_RADIUS
        else:
            radius = ring * RING_SPACING
        for i, node in enumerate(sorted(members)):
            angle = 2.0 * math.pi * i / len(members)
            positions[node] = (radius * math.cos(angle), radius * math.sin(angle))
    return LayoutResult(positions=positions, style="concentric")

from __future__ import annotations

import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from srltutor.graph import KnowledgeGraph, KnowledgePoint, Relation


def make_graph(
    node_count: int,
    edges: list[tuple[int, int]],
    importances: list[float] | None = None,
    levels: list[int] | None = None,
) -> KnowledgeGraph:
    """Graph with nodes n0..n{count-1} and prerequisite edges given by index pairs."""
    graph = KnowledgeGraph()
    for i in range(node_count):
        graph = graph.add_node(
            KnowledgePoint(
                id=f"n{i}",
                name=f"Concept {i}",
                level=levels[i] if levels else (i % 8) + 1,
                importance=importances[i] if importances else 1.0 - i / (node_count + 1),
            )
        )
    for s, t in edges:
        graph = graph.add_edge(
            Relation(source=f"n{s}", target=f"n{t}", kind="prerequisite", level=1)
        )
    return graph


def random_dag(rng: random.Random, max_nodes: int) -> tuple[int, list[tuple[int, int]]]:
    """Random DAG as (node count, forward index edges)."""
    n = rng.randint(1, max_nodes)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < 0.3
    ]
    return n, edges


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)

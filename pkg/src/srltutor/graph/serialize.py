"""Versioned graph document format.

The canonical form sorts nodes by id and edges by (source, target, kind) and
omits absent optional fields, so emit(parse(emit(g))) == emit(g).
"""

from __future__ import annotations

from ..errors import SrlTutorError
from ..levels import LevelTaxonomy
from .model import KnowledgeGraph, KnowledgePoint, Relation

FORMAT_NAME = "knowledge-graph"
FORMAT_VERSION = 1


class BadGraphDocument(SrlTutorError):
    pass


def graph_to_document(graph: KnowledgeGraph) -> dict:
    nodes = []
    for point in sorted(graph.nodes.values(), key=lambda p: p.id):
        entry: dict = {
            "id": point.id,
            "name": point.name,
            "level": point.level,
            "importance": point.importance,
        }
        if point.note is not None:
            entry["note"] = point.note
        if point.word_cloud is not None:
            entry["word_cloud"] = [[term, weight] for term, weight in point.word_cloud]
        nodes.append(entry)
    edges = [
        {"source": r.source, "target": r.target, "kind": r.kind, "level": r.level}
        for r in sorted(graph.relations, key=lambda r: r.key)
    ]
    return {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "taxonomy": list(graph.taxonomy.labels),
        "relation_kinds": list(graph.relation_kinds),
        "nodes": nodes,
        "edges": edges,
    }


def graph_from_document(doc: dict) -> KnowledgeGraph:
    if doc.get("format") != FORMAT_NAME:
        raise BadGraphDocument(f"not a {FORMAT_NAME} document")
    if doc.get("version") != FORMAT_VERSION:
        raise BadGraphDocument(f"unsupported version {doc.get('version')!r}")
    try:
        taxonomy = LevelTaxonomy(tuple(doc["taxonomy"]))
        relation_kinds = tuple(doc["relation_kinds"])
        nodes = {}
        for entry in doc["nodes"]:
            cloud = entry.get("word_cloud")
            point = KnowledgePoint(
                id=entry["id"],
                name=entry["name"],
                level=entry["level"],
                importance=entry["importance"],
                note=entry.get("note"),
                word_cloud=tuple((t, w) for t, w in cloud) if cloud is not None else None,
            )
            if point.id in nodes:
                raise BadGraphDocument(f"duplicate node id {point.id!r}")
            nodes[point.id] = point
        relations = tuple(
            Relation(source=e["source"], target=e["target"], kind=e["kind"], level=e["level"])
            for e in doc["edges"]
        )
    except (KeyError, TypeError) as exc:
        raise BadGraphDocument(f"malformed graph document: {exc}") from exc
    graph = KnowledgeGraph(
        taxonomy=taxonomy, relation_kinds=relation_kinds, nodes=nodes, relations=relations
    )
    graph.validate()
    return graph

"""Composite per-session state and its durable document form."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..graph import KnowledgeGraph, KnowledgePoint, Relation, graph_from_document, graph_to_document
from ..graph.model import PREREQUISITE
from ..ingestion import (
    KnowledgeCard,
    KnowledgeTree,
    MaterialDocument,
    cards_from_dict,
    cards_to_dict,
    document_from_dict,
    document_to_dict,
    tree_from_dict,
    tree_to_dict,
)
from ..levels import LevelTaxonomy
from ..srl import SrlSession, session_from_document, session_to_document
from .store import StoreError

API_FORMAT = "api-session"
API_VERSION = 1

_SLUG = re.compile(r"[^a-z0-9]+")


@dataclass
class SessionState:
    id: str
    token: str
    graph_version: int
    graph: KnowledgeGraph
    srl: SrlSession
    documents: dict[str, MaterialDocument] = field(default_factory=dict)
    trees: dict[str, KnowledgeTree] = field(default_factory=dict)
    cards: dict[str, list[KnowledgeCard]] = field(default_factory=dict)
    requests: dict[str, dict] = field(default_factory=dict)

    def set_graph(self, graph: KnowledgeGraph) -> None:
        self.graph = graph
        self.graph_version += 1
        self.srl.graph = graph
        self.srl.graph_version = self.graph_version


def new_session_state(session_id: str, token: str, taxonomy: LevelTaxonomy,
                      relation_kinds: tuple[str, ...], clock) -> SessionState:
    graph = KnowledgeGraph(taxonomy=taxonomy, relation_kinds=relation_kinds)
    srl = SrlSession(id=session_id, graph=graph, clock=clock)
    return SessionState(session_id, token, 0, graph, srl)


def state_to_document(state: SessionState) -> dict:
    return {
        "format": API_FORMAT,
        "version": API_VERSION,
        "id": state.id,
        "token": state.token,
        "graph_version": state.graph_version,
        "graph": graph_to_document(state.graph),
        "srl": session_to_document(state.srl),
        "documents": {k: document_to_dict(v) for k, v in state.documents.items()},
        "trees": {k: tree_to_dict(v) for k, v in state.trees.items()},
        "cards": {k: cards_to_dict(v) for k, v in state.cards.items()},
        "requests": state.requests,
    }


def state_from_document(document: dict, clock) -> SessionState:
    if document.get("format") != API_FORMAT or document.get("version") != API_VERSION:
        raise StoreError("session file is not an api-session document")
    try:
        graph = graph_from_document(document["graph"])
        documents = {
            k: document_from_dict(v) for k, v in document["documents"].items()
        }
        return SessionState(
            id=document["id"],
            token=document["token"],
            graph_version=document["graph_version"],
            graph=graph,
            srl=session_from_document(document["srl"], graph, clock=clock),
            documents=documents,
            trees={
                k: tree_from_dict(v, documents.get(k))
                for k, v in document["trees"].items()
            },
            cards={k: cards_from_dict(v) for k, v in document["cards"].items()},
            requests=dict(document["requests"]),
        )
    except (KeyError, TypeError) as exc:
        raise StoreError(f"session file corrupt: {exc}") from exc


def node_slug(name: str) -> str:
    slug = _SLUG.sub("-", name.lower()).strip("-")
    return slug or "node"


def adopt_tree(graph: KnowledgeGraph, tree: KnowledgeTree) -> KnowledgeGraph:
    """Merge an extracted tree: new nodes added, parent->child prerequisites.

    Existing nodes keep their current fields so user edits survive re-adoption.
    """
    ids: dict[str, str] = {}
    for node, _ in tree.walk():
        slug = node_slug(node.name)
        while slug in ids.values() and not (
            graph.has_node(slug) and graph.node(slug).name == node.name
        ):
            slug += "-x"
        ids[node.name] = slug
        if not graph.has_node(slug):
            graph = graph.add_node(
                KnowledgePoint(
                    id=slug,
                    name=node.name,
                    level=node.level,
                    importance=node.importance,
                )
            )

    def add_edges(parent, children):
        nonlocal graph
        for child in children:
            relation = Relation(
                ids[parent.name], ids[child.name], PREREQUISITE, child.level
            )
            if not _has_edge(graph, relation):
                graph = graph.add_edge(relation)
            add_edges(child, child.children)

    for root in tree.roots:
        add_edges(root, root.children)
    return graph


def _has_edge(graph: KnowledgeGraph, relation: Relation) -> bool:
    return any(r.key == relation.key for r in graph.relations)

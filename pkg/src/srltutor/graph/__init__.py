from .model import (
    DEFAULT_RELATION_KINDS,
    CycleWouldForm,
    DuplicateEdge,
    InvalidNode,
    InvalidRelation,
    KnowledgeGraph,
    KnowledgePoint,
    Relation,
    UnknownEdge,
    UnknownNode,
    mutate_graph,
)
from .layout import CyclicGraph, LayoutResult, layout_concentric, layout_layered
from .serialize import graph_from_document, graph_to_document
from .wordcloud import EmptyNote, load_default_stopwords, summarize_note

__all__ = [
    "DEFAULT_RELATION_KINDS",
    "CycleWouldForm",
    "CyclicGraph",
    "DuplicateEdge",
    "EmptyNote",
    "InvalidNode",
    "InvalidRelation",
    "KnowledgeGraph",
    "KnowledgePoint",
    "LayoutResult",
    "Relation",
    "UnknownEdge",
    "UnknownNode",
    "graph_from_document",
    "graph_to_document",
    "layout_concentric",
    "layout_layered",
    "load_default_stopwords",
    "mutate_graph",
    "summarize_note",
]

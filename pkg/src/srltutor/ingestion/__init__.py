"""Learning-material ingestion: parsing, tree extraction, knowledge cards."""

from .document import (
    FORMATS,
    MARKDOWN,
    MATERIAL_FORMAT,
    MATERIAL_VERSION,
    PLAIN,
    BadMaterialDocument,
    EmptyDocument,
    EncodingError,
    MaterialDocument,
    Section,
    UnsupportedFormat,
    document_from_dict,
    document_to_dict,
    format_for_filename,
    parse_document,
    section_at,
    validate_document,
)
from .extract import (
    CARDS_FORMAT,
    CARDS_VERSION,
    TREE_FORMAT,
    TREE_VERSION,
    BadTreeDocument,
    KnowledgeCard,
    KnowledgeTree,
    MalformedExtraction,
    TreeNode,
    build_knowledge_cards,
    cards_from_dict,
    cards_to_dict,
    extract_knowledge_tree,
    question_stub,
    tree_from_dict,
    tree_to_dict,
    validate_tree,
)

__all__ = [
    "CARDS_FORMAT",
    "CARDS_VERSION",
    "FORMATS",
    "MARKDOWN",
    "MATERIAL_FORMAT",
    "MATERIAL_VERSION",
    "PLAIN",
    "TREE_FORMAT",
    "TREE_VERSION",
    "BadMaterialDocument",
    "BadTreeDocument",
    "EmptyDocument",
    "EncodingError",
    "KnowledgeCard",
    "KnowledgeTree",
    "MalformedExtraction",
    "MaterialDocument",
    "Section",
    "TreeNode",
    "UnsupportedFormat",
    "build_knowledge_cards",
    "cards_from_dict",
    "cards_to_dict",
    "document_from_dict",
    "document_to_dict",
    "extract_knowledge_tree",
    "format_for_filename",
    "parse_document",
    "question_stub",
    "section_at",
    "tree_from_dict",
    "tree_to_dict",
    "validate_document",
    "validate_tree",
]

"""Knowledge structure extraction and knowledge cards via the chat gateway.

The extraction prompt asks for flat tree_node records (parents before
children); this module rebuilds the tree, repairs noisy duplicate siblings
by suffixing an occurrence index, and rejects anything that would break the
single-parent invariant. Unusable replies are re-asked before giving up.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import SrlTutorError
from ..gateway import (
    ChatGateway,
    MalformedReply,
    machine_records,
    render_card_prompt,
    render_tree_extraction_prompt,
)
from ..levels import LEVEL_COUNT
from .document import MaterialDocument, section_at

TREE_FORMAT = "knowledge-tree"
TREE_VERSION = 1
CARDS_FORMAT = "knowledge-cards"
CARDS_VERSION = 1

DEFAULT_IMPORTANCE = 0.5


class MalformedExtraction(SrlTutorError):
    def __init__(self, attempts: int, reason: str):
        super().__init__(f"extraction failed after {attempts} attempts: {reason}")
        self.attempts = attempts
        self.reason = reason


class BadTreeDocument(SrlTutorError):
    pass


@dataclass(frozen=True)
class TreeNode:
    name: str
    level: int
    importance: float
    children: tuple[TreeNode, ...] = ()
    span: tuple[int, int] | None = None


@dataclass(frozen=True)
class KnowledgeTree:
    roots: tuple[TreeNode, ...]

    def walk(self):
        """Preorder traversal: (node, depth starting at 1)."""
        stack = [(root, 1) for root in reversed(self.roots)]
        while stack:
            node, depth = stack.pop()
            yield node, depth
            for child in reversed(node.children):
                stack.append((child, depth + 1))

    def names(self) -> list[str]:
        return [node.name for node, _ in self.walk()]

    def size(self) -> int:
        return sum(1 for _ in self.walk())


@dataclass(frozen=True)
class KnowledgeCard:
    node_name: str
    significance: str
    application: str
    question_stub: str


class _BadTree(Exception):
    pass


def extract_knowledge_tree(
    doc: MaterialDocument, gateway: ChatGateway, retries: int = 2
) -> KnowledgeTree:
    """Ask the gateway for the document's concept tree; re-ask bad replies.

    After ``retries`` re-asks (attempts = retries + 1) the last problem is
    reported as MalformedExtraction.
    """
    prompt = render_tree_extraction_prompt(doc.title, doc.body)
    last_reason = ""
    for _ in range(retries + 1):
        text = gateway.complete(prompt)
        try:
            tree = _tree_from_reply(text, doc)
        except (_BadTree, MalformedReply) as exc:
            last_reason = str(exc)
            continue
        validate_tree(tree, doc)
        return tree
    raise MalformedExtraction(retries + 1, last_reason)


def _tree_from_reply(text: str, doc: MaterialDocument) -> KnowledgeTree:
    records = [r for r in machine_records(text) if r["type"] == "tree_node"]
    if not records:
        raise _BadTree("no tree_node records in reply")
    body_bytes = doc.byte_length()

    entries: dict[str, dict] = {}  # final name -> entry
    order: list[str] = []
    for record in records:
        name = record.get("name")
        if not isinstance(name, str) or not name.strip():
            raise _BadTree("tree_node needs a nonempty name")
        name = name.strip()
        parent = record.get("parent") or ""
        if not isinstance(parent, str):
            raise _BadTree("tree_node parent must be a string")
        parent = parent.strip()
        if parent and parent not in entries:
            raise _BadTree(f"unknown parent {parent!r} (parents must come first)")
        if name in entries:
            if entries[name]["parent"] != parent:
                raise _BadTree(f"multiple parents for {name!r}")
            # duplicate sibling: keep it, disambiguated by occurrence index
            k = 2
            while f"{name} ({k})" in entries:
                k += 1
            name = f"{name} ({k})"
        span = _clean_span(record.get("span"), body_bytes)
        depth = entries[parent]["depth"] + 1 if parent else 1
        entries[name] = {
            "name": name,
            "parent": parent,
            "level": _clean_level(record.get("level"), span, doc, depth),
            "importance": _clean_importance(record.get("importance")),
            "span": span,
            "depth": depth,
            "children": [],
        }
        order.append(name)
        if parent:
            entries[parent]["children"].append(name)

    def build(name: str) -> TreeNode:
        entry = entries[name]
        return TreeNode(
            name=entry["name"],
            level=entry["level"],
            importance=entry["importance"],
            children=tuple(build(child) for child in entry["children"]),
            span=entry["span"],
        )

    roots = tuple(build(name) for name in order if not entries[name]["parent"])
    return KnowledgeTree(roots)


def _clean_level(value, span, doc: MaterialDocument, depth: int) -> int:
    if value is None:
        # fall back to the heading depth around the span, then tree depth
        if span is not None:
            section = section_at(doc, span[0])
            if section is not None and section.depth >= 1:
                return min(section.depth, LEVEL_COUNT)
        return min(depth, LEVEL_COUNT)
    if not isinstance(value, int) or isinstance(value, bool) or not 1 <= value <= LEVEL_COUNT:
        raise _BadTree(f"bad level {value!r}")
    return value


def _clean_importance(value) -> float:
    if value is None:
        return DEFAULT_IMPORTANCE
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise _BadTree(f"bad importance {value!r}")
    if not 0 < value <= 1:
        raise _BadTree(f"importance {value} outside (0, 1]")
    return float(value)


def _clean_span(value, body_bytes: int) -> tuple[int, int] | None:
    if value is None:
        return None
    if (
        not isinstance(value, (list, tuple))
        or len(value) != 2
        or not all(isinstance(v, int) and not isinstance(v, bool) for v in value)
    ):
        raise _BadTree(f"bad span {value!r}")
    start, end = value
    if not 0 <= start < end <= body_bytes:
        raise _BadTree(f"span [{start}, {end}) outside document")
    return (start, end)


def validate_tree(tree: KnowledgeTree, doc: MaterialDocument | None = None) -> None:
    """Names nonempty and unique; spans (when present) inside the document."""
    seen: set[str] = set()
    body_bytes = doc.byte_length() if doc is not None else None
    for node, _ in tree.walk():
        if not node.name.strip():
            raise BadTreeDocument("tree node with empty name")
        if node.name in seen:
            raise BadTreeDocument(f"duplicate node name {node.name!r}")
        seen.add(node.name)
        if not 1 <= node.level <= LEVEL_COUNT:
            raise BadTreeDocument(f"bad level on {node.name!r}")
        if not 0 < node.importance <= 1:
            raise BadTreeDocument(f"bad importance on {node.name!r}")
        if node.span is not None and body_bytes is not None:
            start, end = node.span
            if not 0 <= start < end <= body_bytes:
                raise BadTreeDocument(f"span on {node.name!r} outside document")


def question_stub(node_name: str, title: str) -> str:
    return f"Explain {node_name} in the context of {title}"


def build_knowledge_cards(
    tree: KnowledgeTree,
    doc: MaterialDocument,
    gateway: ChatGateway,
    retries: int = 2,
) -> list[KnowledgeCard]:
    """One card per tree node, in preorder; each card needs some substance."""
    cards: list[KnowledgeCard] = []
    for node, _ in tree.walk():
        prompt = render_card_prompt(node.name, doc.title)
        last_reason = ""
        card = None
        for _ in range(retries + 1):
            text = gateway.complete(prompt)
            try:
                significance, application = _card_from_reply(text)
            except (_BadTree, MalformedReply) as exc:
                last_reason = str(exc)
                continue
            card = KnowledgeCard(
                node_name=node.name,
                significance=significance,
                application=application,
                question_stub=question_stub(node.name, doc.title),
            )
            break
        if card is None:
            raise MalformedExtraction(retries + 1, f"card for {node.name!r}: {last_reason}")
        cards.append(card)
    return cards


def _card_from_reply(text: str) -> tuple[str, str]:
    for record in machine_records(text):
        if record["type"] != "card":
            continue
        significance = record.get("significance") or ""
        application = record.get("application") or ""
        if not isinstance(significance, str) or not isinstance(application, str):
            raise _BadTree("card fields must be strings")
        if not significance.strip() and not application.strip():
            raise _BadTree("card needs significance or application")
        return significance.strip(), application.strip()
    raise _BadTree("no card record in reply")


# --- serialization ---------------------------------------------------------

def tree_to_dict(tree: KnowledgeTree) -> dict:
    return {
        "format": TREE_FORMAT,
        "version": TREE_VERSION,
        "roots": [_node_to_dict(root) for root in tree.roots],
    }


def _node_to_dict(node: TreeNode) -> dict:
    data: dict = {
        "name": node.name,
        "level": node.level,
        "importance": node.importance,
        "children": [_node_to_dict(child) for child in node.children],
    }
    if node.span is not None:
        data["span"] = list(node.span)
    return data


def tree_from_dict(data: dict, doc: MaterialDocument | None = None) -> KnowledgeTree:
    if data.get("format") != TREE_FORMAT:
        raise BadTreeDocument(f"not a {TREE_FORMAT} document")
    if data.get("version") != TREE_VERSION:
        raise BadTreeDocument(f"unsupported version {data.get('version')!r}")
    try:
        tree = KnowledgeTree(tuple(_node_from_dict(r) for r in data["roots"]))
    except (KeyError, TypeError) as exc:
        raise BadTreeDocument(f"invalid tree document: {exc}") from exc
    validate_tree(tree, doc)
    return tree


def _node_from_dict(data: dict) -> TreeNode:
    span = data.get("span")
    return TreeNode(
        name=data["name"],
        level=data["level"],
        importance=data["importance"],
        children=tuple(_node_from_dict(c) for c in data["children"]),
        span=tuple(span) if span is not None else None,
    )


def cards_to_dict(cards: list[KnowledgeCard]) -> dict:
    return {
        "format": CARDS_FORMAT,
        "version": CARDS_VERSION,
        "cards": [
            {
                "node": c.node_name,
                "significance": c.significance,
                "application": c.application,
                "question_stub": c.question_stub,
            }
            for c in cards
        ],
    }


def cards_from_dict(data: dict) -> list[KnowledgeCard]:
    if data.get("format") != CARDS_FORMAT:
        raise BadTreeDocument(f"not a {CARDS_FORMAT} document")
    if data.get("version") != CARDS_VERSION:
        raise BadTreeDocument(f"unsupported version {data.get('version')!r}")
    try:
        return [
            KnowledgeCard(c["node"], c["significance"], c["application"], c["question_stub"])
            for c in data["cards"]
        ]
    except (KeyError, TypeError) as exc:
        raise BadTreeDocument(f"invalid cards document: {exc}") from exc

"""Mutable-by-copy knowledge-point graph.

Graphs are immutable snapshots: every mutation returns a new graph and the
old value stays valid, so concurrent readers never observe partial edits.
The prerequisite relation kind is special: its subgraph must stay acyclic
because it defines the learnable order.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from ..errors import SrlTutorError
from ..levels import LEVEL_COUNT, LevelTaxonomy

DEFAULT_RELATION_KINDS: tuple[str, ...] = (
    "prerequisite",
    "part_of",
    "applies_to",
    "contrasts_with",
)

PREREQUISITE = "prerequisite"


class UnknownNode(SrlTutorError):
    pass


class UnknownEdge(SrlTutorError):
    pass


class DuplicateEdge(SrlTutorError):
    pass


class CycleWouldForm(SrlTutorError):
    pass


class InvalidNode(SrlTutorError):
    pass


class InvalidRelation(SrlTutorError):
    pass


@dataclass(frozen=True)
class KnowledgePoint:
    """A concept node; ``level`` indexes the taxonomy, ``importance`` in (0, 1]."""

    id: str
    name: str
    level: int
    importance: float
    note: str | None = None
    word_cloud: tuple[tuple[str, float], ...] | None = None

    def validate(self) -> None:
        if not self.id:
            raise InvalidNode("node id must be nonempty")
        if not self.name or not self.name.strip():
            raise InvalidNode(f"node {self.id!r}: name must be nonempty")
        if not 1 <= self.level <= LEVEL_COUNT:
            raise InvalidNode(f"node {self.id!r}: level {self.level} outside [1, {LEVEL_COUNT}]")
        if not 0.0 < self.importance <= 1.0:
            raise InvalidNode(f"node {self.id!r}: importance {self.importance} outside (0, 1]")
        if self.word_cloud is not None:
            weights = [w for _, w in self.word_cloud]
            if any(not 0.0 < w <= 1.0 for w in weights):
                raise InvalidNode(f"node {self.id!r}: word cloud weights outside (0, 1]")
            if weights != sorted(weights, reverse=True):
                raise InvalidNode(f"node {self.id!r}: word cloud weights not sorted")
            if weights and weights[0] != 1.0:
                raise InvalidNode(f"node {self.id!r}: top word cloud weight must be 1.0")


@dataclass(frozen=True)
class Relation:
    """A typed edge; ``level`` must name a taxonomy level (membership only)."""

    source: str
    target: str
    kind: str
    level: int

    @property
    def key(self) -> tuple[str, str, str]:
        return (self.source, self.target, self.kind)


@dataclass(frozen=True)
class KnowledgeGraph:
    taxonomy: LevelTaxonomy = field(default_factory=LevelTaxonomy)
    relation_kinds: tuple[str, ...] = DEFAULT_RELATION_KINDS
    nodes: dict[str, KnowledgePoint] = field(default_factory=dict)
    relations: tuple[Relation, ...] = ()

    def node(self, node_id: str) -> KnowledgePoint:
        try:
            return self.nodes[node_id]
        except KeyError:
            raise UnknownNode(f"unknown node {node_id!r}") from None

    def has_node(self, node_id: str) -> bool:
        return node_id in self.nodes

    def relation(self, source: str, target: str, kind: str) -> Relation:
        for rel in self.relations:
            if rel.key == (source, target, kind):
                return rel
        raise UnknownEdge(f"no {kind} edge {source!r} -> {target!r}")

    def prerequisite_edges(self) -> list[tuple[str, str]]:
        return [(r.source, r.target) for r in self.relations if r.kind == PREREQUISITE]

    def prerequisite_parents(self, node_id: str) -> list[str]:
        return [s for s, t in self.prerequisite_edges() if t == node_id]

    def prerequisite_ancestors(self, node_id: str) -> set[str]:
        """All nodes reachable backwards over prerequisite edges (excl. the node)."""
        self.node(node_id)
        parents: dict[str, list[str]] = {}
        for s, t in self.prerequisite_edges():
            parents.setdefault(t, []).append(s)
        seen: set[str] = set()
        stack = list(parents.get(node_id, []))
        while stack:
            current = stack.pop()
            if current in seen:
                continue
            seen.add(current)
            stack.extend(parents.get(current, []))
        return seen

    def add_node(self, point: KnowledgePoint) -> KnowledgeGraph:
        point.validate()
        if point.id in self.nodes:
            raise InvalidNode(f"node id {point.id!r} already present")
        nodes = dict(self.nodes)
        nodes[point.id] = point
        return replace(self, nodes=nodes)

    def edit_node(self, node_id: str, **changes) -> KnowledgeGraph:
        updated = replace(self.node(node_id), **changes)
        if updated.id != node_id:
            raise InvalidNode("node id cannot be changed by edit")
        updated.validate()
        nodes = dict(self.nodes)
        nodes[node_id] = updated
        return replace(self, nodes=nodes)

    def remove_node(self, node_id: str) -> KnowledgeGraph:
        self.node(node_id)
        nodes = {k: v for k, v in self.nodes.items() if k != node_id}
        relations = tuple(r for r in self.relations if node_id not in (r.source, r.target))
        return replace(self, nodes=nodes, relations=relations)

    def add_edge(self, relation: Relation) -> KnowledgeGraph:
        self._check_relation(relation)
        if any(r.key == relation.key for r in self.relations):
            raise DuplicateEdge(
                f"{relation.kind} edge {relation.source!r} -> {relation.target!r} already present"
            )
        if relation.kind == PREREQUISITE and self._reaches(relation.target, relation.source):
            raise CycleWouldForm(
                f"prerequisite edge {relation.source!r} -> {relation.target!r} would close a cycle"
            )
        return replace(self, relations=self.relations + (relation,))

    def edit_edge(self, source: str, target: str, kind: str, *, level: int) -> KnowledgeGraph:
        existing = self.relation(source, target, kind)
        updated = replace(existing, level=level)
        self._check_relation(updated)
        relations = tuple(updated if r.key == existing.key else r for r in self.relations)
        return replace(self, relations=relations)

    def remove_edge(self, source: str, target: str, kind: str) -> KnowledgeGraph:
        self.relation(source, target, kind)
        relations = tuple(r for r in self.relations if r.key != (source, target, kind))
        return replace(self, relations=relations)

    def _check_relation(self, relation: Relation) -> None:
        self.node(relation.source)
        self.node(relation.target)
        if relation.source == relation.target:
            raise InvalidRelation(f"self edge on {relation.source!r}")
        if relation.kind not in self.relation_kinds:
            raise InvalidRelation(f"unknown relation kind {relation.kind!r}")
        if not 1 <= relation.level <= LEVEL_COUNT:
            raise InvalidRelation(
                f"edge {relation.source!r} -> {relation.target!r}: level {relation.level} "
                f"outside [1, {LEVEL_COUNT}]"
            )

    def _reaches(self, start: str, goal: str) -> bool:
        """True if ``goal`` is reachable from ``start`` over prerequisite edges."""
        children: dict[str, list[str]] = {}
        for s, t in self.prerequisite_edges():
            children.setdefault(s, []).append(t)
        stack = [start]
        seen: set[str] = set()
        while stack:
            current = stack.pop()
            if current == goal:
                return True
            if current in seen:
                continue
            seen.add(current)
            stack.extend(children.get(current, []))
        return False

    def validate(self) -> None:
        """Re-check every structural invariant; raises on the first violation."""
        for node in self.nodes.values():
            node.validate()
        seen_keys: set[tuple[str, str, str]] = set()
        for rel in self.relations:
            self._check_relation(rel)
            if rel.key in seen_keys:
                raise DuplicateEdge(f"duplicate edge {rel.key}")
            seen_keys.add(rel.key)
        if self._has_prerequisite_cycle():
            raise CycleWouldForm("prerequisite subgraph contains a cycle")

    def _has_prerequisite_cycle(self) -> bool:
        children: dict[str, list[str]] = {}
        for s, t in self.prerequisite_edges():
            children.setdefault(s, []).append(t)
        WHITE, GRAY, BLACK = 0, 1, 2
        color = {n: WHITE for n in self.nodes}

        def visit(node: str) -> bool:
            color[node] = GRAY
            for child in children.get(node, []):
                if color[child] == GRAY:
                    return True
                if color[child] == WHITE and visit(child):
                    return True
            color[node] = BLACK
            return False

        return any(color[n] == WHITE and visit(n) for n in list(self.nodes))


def mutate_graph(graph: KnowledgeGraph, op: str, payload: dict) -> KnowledgeGraph:
    """Apply one named mutation; the input graph is never modified."""
    if op == "add_node":
        return graph.add_node(
            KnowledgePoint(
                id=payload["id"],
                name=payload["name"],
                level=payload["level"],
                importance=payload["importance"],
                note=payload.get("note"),
            )
        )
    if op == "edit_node":
        node_id = payload["id"]
        changes = {k: v for k, v in payload.items() if k != "id"}
        if "word_cloud" in changes and changes["word_cloud"] is not None:
            changes["word_cloud"] = tuple(tuple(entry) for entry in changes["word_cloud"])
        return graph.edit_node(node_id, **changes)
    if op == "remove_node":
        return graph.remove_node(payload["id"])
    if op == "add_edge":
        return graph.add_edge(
            Relation(
                source=payload["source"],
                target=payload["target"],
                kind=payload["kind"],
                level=payload["level"],
            )
        )
    if op == "edit_edge":
        return graph.edit_edge(
            payload["source"], payload["target"], payload["kind"], level=payload["level"]
        )
    if op == "remove_edge":
        return graph.remove_edge(payload["source"], payload["target"], payload["kind"])
    raise ValueError(f"unknown graph op {op!r}")

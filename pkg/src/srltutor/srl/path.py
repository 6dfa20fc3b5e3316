"""Learning paths: milestones over the prerequisite structure of a graph.

A path visits every prerequisite ancestor of the goals before the goals
themselves. Time positions live on a relative [0, 1] scale where the gap in
front of each milestone is proportional to that milestone's importance, so
weighty concepts get more of the learner's budget.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, replace

from ..errors import SrlTutorError
from ..graph import KnowledgeGraph
from ..graph.layout import CyclicGraph

PENDING = "pending"
DONE = "done"
REINFORCE = "reinforce"
STATUSES = (PENDING, DONE, REINFORCE)


class UnknownGoal(SrlTutorError):
    pass


@dataclass(frozen=True)
class Expression:
    """A cached study expression for a milestone (text at a level, weighted)."""

    text: str
    level: int
    importance: float


@dataclass(frozen=True)
class Milestone:
    """One stop on the path; level and importance are copied from the node
    at creation time and do not track later node edits."""

    node_id: str
    level: int
    importance: float
    time_pos: float
    status: str = PENDING
    expressions: tuple[Expression, ...] = ()


def topological_ids(graph: KnowledgeGraph, node_ids: set[str]) -> list[str]:
    """Kahn's order over prerequisite edges restricted to ``node_ids``.

    Among ready nodes the most important goes first, ties by id.
    """
    indegree = {nid: 0 for nid in node_ids}
    children: dict[str, list[str]] = {nid: [] for nid in node_ids}
    for source, target in graph.prerequisite_edges():
        if source in node_ids and target in node_ids:
            indegree[target] += 1
            children[source].append(target)
    ready = [
        (-graph.node(nid).importance, nid) for nid in node_ids if indegree[nid] == 0
    ]
    heapq.heapify(ready)
    order: list[str] = []
    while ready:
        _, nid = heapq.heappop(ready)
        order.append(nid)
        for child in children[nid]:
            indegree[child] -= 1
            if indegree[child] == 0:
                heapq.heappush(ready, (-graph.node(child).importance, child))
    if len(order) != len(node_ids):
        raise CyclicGraph("prerequisite cycle among path nodes")
    return order


def assign_time_pos(milestones: list[Milestone]) -> list[Milestone]:
    """Rescale time positions so gaps track importance and the path ends at 1."""
    total = sum(m.importance for m in milestones)
    out: list[Milestone] = []
    acc = 0.0
    for m in milestones:
        acc += m.importance
        out.append(replace(m, time_pos=acc / total))
    return out


def generate_learning_path(graph: KnowledgeGraph, goals: list[str]) -> list[Milestone]:
    """Milestones for the goals and all their prerequisite ancestors.

    Deterministic: the same graph and goals always yield the same list.
    """
    if not goals:
        raise ValueError("goals must be nonempty")
    for goal in goals:
        if not graph.has_node(goal):
            raise UnknownGoal(f"unknown goal {goal!r}")
    wanted: set[str] = set(goals)
    for goal in goals:
        wanted |= graph.prerequisite_ancestors(goal)
    milestones = []
    for nid in topological_ids(graph, wanted):
        node = graph.node(nid)
        milestones.append(Milestone(nid, node.level, node.importance, 0.0))
    return assign_time_pos(milestones)

"""The three-stage learning loop and its session state.

forethought (set goals, plan the path) → performance (study milestones, take
tests) → self_reflection (revise the path against test results) → back to
performance. Each loop-back starts a new cycle. Sessions are single-writer;
callers that share one across threads must serialize access themselves.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace

from ..errors import SrlTutorError
from ..graph import KnowledgeGraph
from ..graph.model import UnknownNode
from ..levels import LEVEL_COUNT, InvalidLevel, level_histogram
from .path import (
    DONE,
    PENDING,
    REINFORCE,
    Expression,
    Milestone,
    UnknownGoal,
    assign_time_pos,
    generate_learning_path,
    topological_ids,
)

FORETHOUGHT = "forethought"
PERFORMANCE = "performance"
SELF_REFLECTION = "self_reflection"
STAGES = (FORETHOUGHT, PERFORMANCE, SELF_REFLECTION)

_LEGAL_TRANSITIONS = {
    (FORETHOUGHT, PERFORMANCE),
    (PERFORMANCE, SELF_REFLECTION),
    (SELF_REFLECTION, PERFORMANCE),
}

SESSION_FORMAT = "srl-session"
SESSION_VERSION = 1


class IllegalTransition(SrlTutorError):
    pass


class NoProgress(SrlTutorError):
    pass


class WrongStage(SrlTutorError):
    pass


class NoAssessments(SrlTutorError):
    pass


class NoSnapshot(SrlTutorError):
    pass


class BadSessionDocument(SrlTutorError):
    pass


@dataclass(frozen=True)
class AssessmentResult:
    node_id: str
    question_id: str
    chosen: int
    correct: bool
    explanation_shown: bool = False
    option_count: int = 4

    def __post_init__(self) -> None:
        if self.option_count < 2:
            raise ValueError("option_count must be at least 2")
        if not 0 <= self.chosen < self.option_count:
            raise ValueError(
                f"chosen index {self.chosen} outside option count {self.option_count}"
            )


class SrlSession:
    """Mutable session state; all changes go through the module functions."""

    def __init__(
        self,
        id: str,
        graph: KnowledgeGraph,
        clock=time.time,
        graph_version: int = 0,
    ):
        self.id = id
        self.graph = graph
        self.graph_version = graph_version
        self.clock = clock
        self.stage = FORETHOUGHT
        self.cycle = 1
        self.goals: list[tuple[str, int]] = []
        self.path: list[Milestone] = []
        self.assessments: list[AssessmentResult] = []
        self.revised_through = 0
        self.before_snapshot: dict[int, int] | None = None
        now = clock()
        self.created = now
        self.updated = now
        self.stage_log: list[tuple[str, float]] = [(FORETHOUGHT, now)]

    def touch(self) -> None:
        self.updated = self.clock()


def path_histogram(path: list[Milestone]) -> dict[int, int]:
    return level_histogram([m.level for m in path])


def _require_stage(session: SrlSession, stage: str) -> None:
    if session.stage != stage:
        raise WrongStage(f"requires stage {stage}, session is in {session.stage}")


def _require_on_path(session: SrlSession, node_id: str) -> None:
    if not session.graph.has_node(node_id):
        raise UnknownNode(f"unknown node {node_id!r}")
    if not any(m.node_id == node_id for m in session.path):
        raise ValueError(f"node {node_id!r} is not on the learning path")


def plan_path(
    session: SrlSession, goals: list[str | tuple[str, int]]
) -> list[Milestone]:
    """Set goals and generate the milestone path; only legal in forethought.

    A goal is a node id or a (node id, target level) pair; the target level
    defaults to the node's own level.
    """
    _require_stage(session, FORETHOUGHT)
    normalized: list[tuple[str, int]] = []
    for goal in goals:
        node_id, target = goal if isinstance(goal, tuple) else (goal, None)
        if not session.graph.has_node(node_id):
            raise UnknownGoal(f"unknown goal {node_id!r}")
        if target is None:
            target = session.graph.node(node_id).level
        elif not 1 <= target <= LEVEL_COUNT:
            raise InvalidLevel(f"target level {target} outside [1, {LEVEL_COUNT}]")
        normalized.append((node_id, target))
    path = generate_learning_path(session.graph, [nid for nid, _ in normalized])
    session.goals = normalized
    session.path = path
    session.touch()
    return path


def advance_stage(session: SrlSession, to: str) -> SrlSession:
    if to not in STAGES:
        raise IllegalTransition(f"unknown stage {to!r}")
    if (session.stage, to) not in _LEGAL_TRANSITIONS:
        raise IllegalTransition(f"cannot go from {session.stage} to {to}")
    if to == SELF_REFLECTION:
        if not any(m.status == DONE for m in session.path):
            raise NoProgress("no milestone done yet; nothing to reflect on")
        session.before_snapshot = path_histogram(session.path)
    if session.stage == SELF_REFLECTION:
        session.cycle += 1
    session.stage = to
    session.stage_log.append((to, session.clock()))
    session.touch()
    return session


def complete_milestone(session: SrlSession, node_id: str) -> None:
    """Mark every occurrence of a node done; study happens in performance."""
    _require_stage(session, PERFORMANCE)
    _require_on_path(session, node_id)
    session.path = [
        m if m.node_id != node_id else _with_status(m, DONE) for m in session.path
    ]
    session.touch()


def record_assessment(session: SrlSession, result: AssessmentResult) -> None:
    _require_stage(session, PERFORMANCE)
    _require_on_path(session, result.node_id)
    session.assessments.append(result)
    session.touch()


def set_milestone_expressions(
    session: SrlSession, node_id: str, expressions: list[Expression]
) -> None:
    """Cache study expressions on every occurrence of the node."""
    _require_on_path(session, node_id)
    cached = tuple(expressions)
    session.path = [
        m if m.node_id != node_id else _with_expressions(m, cached)
        for m in session.path
    ]
    session.touch()


def revise_learning_path(session: SrlSession) -> list[Milestone]:
    """Fold the current cycle's test results back into the path.

    All-correct nodes become done. Each wrong node turns reinforce and gets a
    fresh occurrence appended after the remaining pending milestones, along
    with any prerequisite ancestors that are neither done nor scheduled yet.
    """
    _require_stage(session, SELF_REFLECTION)
    results = session.assessments[session.revised_through :]
    if not results:
        raise NoAssessments("no assessment recorded this cycle")
    graph = session.graph
    wrong = {r.node_id for r in results if not r.correct}
    right = {r.node_id for r in results if r.correct} - wrong

    path: list[Milestone] = []
    for m in session.path:
        if m.node_id in wrong:
            path.append(_with_status(m, REINFORCE))
        elif m.node_id in right:
            path.append(_with_status(m, DONE))
        else:
            path.append(m)

    present = {m.node_id for m in path}
    extra: set[str] = set()
    for nid in wrong:
        for anc in graph.prerequisite_ancestors(nid):
            if anc not in present and anc not in wrong:
                extra.add(anc)
    for nid in topological_ids(graph, wrong | extra):
        node = graph.node(nid)
        status = REINFORCE if nid in wrong else PENDING
        path.append(Milestone(nid, node.level, node.importance, 0.0, status))

    session.path = assign_time_pos(path)
    session.revised_through = len(session.assessments)
    session.touch()
    return session.path


def path_stats(session: SrlSession) -> tuple[dict[int, int], dict[int, int]]:
    """(histogram at self_reflection entry, histogram now)."""
    if session.before_snapshot is None:
        raise NoSnapshot("no self_reflection entry has been recorded")
    return dict(session.before_snapshot), path_histogram(session.path)


def _with_status(m: Milestone, status: str) -> Milestone:
    return replace(m, status=status)


def _with_expressions(m: Milestone, expressions: tuple[Expression, ...]) -> Milestone:
    return replace(m, expressions=expressions)


# --- session documents -----------------------------------------------------

def session_to_document(session: SrlSession) -> dict:
    return {
        "format": SESSION_FORMAT,
        "version": SESSION_VERSION,
        "id": session.id,
        "graph_version": session.graph_version,
        "stage": session.stage,
        "cycle": session.cycle,
        "created": session.created,
        "updated": session.updated,
        "goals": [{"node": nid, "target_level": t} for nid, t in session.goals],
        "path": [_milestone_to_dict(m) for m in session.path],
        "assessments": [_assessment_to_dict(r) for r in session.assessments],
        "revised_through": session.revised_through,
        "stage_log": [{"stage": s, "ts": ts} for s, ts in session.stage_log],
        "before_snapshot": (
            None
            if session.before_snapshot is None
            else {str(k): v for k, v in sorted(session.before_snapshot.items())}
        ),
    }


def session_from_document(
    document: dict, graph: KnowledgeGraph, clock=time.time
) -> SrlSession:
    if document.get("format") != SESSION_FORMAT:
        raise BadSessionDocument(f"not a {SESSION_FORMAT} document")
    if document.get("version") != SESSION_VERSION:
        raise BadSessionDocument(f"unsupported version {document.get('version')!r}")
    try:
        session = SrlSession(
            document["id"], graph, clock=clock, graph_version=document["graph_version"]
        )
        stage = document["stage"]
        if stage not in STAGES:
            raise BadSessionDocument(f"unknown stage {stage!r}")
        session.stage = stage
        session.cycle = document["cycle"]
        session.created = document["created"]
        session.updated = document["updated"]
        session.goals = [(g["node"], g["target_level"]) for g in document["goals"]]
        session.path = [_milestone_from_dict(m) for m in document["path"]]
        session.assessments = [
            _assessment_from_dict(r) for r in document["assessments"]
        ]
        session.revised_through = document["revised_through"]
        session.stage_log = [(e["stage"], e["ts"]) for e in document["stage_log"]]
        snapshot = document["before_snapshot"]
        session.before_snapshot = (
            None if snapshot is None else {int(k): v for k, v in snapshot.items()}
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise BadSessionDocument(f"invalid session document: {exc}") from exc
    for nid, _ in session.goals:
        if not graph.has_node(nid):
            raise BadSessionDocument(f"goal references unknown node {nid!r}")
    for m in session.path:
        if not graph.has_node(m.node_id):
            raise BadSessionDocument(f"path references unknown node {m.node_id!r}")
    return session


def _milestone_to_dict(m: Milestone) -> dict:
    return {
        "node": m.node_id,
        "level": m.level,
        "importance": m.importance,
        "time_pos": m.time_pos,
        "status": m.status,
        "expressions": [
            {"text": e.text, "level": e.level, "importance": e.importance}
            for e in m.expressions
        ],
    }


def _milestone_from_dict(data: dict) -> Milestone:
    if data["status"] not in (PENDING, DONE, REINFORCE):
        raise BadSessionDocument(f"unknown milestone status {data['status']!r}")
    return Milestone(
        node_id=data["node"],
        level=data["level"],
        importance=data["importance"],
        time_pos=data["time_pos"],
        status=data["status"],
        expressions=tuple(
            Expression(e["text"], e["level"], e["importance"])
            for e in data["expressions"]
        ),
    )


def _assessment_to_dict(r: AssessmentResult) -> dict:
    return {
        "node": r.node_id,
        "question_id": r.question_id,
        "chosen": r.chosen,
        "correct": r.correct,
        "explanation_shown": r.explanation_shown,
        "option_count": r.option_count,
    }


def _assessment_from_dict(data: dict) -> AssessmentResult:
    return AssessmentResult(
        node_id=data["node"],
        question_id=data["question_id"],
        chosen=data["chosen"],
        correct=data["correct"],
        explanation_shown=data["explanation_shown"],
        option_count=data["option_count"],
    )

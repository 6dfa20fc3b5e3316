"""Self-regulated learning: stage machine, learning paths, path revision."""

from .path import (
    DONE,
    PENDING,
    REINFORCE,
    STATUSES,
    Expression,
    Milestone,
    UnknownGoal,
    assign_time_pos,
    generate_learning_path,
    topological_ids,
)
from .session import (
    FORETHOUGHT,
    PERFORMANCE,
    SELF_REFLECTION,
    SESSION_FORMAT,
    SESSION_VERSION,
    STAGES,
    AssessmentResult,
    BadSessionDocument,
    IllegalTransition,
    NoAssessments,
    NoProgress,
    NoSnapshot,
    SrlSession,
    WrongStage,
    advance_stage,
    complete_milestone,
    path_histogram,
    path_stats,
    plan_path,
    record_assessment,
    revise_learning_path,
    session_from_document,
    session_to_document,
    set_milestone_expressions,
)

__all__ = [
    "DONE",
    "FORETHOUGHT",
    "PENDING",
    "PERFORMANCE",
    "REINFORCE",
    "SELF_REFLECTION",
    "SESSION_FORMAT",
    "SESSION_VERSION",
    "STAGES",
    "STATUSES",
    "AssessmentResult",
    "BadSessionDocument",
    "Expression",
    "IllegalTransition",
    "Milestone",
    "NoAssessments",
    "NoProgress",
    "NoSnapshot",
    "SrlSession",
    "UnknownGoal",
    "WrongStage",
    "advance_stage",
    "assign_time_pos",
    "complete_milestone",
    "generate_learning_path",
    "path_histogram",
    "path_stats",
    "plan_path",
    "record_assessment",
    "revise_learning_path",
    "session_from_document",
    "session_to_document",
    "set_milestone_expressions",
    "topological_ids",
]

"""Judge-based evaluation: testset building, scoring runs, aggregate reports."""

from .aggregate import (
    CRITERIA,
    CriterionStats,
    EmptyScores,
    EvalReport,
    ModelStats,
    aggregate_scores,
)
from .io import IoError, ParseError, load_scores, load_testset, save_scores, save_testset
from .report import FORMATS, emit_report
from .runner import JudgeParseFailure, JudgeScore, run_evaluation
from .testset import (
    DEFAULT_SUBDOMAINS,
    DEFAULT_TASKS,
    DIFFICULTY_COUNT,
    SUBDOMAIN_COUNT,
    TASK_COUNT,
    BadTestset,
    EvalItem,
    LabelCountMismatch,
    build_testset_skeleton,
    item_key,
    validate_testset,
)

__all__ = [
    "BadTestset",
    "CRITERIA",
    "CriterionStats",
    "DEFAULT_SUBDOMAINS",
    "DEFAULT_TASKS",
    "DIFFICULTY_COUNT",
    "EmptyScores",
    "EvalItem",
    "EvalReport",
    "FORMATS",
    "IoError",
    "JudgeParseFailure",
    "JudgeScore",
    "LabelCountMismatch",
    "ModelStats",
    "ParseError",
    "SUBDOMAIN_COUNT",
    "TASK_COUNT",
    "aggregate_scores",
    "build_testset_skeleton",
    "emit_report",
    "item_key",
    "load_scores",
    "load_testset",
    "run_evaluation",
    "save_scores",
    "save_testset",
    "validate_testset",
]

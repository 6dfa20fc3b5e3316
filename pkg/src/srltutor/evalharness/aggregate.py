"""Score aggregation: per-item round averages, then per-model criterion stats."""

from __future__ import annotations

import statistics
from dataclasses import dataclass

from ..errors import SrlTutorError
from .runner import JudgeScore

CRITERIA = ("accuracy", "completeness", "clarity")


class EmptyScores(SrlTutorError):
    pass


@dataclass(frozen=True)
class CriterionStats:
    mean: float
    std: float
    items: int
    degenerate: bool = False  # single item: std undefined, reported as 0.0


@dataclass(frozen=True)
class ModelStats:
    model: str
    accuracy: CriterionStats
    completeness: CriterionStats
    clarity: CriterionStats
    average: float

    def criterion(self, name: str) -> CriterionStats:
        return getattr(self, name)


@dataclass(frozen=True)
class EvalReport:
    rows: tuple[ModelStats, ...]
    estimator: str = "sample"


def _spread(values: list[float], estimator: str) -> tuple[float, bool]:
    if len(values) == 1:
        return 0.0, True
    if estimator == "population":
        return statistics.pstdev(values), False
    return statistics.stdev(values), False


def aggregate_scores(scores: list[JudgeScore], estimator: str = "sample") -> EvalReport:
    """Mean and spread per (model, criterion); item score = mean over rounds."""
    if estimator not in ("sample", "population"):
        raise ValueError(f"unknown estimator {estimator!r}")
    if not scores:
        raise EmptyScores("no scores to aggregate")

    # model -> item -> rounds, keyed in first-seen order
    per_model: dict[str, dict[str, list[JudgeScore]]] = {}
    for score in scores:
        per_model.setdefault(score.model, {}).setdefault(score.item, []).append(score)

    rows = []
    for model, items in per_model.items():
        stats: dict[str, CriterionStats] = {}
        for criterion in CRITERIA:
            item_means = [
                statistics.mean(getattr(s, criterion) for s in rounds)
                for rounds in items.values()
            ]
            std, degenerate = _spread(item_means, estimator)
            stats[criterion] = CriterionStats(
                statistics.mean(item_means), std, len(item_means), degenerate
            )
        average = statistics.mean(stats[c].mean for c in CRITERIA)
        rows.append(ModelStats(model, stats["accuracy"], stats["completeness"], stats["clarity"], average))
    return EvalReport(tuple(rows), estimator)

"""Eight-level learning taxonomy ordered from basic to advanced.

The default labels extend Bloom-style cognitive categories to eight steps;
deployments may swap in their own labels, but there are always exactly
eight and their order is total.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SrlTutorError

LEVEL_COUNT = 8

DEFAULT_LEVEL_LABELS: tuple[str, ...] = (
    "recall",
    "comprehension",
    "application",
    "analysis",
    "synthesis",
    "evaluation",
    "transfer",
    "creation",
)


class InvalidLevel(SrlTutorError):
    pass


class InvalidTaxonomy(SrlTutorError):
    pass


@dataclass(frozen=True, order=True)
class LearningLevel:
    """One rung of the taxonomy; ordering follows ``index`` (1 = most basic)."""

    index: int
    label: str = ""

    def __post_init__(self) -> None:
        if not 1 <= self.index <= LEVEL_COUNT:
            raise InvalidLevel(f"level index {self.index} outside [1, {LEVEL_COUNT}]")


class LevelTaxonomy:
    """An ordered set of exactly eight labelled levels."""

    def __init__(self, labels: tuple[str, ...] | list[str] = DEFAULT_LEVEL_LABELS):
        labels = tuple(labels)
        if len(labels) != LEVEL_COUNT:
            raise InvalidTaxonomy(f"taxonomy needs {LEVEL_COUNT} labels, got {len(labels)}")
        if len(set(labels)) != LEVEL_COUNT:
            raise InvalidTaxonomy("taxonomy labels must be distinct")
        if not all(label.strip() for label in labels):
            raise InvalidTaxonomy("taxonomy labels must be nonempty")
        self.labels = labels

    def level(self, index: int) -> LearningLevel:
        if not 1 <= index <= LEVEL_COUNT:
            raise InvalidLevel(f"level index {index} outside [1, {LEVEL_COUNT}]")
        return LearningLevel(index, self.labels[index - 1])

    def levels(self) -> list[LearningLevel]:
        return [self.level(i) for i in range(1, LEVEL_COUNT + 1)]

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label) + 1
        except ValueError:
            raise InvalidLevel(f"unknown level label {label!r}") from None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LevelTaxonomy) and self.labels == other.labels

    def __repr__(self) -> str:
        return f"LevelTaxonomy({self.labels!r})"


def level_histogram(levels: list[int]) -> dict[int, int]:
    """Count occurrences per level index; absent levels map to 0."""
    counts = {i: 0 for i in range(1, LEVEL_COUNT + 1)}
    for idx in levels:
        if not 1 <= idx <= LEVEL_COUNT:
            raise InvalidLevel(f"level index {idx} outside [1, {LEVEL_COUNT}]")
        counts[idx] += 1
    return counts

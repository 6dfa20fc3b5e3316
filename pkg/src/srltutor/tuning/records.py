"""Tuning dataset records: schema, validation, composition statistics."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from ..gateway import (
    SCENARIOS,
    SECTION_MARKERS,
    ChatTurn,
    MalformedReply,
    WrongScenario,
    parse_structured_reply,
    validate_conversation,
)
from ..gateway.provider import BadConversation
from ..levels import LEVEL_COUNT

SCENARIO_VERSION = 1


@dataclass(frozen=True)
class CorpusUnit:
    id: str
    text: str
    topic_tags: tuple[str, ...] = ()
    seed_dialogue: tuple[ChatTurn, ...] = ()

    def __post_init__(self) -> None:
        if not self.text.strip():
            raise ValueError(f"corpus unit {self.id!r} has empty text")


@dataclass(frozen=True)
class TuningRecord:
    scenario: str
    messages: tuple[ChatTurn, ...]
    meta: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ValidationReport:
    total: int
    by_scenario: dict[str, int]
    invalid: list[tuple[int, str]]
    duplicate_groups: list[list[int]]

    def clean(self) -> bool:
        return not self.invalid and not self.duplicate_groups

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "by_scenario": dict(self.by_scenario),
            "invalid": [{"index": i, "reason": r} for i, r in self.invalid],
            "duplicate_groups": [list(g) for g in self.duplicate_groups],
        }


def validate_record(record: TuningRecord) -> list[str]:
    """All invariant violations of one record, empty when it is well formed."""
    reasons: list[str] = []
    if record.scenario not in SCENARIOS:
        reasons.append(f"unknown scenario {record.scenario!r}")
        return reasons
    if not record.messages:
        reasons.append("no messages")
        return reasons
    if record.messages[-1].role != "assistant":
        reasons.append("last turn not assistant")
    try:
        validate_conversation(record.messages)
    except BadConversation as exc:
        reasons.append(str(exc))
    if reasons:
        return reasons

    final = record.messages[-1].content
    if record.scenario == "open_ended_qa":
        for marker in SECTION_MARKERS:
            if marker not in final:
                reasons.append(f"missing section {marker}")
    elif record.scenario == "tests_and_answers":
        turns = sum(1 for t in record.messages if t.role != "system")
        if turns < 3:
            reasons.append(f"only {turns} dialogue turns, need at least 3")
    else:
        try:
            parse_structured_reply(final, record.scenario)
        except (MalformedReply, WrongScenario) as exc:
            reasons.append(f"assistant turn not parseable: {exc}")

    meta = record.meta
    if not isinstance(meta.get("source"), str) or not meta["source"]:
        reasons.append("meta.source missing")
    if meta.get("version") != SCENARIO_VERSION:
        reasons.append(f"meta.version is {meta.get('version')!r}")
    levels = meta.get("levels")
    if not isinstance(levels, list) or any(
        not isinstance(lv, int) or not 1 <= lv <= LEVEL_COUNT for lv in levels
    ):
        reasons.append("meta.levels invalid")
    points = meta.get("knowledge_points")
    if not isinstance(points, list) or any(not isinstance(p, str) for p in points):
        reasons.append("meta.knowledge_points invalid")
    return reasons


def message_hash(record: TuningRecord) -> str:
    payload = json.dumps(
        [[t.role, t.content] for t in record.messages], ensure_ascii=False
    )
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def validate_dataset(records: list[TuningRecord]) -> ValidationReport:
    by_scenario = {scenario: 0 for scenario in SCENARIOS}
    invalid: list[tuple[int, str]] = []
    groups: dict[str, list[int]] = {}
    for index, record in enumerate(records):
        if record.scenario in by_scenario:
            by_scenario[record.scenario] += 1
        for reason in validate_record(record):
            invalid.append((index, reason))
        groups.setdefault(message_hash(record), []).append(index)
    duplicates = sorted(
        [indices for indices in groups.values() if len(indices) > 1],
        key=lambda g: g[0],
    )
    return ValidationReport(len(records), by_scenario, invalid, duplicates)


def dataset_stats(records: list[TuningRecord]) -> dict:
    """Scenario counts (summing to the total) and a level coverage histogram."""
    by_scenario = {scenario: 0 for scenario in SCENARIOS}
    coverage = {level: 0 for level in range(1, LEVEL_COUNT + 1)}
    other = 0
    for record in records:
        if record.scenario in by_scenario:
            by_scenario[record.scenario] += 1
        else:
            other += 1
        for level in record.meta.get("levels", []):
            if isinstance(level, int) and 1 <= level <= LEVEL_COUNT:
                coverage[level] += 1
    stats = {
        "total": len(records),
        "by_scenario": by_scenario,
        "level_coverage": coverage,
    }
    if other:
        stats["unknown_scenario"] = other
    return stats

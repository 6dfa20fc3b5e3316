"""Parsing of model replies: prose sections and the structured-v1 block.

The block grammar (docs/machine-block-v1.md): a fenced code block whose info
string is ``structured-v1``; every nonblank line inside is one JSON object
with a string "type" field. Unknown types and unknown fields are ignored so
newer models can emit more than older code understands.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..errors import SrlTutorError
from .prompts import (
    BLOCK_CLOSE,
    BLOCK_OPEN,
    OPEN_ENDED_QA,
    QUESTION_RECOMMENDATION,
    RELATION_EXTRACTION,
    SCENARIOS,
    SECTION_MARKERS,
    TESTS_AND_ANSWERS,
)

SECTION_KEYS = ("interpretation", "key_points", "example", "summary")

_MARKER_TO_KEY = dict(zip(SECTION_MARKERS, SECTION_KEYS))

# Record types the current grammar understands. Anything else is skipped.
KNOWN_RECORD_TYPES = frozenset(
    {"relation", "question", "mcq", "scores", "tree_node", "card"}
)


class MalformedReply(SrlTutorError):
    """The reply cannot be consumed: bad block syntax or invalid records."""


class WrongScenario(SrlTutorError):
    """The reply is well formed but answers a different scenario."""


@dataclass(frozen=True)
class StructuredReply:
    scenario: str
    sections: dict[str, str] = field(default_factory=dict)
    relations: list[dict] = field(default_factory=list)
    questions: list[tuple[int, str]] = field(default_factory=list)
    mcq: dict | None = None
    raw: str = ""


def machine_records(text: str) -> list[dict]:
    """Return the JSON records of the first structured-v1 block, in order.

    No block at all yields []. A block that opens but never closes, or any
    nonblank line that is not a JSON object with a string "type", raises
    MalformedReply.
    """
    lines = text.splitlines()
    start = None
    for i, line in enumerate(lines):
        if line.strip() == BLOCK_OPEN:
            start = i + 1
            break
    if start is None:
        return []
    records: list[dict] = []
    for n, line in enumerate(lines[start:], start=start + 1):
        if line.strip() == BLOCK_CLOSE:
            return records
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise MalformedReply(f"line {n}: invalid JSON ({exc.msg})") from exc
        if not isinstance(obj, dict):
            raise MalformedReply(f"line {n}: record is not a JSON object")
        if not isinstance(obj.get("type"), str):
            raise MalformedReply(f"line {n}: record has no string 'type'")
        records.append(obj)
    raise MalformedReply("unterminated structured-v1 block")


def split_answer_sections(text: str) -> dict[str, str]:
    """Map the four answer markers to their prose; absent sections are omitted."""
    sections: dict[str, str] = {}
    current: str | None = None
    buffer: list[str] = []

    def flush() -> None:
        if current is not None:
            body = "\n".join(buffer).strip()
            if body:
                sections[current] = body

    for line in text.splitlines():
        stripped = line.strip()
        if stripped == BLOCK_OPEN:
            break
        marker = next((m for m in SECTION_MARKERS if stripped.startswith(m)), None)
        if marker is not None:
            flush()
            current = _MARKER_TO_KEY[marker]
            buffer = [stripped[len(marker):].strip()]
        elif current is not None:
            buffer.append(line)
    flush()
    return sections


def _clean_relation(record: dict) -> dict:
    for key in ("source", "target", "kind"):
        value = record.get(key)
        if not isinstance(value, str) or not value.strip():
            raise MalformedReply(f"relation record needs a nonempty {key!r}")
    level = record.get("level")
    if not isinstance(level, int) or isinstance(level, bool) or not 1 <= level <= 8:
        raise MalformedReply("relation record needs an integer level in 1..8")
    return {
        "source": record["source"].strip(),
        "target": record["target"].strip(),
        "kind": record["kind"].strip(),
        "level": level,
    }


def _clean_question(record: dict) -> tuple[int, str]:
    level = record.get("level")
    if not isinstance(level, int) or isinstance(level, bool) or not 1 <= level <= 8:
        raise MalformedReply("question record needs an integer level in 1..8")
    text = record.get("text")
    if not isinstance(text, str) or not text.strip():
        raise MalformedReply("question record needs nonempty text")
    return level, text.strip()


def _clean_mcq(record: dict) -> dict:
    question = record.get("question")
    if not isinstance(question, str) or not question.strip():
        raise MalformedReply("mcq record needs a nonempty question")
    options = record.get("options")
    if not isinstance(options, list) or len(options) != 4:
        raise MalformedReply("mcq record needs exactly 4 options")
    if not all(isinstance(o, str) and o.strip() for o in options):
        raise MalformedReply("mcq options must be nonempty strings")
    correct = record.get("correct")
    if not isinstance(correct, int) or isinstance(correct, bool) or not 0 <= correct <= 3:
        raise MalformedReply("mcq record needs an integer correct index in 0..3")
    explanation = record.get("explanation")
    if not isinstance(explanation, str) or not explanation.strip():
        raise MalformedReply("mcq record needs a nonempty explanation")
    return {
        "question": question.strip(),
        "options": [o.strip() for o in options],
        "correct": correct,
        "explanation": explanation.strip(),
    }


def parse_structured_reply(text: str, scenario: str) -> StructuredReply:
    """Parse a model reply against the expectations of one scenario.

    MalformedReply means the reply is unusable; WrongScenario means it looks
    like a valid reply to one of the other scenarios.
    """
    if scenario not in SCENARIOS:
        raise ValueError(f"unknown scenario {scenario!r}")
    records = machine_records(text)
    by_type: dict[str, list[dict]] = {}
    for record in records:
        by_type.setdefault(record["type"], []).append(record)

    def other_types(wanted: str) -> bool:
        return any(t != wanted and t in KNOWN_RECORD_TYPES for t in by_type)

    if scenario == OPEN_ENDED_QA:
        sections = split_answer_sections(text)
        if not sections:
            if by_type:
                raise WrongScenario("records present but no answer sections")
            raise MalformedReply("no answer sections found")
        relations = [_clean_relation(r) for r in by_type.get("relation", [])]
        return StructuredReply(scenario, sections=sections, relations=relations, raw=text)

    if scenario == RELATION_EXTRACTION:
        raw_relations = by_type.get("relation", [])
        if not raw_relations:
            if other_types("relation"):
                raise WrongScenario("no relation records in reply")
            raise MalformedReply("no relation records in reply")
        return StructuredReply(
            scenario, relations=[_clean_relation(r) for r in raw_relations], raw=text
        )

    if scenario == QUESTION_RECOMMENDATION:
        raw_questions = by_type.get("question", [])
        if not raw_questions:
            if other_types("question"):
                raise WrongScenario("no question records in reply")
            raise MalformedReply("no question records in reply")
        return StructuredReply(
            scenario, questions=[_clean_question(r) for r in raw_questions], raw=text
        )

    raw_mcqs = by_type.get("mcq", [])
    if not raw_mcqs:
        if other_types("mcq"):
            raise WrongScenario("no mcq record in reply")
        raise MalformedReply("no mcq record in reply")
    if len(raw_mcqs) > 1:
        raise MalformedReply("expected exactly one mcq record")
    return StructuredReply(scenario, mcq=_clean_mcq(raw_mcqs[0]), raw=text)


def parse_score_block(text: str) -> tuple[float, float, float]:
    """Extract (accuracy, completeness, clarity) from a judge reply.

    Values are clamped to [0, 5]; the first scores record wins.
    """
    records = machine_records(text)
    for record in records:
        if record["type"] != "scores":
            continue
        values = []
        for key in ("accuracy", "completeness", "clarity"):
            value = record.get(key)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise MalformedReply(f"scores record needs a numeric {key!r}")
            values.append(min(5.0, max(0.0, float(value))))
        return tuple(values)
    raise MalformedReply("no scores record in reply")

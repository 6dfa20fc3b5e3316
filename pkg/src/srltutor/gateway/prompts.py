"""Deterministic prompt templates for the four tutoring scenarios.

Every template that expects structured output instructs the model to emit a
fenced ``structured-v1`` block (one JSON record per line); the block grammar
is documented in docs/machine-block-v1.md. Rendering is a pure function of
(scenario, context): the same inputs always produce the same turns.
"""

from __future__ import annotations

from ..errors import SrlTutorError
from ..levels import DEFAULT_LEVEL_LABELS
from .provider import ChatTurn

OPEN_ENDED_QA = "open_ended_qa"
RELATION_EXTRACTION = "relation_extraction"
TESTS_AND_ANSWERS = "tests_and_answers"
QUESTION_RECOMMENDATION = "question_recommendation"

SCENARIOS = (OPEN_ENDED_QA, RELATION_EXTRACTION, TESTS_AND_ANSWERS, QUESTION_RECOMMENDATION)

BLOCK_OPEN = "```structured-v1"
BLOCK_CLOSE = "```"

SECTION_MARKERS = ("[Interpretation]", "[Key Points]", "[Example]", "[Summary]")

DEFAULT_CONNECTIVES = (
    "For instance",
    "For example",
    "In summary",
    "First",
    "Second",
    "Therefore",
    "In contrast",
    "As a result",
)


class MissingContextField(SrlTutorError):
    def __init__(self, name: str):
        super().__init__(f"missing context field {name!r}")
        self.name = name


def _require(context: dict, name: str) -> str:
    value = context.get(name)
    if value is None or (isinstance(value, str) and not value.strip()):
        raise MissingContextField(name)
    return value


def _level_lines(labels: tuple[str, ...], indices: list[int]) -> str:
    return "\n".join(f"  {i}. {labels[i - 1]}" for i in indices)


def render_prompt(scenario: str, context: dict) -> list[ChatTurn]:
    if scenario == OPEN_ENDED_QA:
        return _render_open_ended_qa(context)
    if scenario == RELATION_EXTRACTION:
        return _render_relation_extraction(context)
    if scenario == TESTS_AND_ANSWERS:
        return _render_tests_and_answers(context)
    if scenario == QUESTION_RECOMMENDATION:
        return _render_question_recommendation(context)
    raise ValueError(f"unknown scenario {scenario!r}")


def _render_open_ended_qa(context: dict) -> list[ChatTurn]:
    question = _require(context, "question")
    system = (
        "You are a patient tutor for beginners. Answer the learner's question in four parts, "
        "each introduced by its marker on its own line:\n"
        f"{SECTION_MARKERS[0]} restate what the question is really asking.\n"
        f"{SECTION_MARKERS[1]} explain the key concepts involved.\n"
        f"{SECTION_MARKERS[2]} give one concrete worked example (start it with 'For instance').\n"
        f"{SECTION_MARKERS[3]} wrap up in two sentences (start with 'In summary').\n"
        "After the prose, emit related-concept suggestions as a fenced block:\n"
        f"{BLOCK_OPEN}\n"
        '{"type": "relation", "source": "<concept>", "target": "<concept>", '
        '"kind": "<prerequisite|part_of|applies_to|contrasts_with>", "level": <1-8>}\n'
        f"{BLOCK_CLOSE}\n"
        "One JSON record per line; emit at most five relations."
    )
    user = question
    material = context.get("material")
    if material:
        user = f"{question}\n\nRelevant material:\n{material}"
    return [ChatTurn("system", system), ChatTurn("user", user)]


def _render_relation_extraction(context: dict) -> list[ChatTurn]:
    text = _require(context, "text")
    system = (
        "Extract the relationships between the concepts mentioned in the given text. "
        "Reply with only a fenced block of JSON records, one per line:\n"
        f"{BLOCK_OPEN}\n"
        '{"type": "relation", "source": "<concept>", "target": "<concept>", '
        '"kind": "<prerequisite|part_of|applies_to|contrasts_with>", "level": <1-8>}\n'
        f"{BLOCK_CLOSE}\n"
        "Use level for the learning level at which the relationship matters."
    )
    return [ChatTurn("system", system), ChatTurn("user", text)]


def _render_tests_and_answers(context: dict) -> list[ChatTurn]:
    node_name = _require(context, "node_name")
    labels = tuple(context.get("taxonomy") or DEFAULT_LEVEL_LABELS)
    level = context.get("level")
    level_hint = f" at the '{labels[level - 1]}' level" if level else ""
    system = (
        "Write one multiple-choice question checking the learner's understanding"
        f"{level_hint}. The question must have exactly 4 options with one correct answer, "
        "plus a short explanation of why it is correct. "
        "Reply with only a fenced block containing one JSON record:\n"
        f"{BLOCK_OPEN}\n"
        '{"type": "mcq", "question": "<text>", "options": ["<a>", "<b>", "<c>", "<d>"], '
        '"correct": <0-3>, "explanation": "<text>"}\n'
        f"{BLOCK_CLOSE}"
    )
    user = f"Topic: {node_name}"
    goal = context.get("goal")
    if goal:
        user += f"\nLearning goal: {goal}"
    return [ChatTurn("system", system), ChatTurn("user", user)]


def _render_question_recommendation(context: dict) -> list[ChatTurn]:
    node_name = _require(context, "node_name")
    labels = tuple(context.get("taxonomy") or DEFAULT_LEVEL_LABELS)
    indices = list(context.get("levels") or range(1, 9))
    system = (
        "Recommend one study question about the given concept for each of the requested "
        "learning levels. The eight learning levels, from basic to advanced, are:\n"
        f"{_level_lines(labels, list(range(1, 9)))}\n"
        "Reply with only a fenced block of JSON records, one per line:\n"
        f"{BLOCK_OPEN}\n"
        '{"type": "question", "level": <1-8>, "text": "<question>"}\n'
        f"{BLOCK_CLOSE}"
    )
    user = (
        f"Concept: {node_name}\n"
        f"Requested levels: {', '.join(str(i) for i in indices)}"
    )
    salt = context.get("salt")
    if salt:
        user += f"\nVariation: {salt}"
    return [ChatTurn("system", system), ChatTurn("user", user)]


def render_tree_extraction_prompt(title: str, body: str) -> list[ChatTurn]:
    """Prompt asking for the document's concept hierarchy as flat parent records."""
    system = (
        "Read the learning material and extract its knowledge structure as a tree of "
        "concepts. Reply with only a fenced block of JSON records, one per line, parents "
        "always listed before their children:\n"
        f"{BLOCK_OPEN}\n"
        '{"type": "tree_node", "name": "<concept>", "parent": "<parent concept or empty for roots>", '
        '"level": <1-8>, "importance": <0-1>, "span": [<start byte>, <end byte>]}\n'
        f"{BLOCK_CLOSE}\n"
        "level and importance may be omitted when unsure; span is optional and refers to "
        "the UTF-8 byte range of the supporting passage."
    )
    user = f"Title: {title}\n\n{body}"
    return [ChatTurn("system", system), ChatTurn("user", user)]


def render_card_prompt(node_name: str, title: str) -> list[ChatTurn]:
    """Prompt for a knowledge card: why a concept matters and where it is applied."""
    system = (
        "Write a knowledge card for the concept in the context of the named material. "
        "Reply with only a fenced block containing one JSON record:\n"
        f"{BLOCK_OPEN}\n"
        '{"type": "card", "name": "<concept>", "significance": "<why it matters here>", '
        '"application": "<where it is used>"}\n'
        f"{BLOCK_CLOSE}"
    )
    user = f"Concept: {node_name}\nMaterial: {title}"
    return [ChatTurn("system", system), ChatTurn("user", user)]


def render_judge_prompt(question: str, reference: str, candidate: str) -> list[ChatTurn]:
    """Blind scoring prompt: the candidate's origin is never disclosed."""
    system = (
        "You are an impartial referee grading an answer to a domain question. "
        "Score three criteria from 0 to 5 (decimals allowed):\n"
        "  accuracy: agreement with the reference answer in content, semantics and structure.\n"
        "  completeness: no relevant detail of the reference is missing.\n"
        "  clarity: logical coherence and clear expression.\n"
        "Do not reward length for its own sake. "
        "After a one-sentence justification, emit the scores as a fenced block:\n"
        f"{BLOCK_OPEN}\n"
        '{"type": "scores", "accuracy": <0-5>, "completeness": <0-5>, "clarity": <0-5>}\n'
        f"{BLOCK_CLOSE}"
    )
    user = (
        f"Question:\n{question}\n\n"
        f"Reference answer (ground truth):\n{reference}\n\n"
        f"Candidate answer:\n{candidate}"
    )
    return [ChatTurn("system", system), ChatTurn("user", user)]

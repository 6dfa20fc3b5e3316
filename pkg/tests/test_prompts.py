"""Prompt rendering is pure and stable; goldens pin the exact wording."""

from __future__ import annotations

from pathlib import Path

import pytest

from srltutor.gateway import (
    SCENARIOS,
    SECTION_MARKERS,
    ChatTurn,
    MissingContextField,
    render_card_prompt,
    render_judge_prompt,
    render_prompt,
    render_tree_extraction_prompt,
)
from srltutor.levels import DEFAULT_LEVEL_LABELS

GOLDEN_DIR = Path(__file__).parent / "data" / "goldens"


def render_text(turns: list[ChatTurn]) -> str:
    return "\n".join(f"### {t.role}\n{t.content}" for t in turns) + "\n"


CASES = {
    "open_ended_qa": lambda: render_prompt(
        "open_ended_qa",
        {
            "question": "Why does gradient descent need a learning rate?",
            "material": "Notes: the step size scales the gradient.",
        },
    ),
    "relation_extraction": lambda: render_prompt(
        "relation_extraction",
        {"text": "Attention builds on dot products; softmax normalises the weights."},
    ),
    "tests_and_answers": lambda: render_prompt(
        "tests_and_answers",
        {"node_name": "softmax", "level": 3, "goal": "read transformer papers"},
    ),
    "question_recommendation": lambda: render_prompt(
        "question_recommendation",
        {"node_name": "backpropagation", "levels": [2, 5], "salt": "set B"},
    ),
    "tree_extraction": lambda: render_tree_extraction_prompt(
        "Linear Algebra Notes", "Vectors and matrices.\nDeterminants and eigenvalues."
    ),
    "card": lambda: render_card_prompt("eigenvalue", "Linear Algebra Notes"),
    "judge": lambda: render_judge_prompt(
        "What is overfitting?",
        "Overfitting is fitting noise in the training data, hurting generalisation.",
        "It memorises the training set.",
    ),
}


@pytest.mark.parametrize("name", sorted(CASES))
def test_prompt_matches_golden(name):
    golden = (GOLDEN_DIR / f"{name}.txt").read_text(encoding="utf-8")
    assert render_text(CASES[name]()) == golden


@pytest.mark.parametrize("name", sorted(CASES))
def test_prompt_rendering_is_deterministic(name):
    assert CASES[name]() == CASES[name]()


def test_every_prompt_is_system_then_user():
    for name in sorted(CASES):
        roles = [t.role for t in CASES[name]()]
        assert roles == ["system", "user"]


def test_open_qa_instructs_all_four_markers():
    system = CASES["open_ended_qa"]()[0].content
    for marker in SECTION_MARKERS:
        assert marker in system


def test_question_recommendation_enumerates_all_levels():
    system = CASES["question_recommendation"]()[0].content
    for label in DEFAULT_LEVEL_LABELS:
        assert label in system
    user = CASES["question_recommendation"]()[1].content
    assert "Requested levels: 2, 5" in user
    assert "set B" in user


def test_custom_taxonomy_labels_are_used():
    labels = tuple(f"tier{i}" for i in range(8))
    turns = render_prompt(
        "question_recommendation", {"node_name": "x", "taxonomy": labels}
    )
    for label in labels:
        assert label in turns[0].content


def test_structured_block_requested_where_records_are_expected():
    for name in sorted(CASES):
        system = CASES[name]()[0].content
        assert "structured-v1" in system


def test_judge_prompt_carries_rubric_but_no_model_identity():
    system, user = (t.content for t in render_judge_prompt("q?", "ref", "cand"))
    for word in ("accuracy", "completeness", "clarity", "0 to 5"):
        assert word in system
    # the candidate text is quoted; nothing names which model produced it
    assert "cand" in user
    assert "model" not in user.lower()


@pytest.mark.parametrize(
    "scenario,context",
    [
        ("open_ended_qa", {}),
        ("open_ended_qa", {"question": "   "}),
        ("relation_extraction", {}),
        ("tests_and_answers", {"goal": "g"}),
        ("question_recommendation", {"levels": [1]}),
    ],
)
def test_missing_required_context_field(scenario, context):
    with pytest.raises(MissingContextField):
        render_prompt(scenario, context)


def test_unknown_scenario_rejected():
    with pytest.raises(ValueError):
        render_prompt("small_talk", {"question": "hi"})
    assert "small_talk" not in SCENARIOS

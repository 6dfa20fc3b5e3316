"""Evaluation testset: 7 tasks x 8 subdomains x 5 difficulties = 280 items."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import SrlTutorError

TASK_COUNT = 7
SUBDOMAIN_COUNT = 8
DIFFICULTY_COUNT = 5

# Default labels are placeholders; real runs are expected to configure them.
DEFAULT_TASKS = (
    "concept_explanation",
    "relation_extraction",
    "open_question_answering",
    "test_generation",
    "question_recommendation",
    "summarisation",
    "error_diagnosis",
)
DEFAULT_SUBDOMAINS = (
    "machine_learning",
    "deep_learning",
    "natural_language_processing",
    "computer_vision",
    "reinforcement_learning",
    "data_mining",
    "robotics",
    "knowledge_representation",
)


class LabelCountMismatch(SrlTutorError):
    pass


class BadTestset(SrlTutorError):
    pass


@dataclass(frozen=True)
class EvalItem:
    task: str
    subdomain: str
    difficulty: int
    question: str = ""
    reference_answer: str = ""

    def __post_init__(self) -> None:
        if not isinstance(self.difficulty, int) or isinstance(self.difficulty, bool):
            raise ValueError("difficulty must be an integer")
        if not 1 <= self.difficulty <= DIFFICULTY_COUNT:
            raise ValueError(f"difficulty {self.difficulty} outside [1, {DIFFICULTY_COUNT}]")

    @property
    def filled(self) -> bool:
        return bool(self.question.strip()) and bool(self.reference_answer.strip())


def item_key(item: EvalItem) -> str:
    return f"{item.task}/{item.subdomain}/d{item.difficulty}"


def build_testset_skeleton(
    tasks: tuple[str, ...] = DEFAULT_TASKS,
    subdomains: tuple[str, ...] = DEFAULT_SUBDOMAINS,
) -> list[EvalItem]:
    """Empty slots covering every (task, subdomain, difficulty) combination."""
    if len(set(tasks)) != TASK_COUNT or len(tasks) != TASK_COUNT:
        raise LabelCountMismatch(f"need {TASK_COUNT} distinct task labels, got {len(tasks)}")
    if len(set(subdomains)) != SUBDOMAIN_COUNT or len(subdomains) != SUBDOMAIN_COUNT:
        raise LabelCountMismatch(
            f"need {SUBDOMAIN_COUNT} distinct subdomain labels, got {len(subdomains)}"
        )
    return [
        EvalItem(task, subdomain, difficulty)
        for task in tasks
        for subdomain in subdomains
        for difficulty in range(1, DIFFICULTY_COUNT + 1)
    ]


def validate_testset(items: list[EvalItem], require_filled: bool = True) -> None:
    """Completeness check: full triple coverage, no duplicates, filled content."""
    expected = TASK_COUNT * SUBDOMAIN_COUNT * DIFFICULTY_COUNT
    if len(items) != expected:
        raise BadTestset(f"expected {expected} items, got {len(items)}")
    triples = {(i.task, i.subdomain, i.difficulty) for i in items}
    if len(triples) != len(items):
        raise BadTestset("duplicate (task, subdomain, difficulty) triples")
    tasks = {i.task for i in items}
    subdomains = {i.subdomain for i in items}
    if len(tasks) != TASK_COUNT or len(subdomains) != SUBDOMAIN_COUNT:
        raise BadTestset(
            f"label spread is {len(tasks)} tasks x {len(subdomains)} subdomains"
        )
    # uniqueness plus full label spread forces the cartesian product, but an
    # explicit scan keeps the failure message useful
    for task in tasks:
        for subdomain in subdomains:
            for difficulty in range(1, DIFFICULTY_COUNT + 1):
                if (task, subdomain, difficulty) not in triples:
                    raise BadTestset(f"missing {task}/{subdomain}/d{difficulty}")
    if require_filled:
        for item in items:
            if not item.filled:
                raise BadTestset(f"unfilled item {item_key(item)}")

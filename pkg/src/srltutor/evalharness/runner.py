"""Candidate answering and judge scoring over (item, model) cells."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from ..errors import SrlTutorError
from ..gateway import (
    ChatGateway,
    ChatTurn,
    MalformedReply,
    parse_score_block,
    render_judge_prompt,
)
from .testset import EvalItem, item_key, validate_testset


class JudgeParseFailure(SrlTutorError):
    def __init__(self, item: str, round: int, reason: str = ""):
        super().__init__(f"judge reply for {item} round {round} unusable: {reason}")
        self.item = item
        self.round = round
        self.reason = reason


@dataclass(frozen=True)
class JudgeScore:
    item: str
    model: str
    round: int
    accuracy: float
    completeness: float
    clarity: float

    def __post_init__(self) -> None:
        if self.round < 1:
            raise ValueError("round numbering starts at 1")
        for value in (self.accuracy, self.completeness, self.clarity):
            if not 0.0 <= value <= 5.0:
                raise ValueError(f"score {value} outside [0, 5]")


def candidate_turns(item: EvalItem) -> list[ChatTurn]:
    return [
        ChatTurn("system", "Answer the learner's question as well as you can."),
        ChatTurn("user", item.question),
    ]


def run_evaluation(
    testset: list[EvalItem],
    models: dict[str, ChatGateway],
    judge: ChatGateway,
    rounds: int = 3,
    allow_partial: bool = False,
) -> tuple[list[JudgeScore], list[JudgeParseFailure]]:
    """Score every (item, model) cell ``rounds`` times with the judge.

    Each candidate model answers an item once; the judge then scores that
    answer once per round. The judge sees question, reference, and candidate
    text only, never which model produced it. An unparseable judge reply is
    retried once; a second failure excludes that round and is returned in
    the failure log instead of a score.
    """
    if rounds < 1:
        raise ValueError("rounds must be >= 1")
    if not models:
        raise ValueError("no candidate models given")
    if allow_partial:
        testset = [item for item in testset if item.filled]
        if not testset:
            raise ValueError("no filled items in testset")
    else:
        validate_testset(testset)

    cells = [(item, model_id) for item in testset for model_id in models]

    def judge_cell(cell: tuple[EvalItem, str]):
        item, model_id = cell
        key = item_key(item)
        answer = models[model_id].complete(candidate_turns(item))
        scores: list[JudgeScore] = []
        failures: list[JudgeParseFailure] = []
        for round_no in range(1, rounds + 1):
            conversation = render_judge_prompt(item.question, item.reference_answer, answer)
            reason = ""
            for _ in range(2):  # one retry per round
                try:
                    acc, cpl, clr = parse_score_block(judge.complete(conversation))
                except MalformedReply as exc:
                    reason = str(exc)
                    continue
                scores.append(JudgeScore(key, model_id, round_no, acc, cpl, clr))
                break
            else:
                failures.append(JudgeParseFailure(key, round_no, reason))
        return scores, failures

    workers = min(len(cells), judge.config.max_in_flight)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        outcomes = list(pool.map(judge_cell, cells))

    all_scores = [score for scores, _ in outcomes for score in scores]
    all_failures = [failure for _, failures in outcomes for failure in failures]
    return all_scores, all_failures

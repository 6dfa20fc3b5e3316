"""Higher-level chat tasks composed from prompts, the gateway and the parser."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import SrlTutorError
from .parser import MalformedReply, WrongScenario, parse_structured_reply
from .prompts import QUESTION_RECOMMENDATION, TESTS_AND_ANSWERS, render_prompt
from .provider import ChatGateway


class IncompleteCoverage(SrlTutorError):
    """Some requested levels never received a question, even after re-asking."""

    def __init__(self, missing: list[int]):
        super().__init__(f"no question for levels {missing}")
        self.missing = missing


@dataclass(frozen=True)
class TestItem:
    node_id: str
    question: str
    options: tuple[str, str, str, str]
    correct: int
    explanation: str


def recommend_questions(
    gateway: ChatGateway,
    node_name: str,
    levels: list[int] | None = None,
    taxonomy: tuple[str, ...] | None = None,
) -> list[tuple[int, str]]:
    """One study question per requested level (default: all eight).

    Levels the first reply skipped are re-asked once, one at a time; levels
    still uncovered raise IncompleteCoverage.
    """
    wanted = sorted(set(levels)) if levels else list(range(1, 9))
    for level in wanted:
        if not isinstance(level, int) or not 1 <= level <= 8:
            raise ValueError(f"level out of range: {level!r}")
    context = {"node_name": node_name, "levels": wanted}
    if taxonomy:
        context["taxonomy"] = taxonomy
    reply = parse_structured_reply(
        gateway.complete(render_prompt(QUESTION_RECOMMENDATION, context)),
        QUESTION_RECOMMENDATION,
    )
    chosen: dict[int, str] = {}
    for level, text in reply.questions:
        if level in wanted and level not in chosen:
            chosen[level] = text
    for level in wanted:
        if level in chosen:
            continue
        retry_context = dict(context, levels=[level], salt=f"level {level} only")
        try:
            retry = parse_structured_reply(
                gateway.complete(render_prompt(QUESTION_RECOMMENDATION, retry_context)),
                QUESTION_RECOMMENDATION,
            )
        except (MalformedReply, WrongScenario):
            continue
        for got_level, text in retry.questions:
            if got_level == level:
                chosen[level] = text
                break
    missing = [level for level in wanted if level not in chosen]
    if missing:
        raise IncompleteCoverage(missing)
    return [(level, chosen[level]) for level in wanted]


def generate_test(
    gateway: ChatGateway,
    graph,
    node_ids: list[str],
    goal: str | None = None,
) -> list[TestItem]:
    """One multiple-choice item per node, in the given order.

    A reply that fails to parse is re-asked once with a variation hint; a
    second failure propagates.
    """
    items: list[TestItem] = []
    for node_id in node_ids:
        node = graph.node(node_id)
        context = {
            "node_name": node.name,
            "level": node.level,
            "taxonomy": graph.taxonomy.labels,
        }
        if goal:
            context["goal"] = goal
        try:
            reply = parse_structured_reply(
                gateway.complete(render_prompt(TESTS_AND_ANSWERS, context)),
                TESTS_AND_ANSWERS,
            )
        except (MalformedReply, WrongScenario):
            reply = parse_structured_reply(
                gateway.complete(render_prompt(TESTS_AND_ANSWERS, context)),
                TESTS_AND_ANSWERS,
            )
        mcq = reply.mcq
        items.append(
            TestItem(
                node_id=node_id,
                question=mcq["question"],
                options=tuple(mcq["options"]),
                correct=mcq["correct"],
                explanation=mcq["explanation"],
            )
        )
    return items

"""Dataset construction: one gateway exchange per corpus unit, per scenario.

Units run concurrently (the gateway's in-flight cap is the real throttle)
but results are gathered back into input order, so a deterministic mock
yields a deterministic dataset. Unusable model output is retried once, then
the unit is skipped with a reason; heavy skipping fails the whole run.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from ..errors import SrlTutorError
from ..gateway import (
    SCENARIOS,
    SECTION_KEYS,
    ChatGateway,
    ChatTurn,
    MalformedReply,
    ProviderError,
    RetriesExhausted,
    Timeout,
    WrongScenario,
    parse_structured_reply,
    render_prompt,
)
from ..gateway.provider import BadConversation
from .records import SCENARIO_VERSION, CorpusUnit, TuningRecord

OPTION_LETTERS = "ABCD"


class BuildFailed(SrlTutorError):
    pass


@dataclass(frozen=True)
class SkipEntry:
    unit_id: str
    reason: str


class _Unusable(Exception):
    """Model output that cannot become a valid record for this scenario."""


def _topic_of(unit: CorpusUnit) -> str:
    if unit.topic_tags:
        return unit.topic_tags[0]
    first_line = unit.text.strip().splitlines()[0]
    return first_line[:60]


def _conversation_for(unit: CorpusUnit, scenario: str) -> list[ChatTurn]:
    if scenario == "open_ended_qa":
        if unit.seed_dialogue:
            if unit.seed_dialogue[-1].role != "user":
                raise BadConversation(
                    f"seed dialogue of {unit.id!r} must end with a user turn"
                )
            system = render_prompt(scenario, {"question": unit.seed_dialogue[-1].content})[0]
            return [system, *unit.seed_dialogue]
        return render_prompt(scenario, {"question": unit.text})
    if scenario == "relation_extraction":
        return render_prompt(scenario, {"text": unit.text})
    return render_prompt(scenario, {"node_name": _topic_of(unit)})


def _build_one(unit: CorpusUnit, scenario: str, gateway: ChatGateway) -> TuningRecord:
    conversation = _conversation_for(unit, scenario)
    reply_text = gateway.complete(conversation)
    meta = {
        "source": unit.id,
        "knowledge_points": sorted(set(unit.topic_tags)),
        "levels": [],
        "version": SCENARIO_VERSION,
    }

    if scenario == "tests_and_answers":
        # one structured MCQ unfolds into the ask → answer → explain dialogue
        try:
            mcq = parse_structured_reply(reply_text, scenario).mcq
        except (MalformedReply, WrongScenario) as exc:
            raise _Unusable(str(exc)) from exc
        lettered = "\n".join(
            f"{OPTION_LETTERS[i]}) {option}" for i, option in enumerate(mcq["options"])
        )
        letter = OPTION_LETTERS[mcq["correct"]]
        messages = (
            *conversation,
            ChatTurn("assistant", f"{mcq['question']}\n{lettered}"),
            ChatTurn("user", f"I think the answer is {letter}."),
            ChatTurn("assistant", f"Correct, {letter} is right. {mcq['explanation']}"),
        )
        meta["knowledge_points"] = sorted(set(meta["knowledge_points"]) | {_topic_of(unit)})
        return TuningRecord(scenario, messages, meta)

    try:
        reply = parse_structured_reply(reply_text, scenario)
    except (MalformedReply, WrongScenario) as exc:
        raise _Unusable(str(exc)) from exc

    if scenario == "open_ended_qa":
        missing = set(SECTION_KEYS) - set(reply.sections)
        if missing:
            raise _Unusable(f"missing sections: {', '.join(sorted(missing))}")
        names = {r["source"] for r in reply.relations} | {r["target"] for r in reply.relations}
        meta["knowledge_points"] = sorted(set(meta["knowledge_points"]) | names)
        meta["levels"] = sorted({r["level"] for r in reply.relations})
    elif scenario == "relation_extraction":
        names = {r["source"] for r in reply.relations} | {r["target"] for r in reply.relations}
        meta["knowledge_points"] = sorted(set(meta["knowledge_points"]) | names)
        meta["levels"] = sorted({r["level"] for r in reply.relations})
    else:  # question_recommendation
        meta["knowledge_points"] = sorted(set(meta["knowledge_points"]) | {_topic_of(unit)})
        meta["levels"] = sorted({level for level, _ in reply.questions})

    messages = (*conversation, ChatTurn("assistant", reply_text))
    return TuningRecord(scenario, messages, meta)


def build_records(
    units: list[CorpusUnit],
    scenario: str,
    gateway: ChatGateway,
    skip_threshold: float = 0.5,
) -> tuple[list[TuningRecord], list[SkipEntry]]:
    """Build one record per unit; |records| + |skips| == |units|."""
    if scenario not in SCENARIOS:
        raise ValueError(f"unknown scenario {scenario!r}")
    if not units:
        raise ValueError("units must be nonempty")

    def process(unit: CorpusUnit):
        last_reason = ""
        for _ in range(2):  # invalid output is retried once
            try:
                return _build_one(unit, scenario, gateway)
            except _Unusable as exc:
                last_reason = str(exc)
            except (ProviderError, Timeout, RetriesExhausted) as exc:
                return SkipEntry(unit.id, f"provider failure: {exc}")
            except BadConversation as exc:
                return SkipEntry(unit.id, str(exc))
        return SkipEntry(unit.id, last_reason)

    workers = min(len(units), gateway.config.max_in_flight)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        outcomes = list(pool.map(process, units))

    records = [o for o in outcomes if isinstance(o, TuningRecord)]
    skips = [o for o in outcomes if isinstance(o, SkipEntry)]
    provider_failures = sum(1 for s in skips if s.reason.startswith("provider failure:"))
    if not records and provider_failures:
        raise ProviderError(f"every unit failed; {provider_failures} provider failures")
    if len(skips) / len(units) > skip_threshold:
        raise BuildFailed(
            f"skipped {len(skips)} of {len(units)} units, over the "
            f"{skip_threshold:.0%} threshold"
        )
    return records, skips

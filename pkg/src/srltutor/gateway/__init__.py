"""Chat gateway: providers, retry policy, prompt templates and reply parsing."""

from .parser import (
    SECTION_KEYS,
    MalformedReply,
    StructuredReply,
    WrongScenario,
    machine_records,
    parse_score_block,
    parse_structured_reply,
    split_answer_sections,
)
from .prompts import (
    SCENARIOS,
    SECTION_MARKERS,
    MissingContextField,
    render_card_prompt,
    render_judge_prompt,
    render_prompt,
    render_tree_extraction_prompt,
)
from .provider import (
    ChatGateway,
    ChatTurn,
    HttpProvider,
    MockProvider,
    ProviderConfig,
    ProviderError,
    RetriesExhausted,
    Timeout,
    mock_gateway,
    validate_conversation,
)
from .tasks import IncompleteCoverage, TestItem, generate_test, recommend_questions

__all__ = [
    "ChatGateway",
    "ChatTurn",
    "HttpProvider",
    "IncompleteCoverage",
    "MalformedReply",
    "MissingContextField",
    "MockProvider",
    "ProviderConfig",
    "ProviderError",
    "RetriesExhausted",
    "SCENARIOS",
    "SECTION_KEYS",
    "SECTION_MARKERS",
    "StructuredReply",
    "TestItem",
    "Timeout",
    "WrongScenario",
    "generate_test",
    "machine_records",
    "mock_gateway",
    "parse_score_block",
    "parse_structured_reply",
    "recommend_questions",
    "render_card_prompt",
    "render_judge_prompt",
    "render_prompt",
    "render_tree_extraction_prompt",
    "split_answer_sections",
    "validate_conversation",
]

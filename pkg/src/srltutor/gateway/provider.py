"""Provider-agnostic chat completion with retries and bounded concurrency.

The gateway owns the cross-cutting behaviour (backoff, in-flight cap, audit
log); providers only turn a conversation into text. A scripted mock provider
keeps every downstream pipeline testable without network access.
"""

from __future__ import annotations

import json
import os
import threading
import time
from collections.abc import Callable, Sequence
from dataclasses import dataclass

import httpx

from ..errors import SrlTutorError

ROLES = ("system", "user", "assistant")


class ProviderError(SrlTutorError):
    def __init__(self, message: str, status: int | None = None):
        super().__init__(message)
        self.status = status


class Timeout(SrlTutorError):
    pass


class RetriesExhausted(SrlTutorError):
    def __init__(self, attempts: int, last_error: Exception):
        super().__init__(f"provider failed after {attempts} attempts: {last_error}")
        self.attempts = attempts
        self.last_error = last_error


class BadConversation(SrlTutorError):
    pass


@dataclass(frozen=True)
class ChatTurn:
    role: str
    content: str


def validate_conversation(turns: Sequence[ChatTurn]) -> None:
    """Leading system turns, then strict user/assistant alternation from user."""
    if not turns:
        raise BadConversation("conversation is empty")
    for turn in turns:
        if turn.role not in ROLES:
            raise BadConversation(f"unknown role {turn.role!r}")
        if not turn.content:
            raise BadConversation("turn content must be nonempty")
    body = list(turns)
    while body and body[0].role == "system":
        body.pop(0)
    if not body:
        raise BadConversation("conversation has no user turn")
    for i, turn in enumerate(body):
        expected = "user" if i % 2 == 0 else "assistant"
        if turn.role != expected:
            raise BadConversation(f"turn {i} should be {expected}, got {turn.role}")


@dataclass(frozen=True)
class ProviderConfig:
    endpoint: str
    model: str
    timeout_s: float = 30.0
    max_in_flight: int = 4
    retries: int = 2
    backoff_base_s: float = 0.5
    temperature: float | None = None
    api_key: str | None = None
    audit_path: str | None = None

    def __post_init__(self) -> None:
        if self.max_in_flight < 1:
            raise ValueError("max_in_flight must be >= 1")
        if self.retries < 0:
            raise ValueError("retries must be >= 0")


class MockProvider:
    """Scripted provider for tests and offline runs.

    ``script`` is either a callable (turns -> text) or a sequence consumed in
    order; an Exception entry (or a raising callable) simulates failures.
    """

    def __init__(self, script: Callable[[Sequence[ChatTurn]], str] | Sequence):
        self._script = script
        self._cursor = 0
        self._lock = threading.Lock()
        self.calls: list[list[ChatTurn]] = []

    def complete(self, turns: Sequence[ChatTurn]) -> str:
        script = self._script
        with self._lock:
            self.calls.append(list(turns))
            if not callable(script):
                if self._cursor >= len(script):
                    raise ProviderError("mock script exhausted")
                entry = script[self._cursor]
                self._cursor += 1
        if callable(script):
            # outside the lock so blocking scripts do not serialise callers
            entry = script(turns)
        if isinstance(entry, Exception):
            raise entry
        return entry


class HttpProvider:
    """Chat-completion style HTTP provider (OpenAI-compatible request body)."""

    def __init__(self, config: ProviderConfig, client: httpx.Client | None = None):
        self.config = config
        self._client = client or httpx.Client(timeout=config.timeout_s)

    def complete(self, turns: Sequence[ChatTurn]) -> str:
        body: dict = {
            "model": self.config.model,
            "messages": [{"role": t.role, "content": t.content} for t in turns],
        }
        if self.config.temperature is not None:
            body["temperature"] = self.config.temperature
        headers = {}
        if self.config.api_key:
            headers["Authorization"] = f"Bearer {self.config.api_key}"
        try:
            response = self._client.post(self.config.endpoint, json=body, headers=headers)
        except httpx.TimeoutException as exc:
            raise Timeout(f"provider timed out after {self.config.timeout_s}s") from exc
        except httpx.HTTPError as exc:
            raise ProviderError(f"transport failure: {exc}") from exc
        if response.status_code != 200:
            raise ProviderError(f"provider returned {response.status_code}", response.status_code)
        try:
            return response.json()["choices"][0]["message"]["content"]
        except (KeyError, IndexError, ValueError) as exc:
            raise ProviderError(f"unexpected response shape: {exc}") from exc


class ChatGateway:
    """Shared front door to one provider; safe to use from many threads."""

    def __init__(
        self,
        provider,
        config: ProviderConfig,
        sleep: Callable[[float], None] = time.sleep,
    ):
        self.provider = provider
        self.config = config
        self._sleep = sleep
        self._slots = threading.BoundedSemaphore(config.max_in_flight)
        self._lock = threading.Lock()
        self.total_attempts = 0
        self.in_flight = 0
        self.peak_in_flight = 0

    def complete(self, turns: Sequence[ChatTurn]) -> str:
        validate_conversation(turns)
        with self._slots:
            with self._lock:
                self.in_flight += 1
                self.peak_in_flight = max(self.peak_in_flight, self.in_flight)
            try:
                return self._attempt(turns)
            finally:
                with self._lock:
                    self.in_flight -= 1

    def _attempt(self, turns: Sequence[ChatTurn]) -> str:
        last_error: Exception | None = None
        for attempt in range(self.config.retries + 1):
            if attempt > 0:
                self._sleep(self.config.backoff_base_s * 2 ** (attempt - 1))
            with self._lock:
                self.total_attempts += 1
            try:
                text = self.provider.complete(turns)
            except (ProviderError, Timeout) as exc:
                last_error = exc
                self._audit(turns, error=str(exc))
                continue
            self._audit(turns, response=text)
            return text
        assert last_error is not None
        raise RetriesExhausted(self.config.retries + 1, last_error)

    def _audit(self, turns: Sequence[ChatTurn], response: str | None = None, error: str | None = None) -> None:
        if not self.config.audit_path:
            return
        entry = {
            "ts": time.time(),
            "model": self.config.model,
            "request": [{"role": t.role, "content": t.content} for t in turns],
        }
        if response is not None:
            entry["response"] = response
        if error is not None:
            entry["error"] = error
        # API keys never enter the entry; only role/content of turns is logged.
        with self._lock:
            with open(self.config.audit_path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(entry, ensure_ascii=False) + "\n")


def mock_gateway(script, **overrides) -> ChatGateway:
    """Gateway over a MockProvider with test-friendly defaults (no real sleep)."""
    defaults = dict(endpoint="mock:", model="mock", backoff_base_s=0.0)
    defaults.update(overrides)
    config = ProviderConfig(**defaults)
    return ChatGateway(MockProvider(script), config, sleep=lambda _: None)


def gateway_from_dict(data: dict) -> ChatGateway:
    """Build a gateway from a config mapping (CLI / service config files).

    kind "mock" takes either a fixed "reply" or a "replies" list consumed in
    order; kind "http" takes ProviderConfig fields, with the API key read
    from the environment variable named by "api_key_env" so keys never live
    in config files.
    """
    kind = data.get("kind")
    if kind == "mock":
        if "replies" in data:
            script = list(data["replies"])
        else:
            reply = data.get("reply", "")
            script = lambda _turns: reply
        overrides = {
            k: v
            for k, v in data.items()
            if k in ("retries", "backoff_base_s", "max_in_flight", "audit_path")
        }
        return mock_gateway(script, **overrides)
    if kind == "http":
        fields = {
            k: v
            for k, v in data.items()
            if k
            in (
                "endpoint",
                "model",
                "timeout_s",
                "max_in_flight",
                "retries",
                "backoff_base_s",
                "temperature",
                "audit_path",
            )
        }
        api_key = None
        if data.get("api_key_env"):
            api_key = os.environ.get(data["api_key_env"])
        config = ProviderConfig(api_key=api_key, **fields)
        return ChatGateway(HttpProvider(config), config)
    raise ValueError(f"unknown provider kind {kind!r}")

"""Service configuration: JSON file plus SRLTUTOR_-prefixed env overrides."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import SrlTutorError
from ..graph import DEFAULT_RELATION_KINDS
from ..levels import DEFAULT_LEVEL_LABELS, LevelTaxonomy

ENV_PREFIX = "SRLTUTOR_"

PROVIDER_ROLES = ("tutor", "extractor", "judge")

# offline default so a bare config still starts; real deployments override
_SILENT_PROVIDER = {"kind": "mock", "reply": ""}


class BadConfig(SrlTutorError):
    pass


@dataclass(frozen=True)
class ServiceConfig:
    listen: str = "127.0.0.1:8080"
    data_dir: str = "data"
    providers: dict = field(default_factory=dict)
    level_labels: tuple[str, ...] = DEFAULT_LEVEL_LABELS
    relation_kinds: tuple[str, ...] = DEFAULT_RELATION_KINDS
    stopword_path: str | None = None
    word_cloud_terms: int = 12

    def __post_init__(self) -> None:
        LevelTaxonomy(tuple(self.level_labels))  # 8 distinct labels or it raises
        if not self.relation_kinds:
            raise BadConfig("relation_kinds must be nonempty")
        if self.word_cloud_terms < 1:
            raise BadConfig("word_cloud_terms must be >= 1")
        for role in self.providers:
            if role not in PROVIDER_ROLES:
                raise BadConfig(f"unknown provider role {role!r}")

    def taxonomy(self) -> LevelTaxonomy:
        return LevelTaxonomy(tuple(self.level_labels))

    def provider(self, role: str) -> dict:
        if role not in PROVIDER_ROLES:
            raise BadConfig(f"unknown provider role {role!r}")
        return self.providers.get(role, dict(_SILENT_PROVIDER))

    def host_and_port(self) -> tuple[str, int]:
        host, _, port = self.listen.rpartition(":")
        if not host or not port.isdigit():
            raise BadConfig(f"listen address {self.listen!r} is not host:port")
        return host, int(port)


def load_config(
    path: str | Path | None = None, env: dict[str, str] | None = None
) -> ServiceConfig:
    data: dict = {}
    if path is not None:
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except OSError as exc:
            raise BadConfig(f"cannot read config {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise BadConfig(f"config {path} is not valid JSON: {exc.msg}") from exc
        if not isinstance(data, dict):
            raise BadConfig("config root must be an object")

    if env is None:
        env = dict(os.environ)
    for key, target in (
        ("LISTEN", "listen"),
        ("DATA_DIR", "data_dir"),
        ("STOPWORDS", "stopword_path"),
    ):
        value = env.get(ENV_PREFIX + key)
        if value:
            data[target] = value

    kwargs: dict = {}
    for name in ("listen", "data_dir", "providers", "stopword_path", "word_cloud_terms"):
        if name in data:
            kwargs[name] = data[name]
    if "level_labels" in data:
        kwargs["level_labels"] = tuple(data["level_labels"])
    if "relation_kinds" in data:
        kwargs["relation_kinds"] = tuple(data["relation_kinds"])
    try:
        return ServiceConfig(**kwargs)
    except (TypeError, ValueError) as exc:
        raise BadConfig(str(exc)) from exc

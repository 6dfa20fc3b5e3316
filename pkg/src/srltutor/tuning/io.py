"""JSONL persistence for tuning datasets and corpus directory loading."""

from __future__ import annotations

import json
from pathlib import Path

from ..errors import SrlTutorError
from ..gateway import ChatTurn
from .records import CorpusUnit, TuningRecord


class IoError(SrlTutorError):
    pass


class ParseError(SrlTutorError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


def record_to_dict(record: TuningRecord) -> dict:
    return {
        "scenario": record.scenario,
        "messages": [{"role": t.role, "content": t.content} for t in record.messages],
        "meta": record.meta,
    }


def record_from_dict(data: dict) -> TuningRecord:
    messages = tuple(ChatTurn(m["role"], m["content"]) for m in data["messages"])
    return TuningRecord(data["scenario"], messages, dict(data.get("meta", {})))


def emit_dataset(records: list[TuningRecord], path: str | Path) -> None:
    """Write one canonical JSON object per line."""
    lines = [
        json.dumps(
            record_to_dict(record),
            sort_keys=True,
            ensure_ascii=False,
            separators=(",", ":"),
        )
        for record in records
    ]
    try:
        Path(path).write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def load_dataset(path: str | Path) -> list[TuningRecord]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    records = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            data = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(line_no, f"invalid JSON: {exc.msg}") from exc
        if not isinstance(data, dict):
            raise ParseError(line_no, "expected a JSON object")
        try:
            records.append(record_from_dict(data))
        except (KeyError, TypeError) as exc:
            raise ParseError(line_no, f"bad record shape: {exc}") from exc
    return records


def load_corpus(directory: str | Path) -> list[CorpusUnit]:
    """Collect units from a directory, in sorted filename order.

    ``*.jsonl`` files hold one unit per line ({"text": ..., "id"?, "tags"?});
    ``*.txt`` and ``*.md`` files each become a single unit named after the file.
    """
    root = Path(directory)
    if not root.is_dir():
        raise IoError(f"corpus directory {directory} not found")
    units: list[CorpusUnit] = []
    for path in sorted(root.iterdir()):
        suffix = path.suffix.lower()
        if suffix == ".jsonl":
            for line_no, line in enumerate(
                path.read_text(encoding="utf-8").splitlines(), start=1
            ):
                if not line.strip():
                    continue
                try:
                    data = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise ParseError(line_no, f"{path.name}: invalid JSON") from exc
                if not isinstance(data, dict) or not isinstance(data.get("text"), str):
                    raise ParseError(line_no, f"{path.name}: unit needs a text field")
                units.append(
                    CorpusUnit(
                        id=str(data.get("id", f"{path.stem}-{line_no}")),
                        text=data["text"],
                        topic_tags=tuple(data.get("tags", ())),
                    )
                )
        elif suffix in (".txt", ".md"):
            body = path.read_text(encoding="utf-8")
            if body.strip():
                units.append(CorpusUnit(id=path.stem, text=body))
    if not units:
        raise IoError(f"no corpus units under {directory}")
    return units

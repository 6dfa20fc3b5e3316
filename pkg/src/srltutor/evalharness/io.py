"""Testset files and the append-friendly line-delimited score log."""

from __future__ import annotations

import json
from pathlib import Path

from ..errors import SrlTutorError
from .runner import JudgeScore
from .testset import EvalItem

TESTSET_FORMAT = "eval-testset"
TESTSET_VERSION = 1


class IoError(SrlTutorError):
    pass


class ParseError(SrlTutorError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


def save_testset(items: list[EvalItem], path: str | Path) -> None:
    document = {
        "format": TESTSET_FORMAT,
        "version": TESTSET_VERSION,
        "items": [
            {
                "task": i.task,
                "subdomain": i.subdomain,
                "difficulty": i.difficulty,
                "question": i.question,
                "reference_answer": i.reference_answer,
            }
            for i in items
        ],
    }
    try:
        Path(path).write_text(
            json.dumps(document, indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
        )
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def load_testset(path: str | Path) -> list[EvalItem]:
    try:
        document = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise IoError(f"{path} is not valid JSON: {exc.msg}") from exc
    if not isinstance(document, dict) or document.get("format") != TESTSET_FORMAT:
        raise IoError(f"{path} is not a testset file")
    if document.get("version") != TESTSET_VERSION:
        raise IoError(f"unsupported testset version {document.get('version')!r}")
    try:
        return [
            EvalItem(
                entry["task"],
                entry["subdomain"],
                entry["difficulty"],
                entry.get("question", ""),
                entry.get("reference_answer", ""),
            )
            for entry in document["items"]
        ]
    except (KeyError, TypeError, ValueError) as exc:
        raise IoError(f"bad testset item: {exc}") from exc


def save_scores(scores: list[JudgeScore], path: str | Path) -> None:
    lines = [
        json.dumps(
            {
                "item": s.item,
                "model": s.model,
                "round": s.round,
                "accuracy": s.accuracy,
                "completeness": s.completeness,
                "clarity": s.clarity,
            },
            sort_keys=True,
            ensure_ascii=False,
            separators=(",", ":"),
        )
        for s in scores
    ]
    try:
        Path(path).write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def load_scores(path: str | Path) -> list[JudgeScore]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    scores = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            data = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(line_no, f"invalid JSON: {exc.msg}") from exc
        try:
            scores.append(
                JudgeScore(
                    data["item"],
                    data["model"],
                    data["round"],
                    data["accuracy"],
                    data["completeness"],
                    data["clarity"],
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(line_no, f"bad score row: {exc}") from exc
    return scores

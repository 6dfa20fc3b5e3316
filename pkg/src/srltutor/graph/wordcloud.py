"""Note summarization into weighted word-cloud terms."""

from __future__ import annotations

import re
from importlib import resources
from pathlib import Path

from ..errors import SrlTutorError

_TOKEN = re.compile(r"[a-z0-9]+")


class EmptyNote(SrlTutorError):
    pass


def load_default_stopwords() -> frozenset[str]:
    text = resources.files("srltutor").joinpath("data/stopwords_en.txt").read_text("utf-8")
    return _parse_stopwords(text)


def load_stopwords(path: str | Path) -> frozenset[str]:
    return _parse_stopwords(Path(path).read_text("utf-8"))


def _parse_stopwords(text: str) -> frozenset[str]:
    words = set()
    for line in text.splitlines():
        line = line.strip().lower()
        if line and not line.startswith("#"):
            words.add(line)
    return frozenset(words)


def summarize_note(
    note: str,
    max_terms: int,
    stopwords: frozenset[str] | None = None,
) -> list[tuple[str, float]]:
    """Top ``max_terms`` terms of a note, weighted by frequency / max frequency.

    Tokens are maximal alphanumeric runs, lowercased; stopwords are dropped.
    Ties break by lexicographic term order, so the result is deterministic.
    """
    if max_terms < 1:
        raise ValueError("max_terms must be >= 1")
    if not note.strip():
        raise EmptyNote("note is empty")
    if stopwords is None:
        stopwords = load_default_stopwords()

    counts: dict[str, int] = {}
    for token in _TOKEN.findall(note.lower()):
        if token not in stopwords:
            counts[token] = counts.get(token, 0) + 1
    if not counts:
        return []

    max_freq = max(counts.values())
    ranked = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    return [(term, count / max_freq) for term, count in ranked[:max_terms]]

"""File-backed session store: one canonical JSON file per session.

Writes go to a temp file in the same directory and land with an atomic
rename, so a crash can lose an acknowledgment but never corrupt a session.
Callers serialize access per session through ``lock``.
"""

from __future__ import annotations

import json
import os
import threading
from pathlib import Path

from ..errors import SrlTutorError


class UnknownSession(SrlTutorError):
    pass


class StoreError(SrlTutorError):
    pass


def canonical_json(document: dict) -> str:
    return (
        json.dumps(document, sort_keys=True, ensure_ascii=False, separators=(",", ":"))
        + "\n"
    )


class SessionStore:
    def __init__(self, root: str | Path):
        self.root = Path(root)
        try:
            self.root.mkdir(parents=True, exist_ok=True)
            probe = self.root / ".probe"
            probe.write_text("", encoding="utf-8")
            probe.unlink()
        except OSError as exc:
            raise StoreError(f"data directory {root} not writable: {exc}") from exc
        self._locks: dict[str, threading.Lock] = {}
        self._registry = threading.Lock()

    def lock(self, session_id: str) -> threading.Lock:
        with self._registry:
            return self._locks.setdefault(session_id, threading.Lock())

    def _path(self, session_id: str) -> Path:
        if not session_id or any(c in session_id for c in "/\\."):
            raise UnknownSession(f"unknown session {session_id!r}")
        return self.root / f"{session_id}.json"

    def exists(self, session_id: str) -> bool:
        try:
            return self._path(session_id).is_file()
        except UnknownSession:
            return False

    def save(self, session_id: str, document: dict) -> None:
        path = self._path(session_id)
        tmp = path.with_name(path.name + ".tmp")
        try:
            tmp.write_text(canonical_json(document), encoding="utf-8")
            os.replace(tmp, path)
        except OSError as exc:
            raise StoreError(f"cannot persist session {session_id}: {exc}") from exc

    def load(self, session_id: str) -> dict:
        path = self._path(session_id)
        try:
            text = path.read_text(encoding="utf-8")
        except FileNotFoundError:
            raise UnknownSession(f"unknown session {session_id!r}") from None
        except OSError as exc:
            raise StoreError(f"cannot read session {session_id}: {exc}") from exc
        try:
            document = json.loads(text)
        except json.JSONDecodeError as exc:
            raise StoreError(f"session {session_id} file corrupt: {exc.msg}") from exc
        if not isinstance(document, dict):
            raise StoreError(f"session {session_id} file corrupt: not an object")
        return document

    def ids(self) -> list[str]:
        return sorted(p.stem for p in self.root.glob("*.json"))

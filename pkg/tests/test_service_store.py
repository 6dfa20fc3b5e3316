"""Durable session store: canonical bytes, atomic writes, locking."""

import json
import threading

import pytest

from srltutor.service import SessionStore, StoreError, UnknownSession, canonical_json


@pytest.fixture
def store(tmp_path):
    return SessionStore(tmp_path / "data")


class TestCanonicalJson:
    def test_sorted_compact_with_newline(self):
        text = canonical_json({"b": 1, "a": [1, 2]})
        assert text == '{"a":[1,2],"b":1}\n'

    def test_non_ascii_kept(self):
        assert canonical_json({"t": "naïve"}) == '{"t":"naïve"}\n'

    def test_same_document_same_bytes(self):
        a = canonical_json({"x": 1, "y": {"b": 2, "a": 3}})
        b = canonical_json({"y": {"a": 3, "b": 2}, "x": 1})
        assert a == b


class TestSaveLoad:
    def test_round_trip(self, store):
        document = {"format": "x", "items": [1, 2, 3], "name": "möbius"}
        store.save("abc", document)
        assert store.load("abc") == document

    def test_file_bytes_are_canonical(self, store, tmp_path):
        store.save("abc", {"b": 2, "a": 1})
        raw = (tmp_path / "data" / "abc.json").read_text(encoding="utf-8")
        assert raw == canonical_json({"a": 1, "b": 2})

    def test_save_again_identical_bytes(self, store, tmp_path):
        store.save("abc", {"n": 1})
        first = (tmp_path / "data" / "abc.json").read_bytes()
        store.save("abc", json.loads(first))
        assert (tmp_path / "data" / "abc.json").read_bytes() == first

    def test_no_tmp_file_left_behind(self, store, tmp_path):
        store.save("abc", {"n": 1})
        leftovers = [p.name for p in (tmp_path / "data").iterdir()]
        assert leftovers == ["abc.json"]

    def test_missing_session(self, store):
        with pytest.raises(UnknownSession):
            store.load("ghost")

    def test_exists(self, store):
        assert not store.exists("abc")
        store.save("abc", {})
        assert store.exists("abc")

    def test_ids_sorted(self, store):
        for sid in ("zz", "aa", "mm"):
            store.save(sid, {})
        assert store.ids() == ["aa", "mm", "zz"]

    def test_corrupt_file(self, store, tmp_path):
        (tmp_path / "data" / "bad.json").write_text("{oops", encoding="utf-8")
        with pytest.raises(StoreError, match="corrupt"):
            store.load("bad")

    def test_non_object_file(self, store, tmp_path):
        (tmp_path / "data" / "arr.json").write_text("[1]", encoding="utf-8")
        with pytest.raises(StoreError, match="not an object"):
            store.load("arr")


class TestPathSafety:
    @pytest.mark.parametrize("sid", ["", "../etc", "a/b", "a\\b", "x.json"])
    def test_traversal_rejected(self, store, sid):
        with pytest.raises(UnknownSession):
            store.load(sid)
        assert not store.exists(sid)

    def test_unusable_root(self, tmp_path):
        # parent is a plain file, so the data dir cannot be created
        blocker = tmp_path / "blocker"
        blocker.write_text("", encoding="utf-8")
        with pytest.raises(StoreError, match="not writable"):
            SessionStore(blocker / "data")


class TestLocking:
    def test_same_lock_per_session(self, store):
        assert store.lock("a") is store.lock("a")
        assert store.lock("a") is not store.lock("b")

    def test_serializes_writers(self, store):
        """Two writers under the lock never interleave their read-modify-write."""
        store.save("ctr", {"n": 0})

        def bump():
            for _ in range(50):
                with store.lock("ctr"):
                    doc = store.load("ctr")
                    doc["n"] += 1
                    store.save("ctr", doc)

        threads = [threading.Thread(target=bump) for _ in range(4)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert store.load("ctr")["n"] == 200

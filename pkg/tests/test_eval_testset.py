"""Skeleton composition against a cartesian-product oracle, plus persistence."""

import itertools

import pytest

from srltutor.evalharness import (
    DEFAULT_SUBDOMAINS,
    DEFAULT_TASKS,
    BadTestset,
    EvalItem,
    LabelCountMismatch,
    build_testset_skeleton,
    item_key,
    load_testset,
    save_testset,
    validate_testset,
)


def filled(items):
    return [
        EvalItem(
            i.task,
            i.subdomain,
            i.difficulty,
            f"Question on {i.subdomain} #{i.difficulty}?",
            f"Reference for {item_key(i)}.",
        )
        for i in items
    ]


class TestSkeleton:
    def test_280_slots(self):
        items = build_testset_skeleton()
        assert len(items) == 280

    def test_matches_product_oracle(self):
        items = build_testset_skeleton()
        got = {(i.task, i.subdomain, i.difficulty) for i in items}
        expected = set(
            itertools.product(DEFAULT_TASKS, DEFAULT_SUBDOMAINS, range(1, 6))
        )
        assert got == expected
        assert len(items) == len(got)

    def test_slots_start_empty(self):
        assert not any(i.filled for i in build_testset_skeleton())

    def test_six_task_labels(self):
        with pytest.raises(LabelCountMismatch):
            build_testset_skeleton(tasks=DEFAULT_TASKS[:6])

    def test_duplicate_task_labels(self):
        tasks = ("a",) * 7
        with pytest.raises(LabelCountMismatch):
            build_testset_skeleton(tasks=tasks)

    def test_nine_subdomains(self):
        with pytest.raises(LabelCountMismatch):
            build_testset_skeleton(subdomains=DEFAULT_SUBDOMAINS + ("extra",))

    def test_custom_labels(self):
        tasks = tuple(f"t{i}" for i in range(7))
        subs = tuple(f"s{i}" for i in range(8))
        items = build_testset_skeleton(tasks, subs)
        assert {i.task for i in items} == set(tasks)
        assert {i.subdomain for i in items} == set(subs)


class TestEvalItem:
    @pytest.mark.parametrize("difficulty", [0, 6, -1, 2.5, True])
    def test_bad_difficulty(self, difficulty):
        with pytest.raises(ValueError):
            EvalItem("t", "s", difficulty)

    def test_key(self):
        assert item_key(EvalItem("qa", "robotics", 4)) == "qa/robotics/d4"

    def test_filled_needs_both_fields(self):
        assert not EvalItem("t", "s", 1, "q?", "  ").filled
        assert EvalItem("t", "s", 1, "q?", "ref").filled


class TestValidate:
    def test_filled_set_passes(self):
        validate_testset(filled(build_testset_skeleton()))

    def test_skeleton_passes_when_fill_not_required(self):
        validate_testset(build_testset_skeleton(), require_filled=False)

    def test_skeleton_fails_when_fill_required(self):
        with pytest.raises(BadTestset) as err:
            validate_testset(build_testset_skeleton())
        assert "unfilled" in str(err.value)

    def test_wrong_count(self):
        with pytest.raises(BadTestset):
            validate_testset(filled(build_testset_skeleton())[:-1])

    def test_duplicate_triple(self):
        items = filled(build_testset_skeleton())
        items[-1] = items[0]
        with pytest.raises(BadTestset) as err:
            validate_testset(items)
        assert "duplicate" in str(err.value)

    def test_missing_combination_detected(self):
        # swap one slot to a fresh task label: count stays 280 but spread breaks
        items = filled(build_testset_skeleton())
        odd = items[0]
        items[0] = EvalItem("rogue_task", odd.subdomain, odd.difficulty, "q?", "r")
        with pytest.raises(BadTestset):
            validate_testset(items)


class TestPersistence:
    def test_round_trip(self, tmp_path):
        items = filled(build_testset_skeleton())
        path = tmp_path / "testset.json"
        save_testset(items, path)
        assert load_testset(path) == items

    def test_not_a_testset(self, tmp_path):
        path = tmp_path / "other.json"
        path.write_text('{"format": "something-else"}', encoding="utf-8")
        with pytest.raises(Exception) as err:
            load_testset(path)
        assert "not a testset" in str(err.value)

    def test_missing_file(self, tmp_path):
        from srltutor.evalharness import IoError

        with pytest.raises(IoError):
            load_testset(tmp_path / "absent.json")

    def test_bad_item_difficulty(self, tmp_path):
        from srltutor.evalharness import IoError

        path = tmp_path / "testset.json"
        path.write_text(
            '{"format": "eval-testset", "version": 1, "items": '
            '[{"task": "t", "subdomain": "s", "difficulty": 9}]}',
            encoding="utf-8",
        )
        with pytest.raises(IoError):
            load_testset(path)

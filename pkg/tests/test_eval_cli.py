"""CLI flow: skeleton, fill, run against mocks, re-aggregate from the log."""

import csv
import io
import json

import pytest

from srltutor.evalharness import (
    JudgeScore,
    load_scores,
    load_testset,
    save_scores,
    save_testset,
)
from srltutor.evalharness.cli import main
from srltutor.evalharness.io import ParseError
from test_eval_runner import scores_reply
from test_eval_testset import filled


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def config_file(tmp_path, name, **data):
    path = tmp_path / name
    path.write_text(json.dumps({"kind": "mock", **data}), encoding="utf-8")
    return path


@pytest.fixture
def testset_file(tmp_path):
    path = tmp_path / "testset.json"
    save_testset(filled(load_skeleton(tmp_path)), path)
    return path


def load_skeleton(tmp_path):
    from srltutor.evalharness import build_testset_skeleton

    return build_testset_skeleton()


class TestSkeletonCommand:
    def test_writes_280_slots(self, tmp_path, capsys):
        out = tmp_path / "skeleton.json"
        code, stdout = run(capsys, "build-skeleton", "--out", out)
        assert code == 0
        assert json.loads(stdout)["items"] == 280
        assert len(load_testset(out)) == 280

    def test_custom_labels(self, tmp_path, capsys):
        out = tmp_path / "skeleton.json"
        tasks = ",".join(f"t{i}" for i in range(7))
        subs = ",".join(f"s{i}" for i in range(8))
        code, _ = run(
            capsys, "build-skeleton", "--tasks", tasks, "--subdomains", subs, "--out", out
        )
        assert code == 0
        assert {i.task for i in load_testset(out)} == {f"t{i}" for i in range(7)}

    def test_wrong_label_count(self, tmp_path, capsys):
        code, stdout = run(
            capsys, "build-skeleton", "--tasks", "a,b", "--out", tmp_path / "s.json"
        )
        assert code == 1
        assert "error" in json.loads(stdout)


class TestRunCommand:
    def test_full_run(self, tmp_path, testset_file, capsys):
        judge = config_file(tmp_path, "judge.json", reply=scores_reply(4, 3, 5))
        model_a = config_file(tmp_path, "a.json", id="model-a", reply="Answer A.")
        model_b = config_file(tmp_path, "b.json", id="model-b", reply="Answer B.")
        scores_path = tmp_path / "scores.jsonl"
        code, stdout = run(
            capsys,
            "run", "--testset", testset_file, "--judge", judge,
            "--models", model_a, model_b, "--rounds", "2",
            "--scores", scores_path,
        )
        assert code == 0
        report = json.loads(stdout)
        assert report["models"] == ["model-a", "model-b"]
        assert report["scores"] == 280 * 2 * 2
        assert report["excluded"] == []
        assert len(load_scores(scores_path)) == 1120

    def test_model_id_defaults_to_position(self, tmp_path, testset_file, capsys):
        judge = config_file(tmp_path, "judge.json", reply=scores_reply(3, 3, 3))
        model = config_file(tmp_path, "m.json", reply="Answer.")
        code, stdout = run(
            capsys,
            "run", "--testset", testset_file, "--judge", judge,
            "--models", model, "--rounds", "1",
            "--scores", tmp_path / "scores.jsonl",
        )
        assert code == 0
        assert json.loads(stdout)["models"] == ["model-1"]

    def test_exclusions_reported(self, tmp_path, capsys):
        # a judge that never produces scores: every round excluded, none fatal
        from srltutor.evalharness import EvalItem

        items = [EvalItem("t", "s", 1, "q?", "ref")]
        testset = tmp_path / "partial.json"
        save_testset(items, testset)
        judge = config_file(tmp_path, "judge.json", reply="no block at all")
        model = config_file(tmp_path, "m.json", id="m", reply="Answer.")
        code, stdout = run(
            capsys,
            "run", "--testset", testset, "--judge", judge,
            "--models", model, "--rounds", "1",
            "--scores", tmp_path / "scores.jsonl", "--allow-partial",
        )
        assert code == 0
        report = json.loads(stdout)
        assert report["scores"] == 0
        assert report["excluded"][0]["item"] == "t/s/d1"

    def test_incomplete_testset_fails_without_flag(self, tmp_path, capsys):
        from srltutor.evalharness import EvalItem

        testset = tmp_path / "partial.json"
        save_testset([EvalItem("t", "s", 1, "q?", "ref")], testset)
        judge = config_file(tmp_path, "judge.json", reply=scores_reply(3, 3, 3))
        model = config_file(tmp_path, "m.json", reply="Answer.")
        code, stdout = run(
            capsys,
            "run", "--testset", testset, "--judge", judge,
            "--models", model, "--scores", tmp_path / "scores.jsonl",
        )
        assert code == 1
        assert "280" in json.loads(stdout)["error"]


class TestReportCommand:
    def test_report_from_saved_log(self, tmp_path, capsys):
        scores = [
            JudgeScore("i0", "m", 1, 4.0, 4.0, 4.0),
            JudgeScore("i1", "m", 1, 2.0, 3.0, 5.0),
        ]
        path = tmp_path / "scores.jsonl"
        save_scores(scores, path)
        code, stdout = run(capsys, "report", "--scores", path, "--format", "csv")
        assert code == 0
        table = list(csv.reader(io.StringIO(stdout)))
        assert table[1][0] == "m"
        assert table[1][1].startswith("3.00")

    def test_report_rereads_without_requerying(self, tmp_path, capsys):
        path = tmp_path / "scores.jsonl"
        save_scores([JudgeScore("i0", "m", 1, 4, 4, 4)], path)
        first = run(capsys, "report", "--scores", path)
        second = run(capsys, "report", "--scores", path)
        assert first == second

    def test_missing_log(self, tmp_path, capsys):
        code, stdout = run(capsys, "report", "--scores", tmp_path / "absent.jsonl")
        assert code == 1
        assert "error" in json.loads(stdout)


class TestScoreLog:
    def test_round_trip(self, tmp_path, rng):
        scores = [
            JudgeScore(
                f"i{rng.randint(0, 40)}",
                f"m{rng.randint(0, 3)}",
                rng.randint(1, 4),
                round(rng.uniform(0, 5), 3),
                round(rng.uniform(0, 5), 3),
                round(rng.uniform(0, 5), 3),
            )
            for _ in range(500)
        ]
        path = tmp_path / "scores.jsonl"
        save_scores(scores, path)
        assert load_scores(path) == scores

    def test_bad_line_number(self, tmp_path):
        path = tmp_path / "scores.jsonl"
        good = json.dumps(
            {"item": "i", "model": "m", "round": 1, "accuracy": 1, "completeness": 1, "clarity": 1}
        )
        path.write_text(good + "\nnot json\n", encoding="utf-8")
        with pytest.raises(ParseError) as err:
            load_scores(path)
        assert err.value.line == 2

    def test_out_of_range_score_rejected(self, tmp_path):
        path = tmp_path / "scores.jsonl"
        path.write_text(
            '{"item": "i", "model": "m", "round": 1, "accuracy": 9, "completeness": 1, "clarity": 1}\n',
            encoding="utf-8",
        )
        with pytest.raises(ParseError):
            load_scores(path)

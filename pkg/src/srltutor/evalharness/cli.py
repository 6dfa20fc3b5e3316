"""Command line front end for testset building, evaluation runs, and reports."""

from __future__ import annotations

import argparse
import json
import sys

from ..gateway import ProviderError
from ..gateway.provider import gateway_from_dict
from .aggregate import EmptyScores, aggregate_scores
from .io import IoError, ParseError, load_scores, load_testset, save_scores, save_testset
from .report import FORMATS, emit_report
from .runner import run_evaluation
from .testset import (
    DEFAULT_SUBDOMAINS,
    DEFAULT_TASKS,
    BadTestset,
    LabelCountMismatch,
    build_testset_skeleton,
)


def _labels(raw: str | None, defaults: tuple[str, ...]) -> tuple[str, ...]:
    if raw is None:
        return defaults
    return tuple(part.strip() for part in raw.split(",") if part.strip())


def _load_gateway(path: str):
    with open(path, encoding="utf-8") as handle:
        data = json.load(handle)
    return data.get("id"), gateway_from_dict(data)


def _cmd_skeleton(args: argparse.Namespace) -> dict:
    items = build_testset_skeleton(
        _labels(args.tasks, DEFAULT_TASKS), _labels(args.subdomains, DEFAULT_SUBDOMAINS)
    )
    save_testset(items, args.out)
    return {"command": "build-skeleton", "items": len(items), "out": args.out}


def _cmd_run(args: argparse.Namespace) -> dict:
    testset = load_testset(args.testset)
    _, judge = _load_gateway(args.judge)
    models = {}
    for index, path in enumerate(args.models):
        model_id, gateway = _load_gateway(path)
        models[model_id or f"model-{index + 1}"] = gateway
    scores, failures = run_evaluation(
        testset, models, judge, rounds=args.rounds, allow_partial=args.allow_partial
    )
    save_scores(scores, args.scores)
    return {
        "command": "run",
        "models": sorted(models),
        "rounds": args.rounds,
        "scores": len(scores),
        "excluded": [
            {"item": f.item, "round": f.round, "reason": f.reason} for f in failures
        ],
        "out": args.scores,
    }


def _cmd_report(args: argparse.Namespace) -> str:
    report = aggregate_scores(load_scores(args.scores), estimator=args.estimator)
    return emit_report(report, args.format)


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srltutor-eval",
        description="Build testsets, run judge-based evaluation, render reports.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    skeleton = sub.add_parser("build-skeleton", help="emit the 280-slot testset")
    skeleton.add_argument("--tasks", help="7 comma-separated task labels")
    skeleton.add_argument("--subdomains", help="8 comma-separated subdomain labels")
    skeleton.add_argument("--out", required=True)
    skeleton.set_defaults(func=_cmd_skeleton)

    run = sub.add_parser("run", help="answer and judge every (item, model) cell")
    run.add_argument("--testset", required=True)
    run.add_argument("--judge", required=True, help="judge provider config JSON")
    run.add_argument(
        "--models", required=True, nargs="+", help="candidate provider config JSONs"
    )
    run.add_argument("--rounds", type=int, default=3)
    run.add_argument("--scores", required=True, help="score log output (JSONL)")
    run.add_argument("--allow-partial", action="store_true")
    run.set_defaults(func=_cmd_run)

    report = sub.add_parser("report", help="aggregate a score log into a table")
    report.add_argument("--scores", required=True)
    report.add_argument("--format", choices=FORMATS, default="table_text")
    report.add_argument("--estimator", choices=("sample", "population"), default="sample")
    report.set_defaults(func=_cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_arg_parser().parse_args(argv)
    try:
        result = args.func(args)
    except (
        LabelCountMismatch,
        BadTestset,
        EmptyScores,
        ProviderError,
        IoError,
        ParseError,
        OSError,
        ValueError,
    ) as exc:
        json.dump({"error": str(exc)}, sys.stdout)
        print()
        return 1
    if isinstance(result, str):
        sys.stdout.write(result)
    else:
        json.dump(result, sys.stdout, indent=2, ensure_ascii=False)
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())

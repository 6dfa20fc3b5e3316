"""Command line front end for building and inspecting tuning datasets."""

from __future__ import annotations

import argparse
import json
import sys

from ..gateway import SCENARIOS, ProviderError
from ..gateway.provider import gateway_from_dict
from .builder import BuildFailed, build_records
from .io import IoError, ParseError, emit_dataset, load_corpus, load_dataset
from .records import dataset_stats, validate_dataset


def _load_gateway(path: str):
    with open(path, encoding="utf-8") as handle:
        return gateway_from_dict(json.load(handle))


def _cmd_build(args: argparse.Namespace) -> dict:
    gateway = _load_gateway(args.provider)
    units = load_corpus(args.corpus)
    records, skips = build_records(
        units, args.scenario, gateway, skip_threshold=args.skip_threshold
    )
    emit_dataset(records, args.out)
    return {
        "command": "build",
        "scenario": args.scenario,
        "units": len(units),
        "records": len(records),
        "skipped": [{"unit": s.unit_id, "reason": s.reason} for s in skips],
        "out": args.out,
    }


def _cmd_validate(args: argparse.Namespace) -> dict:
    report = validate_dataset(load_dataset(args.file))
    return {"command": "validate", "file": args.file, **report.to_dict()}


def _cmd_stats(args: argparse.Namespace) -> dict:
    return {
        "command": "stats",
        "file": args.file,
        **dataset_stats(load_dataset(args.file)),
    }


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srltutor-tuning",
        description="Build, validate, and summarise chat tuning datasets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="generate records from a corpus directory")
    build.add_argument("--scenario", required=True, choices=SCENARIOS)
    build.add_argument("--corpus", required=True, help="directory of corpus files")
    build.add_argument("--out", required=True, help="output JSONL path")
    build.add_argument("--provider", required=True, help="provider config JSON file")
    build.add_argument("--skip-threshold", type=float, default=0.5)
    build.set_defaults(func=_cmd_build)

    validate = sub.add_parser("validate", help="check an existing dataset")
    validate.add_argument("file")
    validate.set_defaults(func=_cmd_validate)

    stats = sub.add_parser("stats", help="summarise an existing dataset")
    stats.add_argument("file")
    stats.set_defaults(func=_cmd_stats)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_arg_parser().parse_args(argv)
    try:
        report = args.func(args)
    except (BuildFailed, ProviderError, IoError, ParseError, OSError, ValueError) as exc:
        json.dump({"error": str(exc)}, sys.stdout)
        print()
        return 1
    json.dump(report, sys.stdout, indent=2, ensure_ascii=False)
    print()
    return 0


if __name__ == "__main__":
    sys.exit(main())

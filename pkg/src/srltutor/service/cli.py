"""Command line entry point for the tutoring service."""

from __future__ import annotations

import argparse
import dataclasses
import sys

from ..errors import SrlTutorError
from .app import create_app
from .config import ENV_PREFIX, load_config


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srltutor-serve",
        description="Run the tutoring HTTP service.",
        epilog=(
            f"Environment variables with the {ENV_PREFIX} prefix override the "
            f"config file, e.g. {ENV_PREFIX}LISTEN, {ENV_PREFIX}DATA_DIR."
        ),
    )
    parser.add_argument("--config", help="path to a JSON config file")
    parser.add_argument("--listen", help="host:port to bind, overrides config")
    parser.add_argument("--data-dir", help="session storage directory, overrides config")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config)
        if args.listen:
            config = dataclasses.replace(config, listen=args.listen)
        if args.data_dir:
            config = dataclasses.replace(config, data_dir=args.data_dir)
        app = create_app(config)
    except (SrlTutorError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    import uvicorn

    host, port = config.host_and_port()
    uvicorn.run(app, host=host, port=port, log_level="info")
    return 0


if __name__ == "__main__":
    sys.exit(main())

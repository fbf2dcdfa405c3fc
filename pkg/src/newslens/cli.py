"""Command-line entry points: ``ingest`` and ``serve``."""
from __future__ import annotations

import argparse
import json
import sys

from .config import IngestConfig, ServerConfig
from .errors import NewslensError
from .store import Store, ingest_corpus


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="newslens")
    sub = parser.add_subparsers(dest="command", required=True)

    ingest = sub.add_parser("ingest", help="ingest a CSV corpus into a store directory")
    ingest.add_argument("--corpus", required=True, help="path to the corpus CSV")
    ingest.add_argument("--config", required=True, help="ingest config file")
    ingest.add_argument("--out", required=True, help="store directory to create")

    serve = sub.add_parser("serve", help="serve the HTTP API over a store")
    serve.add_argument("--store", required=True, help="store directory")
    serve.add_argument("--config", default=None, help="server config file")
    serve.add_argument("--host", default=None, help="override listen address")
    serve.add_argument("--port", type=int, default=None, help="override listen port")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "ingest":
            report = ingest_corpus(args.corpus, IngestConfig.from_file(args.config), args.out)
            print(json.dumps(report.to_json(), indent=2))
            return 0
        if args.command == "serve":
            config = (
                ServerConfig.from_file(args.config) if args.config else ServerConfig()
            )
            if args.host:
                config.host = args.host
            if args.port:
                config.port = args.port
            store = Store(args.store)

            import uvicorn

            from .server import create_app

            uvicorn.run(create_app(store, config), host=config.host, port=config.port)
            return 0
    except (NewslensError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 1


if __name__ == "__main__":
    sys.exit(main())

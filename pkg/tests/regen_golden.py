#!/usr/bin/env python3
"""Regenerate the golden schema files in tests/golden/ from the bundled
fixture corpus.  Run after an intentional API schema change:

    python tests/regen_golden.py
"""
from __future__ import annotations

import json
import sys
import tempfile
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from fastapi.testclient import TestClient

from newslens.config import IngestConfig, ServerConfig
from newslens.server import create_app
from newslens.store import Store, ingest_corpus
from schema_tools import GOLDEN_DIR, GOLDEN_REQUESTS, dump_schema

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def main() -> None:
    GOLDEN_DIR.mkdir(exist_ok=True)
    with tempfile.TemporaryDirectory() as tmp:
        store_dir = Path(tmp) / "store"
        ingest_corpus(FIXTURES / "corpus.csv", IngestConfig.from_file(FIXTURES / "ingest.cfg"), store_dir)
        app = create_app(Store(store_dir), ServerConfig())
        with TestClient(app, raise_server_exceptions=False) as client:
            for name, method, path, body in GOLDEN_REQUESTS:
                response = (
                    client.request(method, path, json=body)
                    if body is not None
                    else client.request(method, path)
                )
                payload = json.loads(response.content)
                out = GOLDEN_DIR / f"{name}.schema.json"
                out.write_text(dump_schema(payload), encoding="utf-8")
                print(f"wrote {out.relative_to(GOLDEN_DIR.parent)} (status {response.status_code})")


if __name__ == "__main__":
    main()

from __future__ import annotations

import json

from conftest import FIXTURES_DIR
from newslens import cli
from newslens.store import Store


def test_ingest_command(tmp_path, capsys):
    out_dir = tmp_path / "store"
    code = cli.main(
        [
            "ingest",
            "--corpus", str(FIXTURES_DIR / "corpus.csv"),
            "--config", str(FIXTURES_DIR / "ingest.cfg"),
            "--out", str(out_dir),
        ]
    )
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["accepted"] == 50
    assert Store(out_dir).manifest.article_count == 50


def test_ingest_error_exit_code(tmp_path, capsys):
    code = cli.main(
        [
            "ingest",
            "--corpus", str(FIXTURES_DIR / "corpus.csv"),
            "--config", str(tmp_path / "missing.cfg"),
            "--out", str(tmp_path / "store"),
        ]
    )
    assert code == 2  # config file missing


def test_flag_spellings_are_fixed():
    parser = cli.build_parser()
    ingest_args = parser.parse_args(["ingest", "--corpus", "c", "--config", "f", "--out", "o"])
    assert (ingest_args.corpus, ingest_args.config, ingest_args.out) == ("c", "f", "o")
    serve_args = parser.parse_args(["serve", "--store", "s", "--config", "f"])
    assert (serve_args.store, serve_args.config) == ("s", "f")


def test_serve_wires_uvicorn(tmp_path, monkeypatch, capsys):
    out_dir = tmp_path / "store"
    cli.main(
        [
            "ingest",
            "--corpus", str(FIXTURES_DIR / "corpus.csv"),
            "--config", str(FIXTURES_DIR / "ingest.cfg"),
            "--out", str(out_dir),
        ]
    )
    captured = {}

    def fake_run(app, host, port):
        captured["host"] = host
        captured["port"] = port
        captured["routes"] = {route.path for route in app.routes}

    import uvicorn

    monkeypatch.setattr(uvicorn, "run", fake_run)
    code = cli.main(["serve", "--store", str(out_dir), "--port", "9123"])
    assert code == 0
    assert captured["port"] == 9123
    assert "/api/search" in captured["routes"]
    assert "/api/layout" in captured["routes"]

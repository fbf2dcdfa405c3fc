from __future__ import annotations

import pytest

from newslens.config import IngestConfig, ServerConfig, parse_config_file
from newslens.errors import ValidationError


def test_parse_key_value_lines(tmp_path):
    path = tmp_path / "c.cfg"
    path.write_text("# comment\nkey = value\nspaced =  padded value \n\n", encoding="utf-8")
    assert parse_config_file(path) == {"key": "value", "spaced": "padded value"}


def test_malformed_line_rejected(tmp_path):
    path = tmp_path / "c.cfg"
    path.write_text("just a line without equals\n", encoding="utf-8")
    with pytest.raises(ValidationError, match="line 1"):
        parse_config_file(path)


def test_ingest_config_resolves_relative_paths(tmp_path):
    (tmp_path / "lex.tsv").write_text("joy\tjoy\t1\n", encoding="utf-8")
    cfg = tmp_path / "ingest.cfg"
    cfg.write_text("lexicon = lex.tsv\ncolumn.site = source\nkeyword_top_k = 7\n", encoding="utf-8")
    config = IngestConfig.from_file(cfg)
    assert config.lexicon == (tmp_path / "lex.tsv").resolve()
    assert config.columns["site"] == "source"
    assert config.columns["title"] == "title"
    assert config.keyword_top_k == 7
    assert config.stopwords is None


def test_ingest_config_requires_lexicon(tmp_path):
    cfg = tmp_path / "ingest.cfg"
    cfg.write_text("corpus_name = x\n", encoding="utf-8")
    with pytest.raises(ValidationError):
        IngestConfig.from_file(cfg)


def test_ingest_config_rejects_unknown_column(tmp_path):
    (tmp_path / "lex.tsv").write_text("", encoding="utf-8")
    cfg = tmp_path / "ingest.cfg"
    cfg.write_text("lexicon = lex.tsv\ncolumn.nope = x\n", encoding="utf-8")
    with pytest.raises(ValidationError):
        IngestConfig.from_file(cfg)


def test_server_config_defaults_and_file(tmp_path):
    config = ServerConfig()
    assert config.silhouette_k_min == 2 and config.silhouette_k_max == 10
    path = tmp_path / "server.cfg"
    path.write_text(
        "port = 9001\ndefault_seed = 3\nsite_edge_threshold = 0.5\n"
        "cors_origins = http://a.example, http://b.example\n",
        encoding="utf-8",
    )
    loaded = ServerConfig.from_file(path)
    assert loaded.port == 9001
    assert loaded.default_seed == 3
    assert loaded.site_edge_threshold == 0.5
    assert loaded.cors_origins == ("http://a.example", "http://b.example")


def test_server_config_validates_bounds():
    with pytest.raises(ValidationError):
        ServerConfig(port=0)
    with pytest.raises(ValidationError):
        ServerConfig(silhouette_k_min=1)
    with pytest.raises(ValidationError):
        ServerConfig(silhouette_k_min=5, silhouette_k_max=3)

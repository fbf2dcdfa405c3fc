"""Key-value config files for ingest and the server.

Format: one ``key = value`` pair per line, ``#`` comments and blank lines
ignored.  Paths are resolved relative to the config file's directory.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import ValidationError

# Logical column -> default CSV header name (the All the News convention).
DEFAULT_COLUMNS = {
    "id": "id",
    "title": "title",
    "site": "publication",
    "author": "author",
    "date": "date",
    "body": "content",
    "url": "url",
}


def parse_config_file(path: str | Path) -> dict[str, str]:
    values: dict[str, str] = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ValidationError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, _, value = stripped.partition("=")
        values[key.strip()] = value.strip()
    return values


@dataclass
class IngestConfig:
    """Resources and column remapping used by corpus ingest."""

    lexicon: Path
    gazetteer_person: Path | None = None
    gazetteer_location: Path | None = None
    gazetteer_organization: Path | None = None
    stopwords: Path | None = None  # None -> packaged default list
    entity_sidecar: Path | None = None
    keyword_top_k: int = 20
    corpus_name: str = "corpus"
    columns: dict[str, str] = field(default_factory=lambda: dict(DEFAULT_COLUMNS))

    @classmethod
    def from_file(cls, path: str | Path) -> "IngestConfig":
        path = Path(path)
        raw = parse_config_file(path)
        base = path.parent

        def resolve(key: str) -> Path | None:
            return (base / raw[key]).resolve() if key in raw else None

        lexicon = resolve("lexicon")
        if lexicon is None:
            raise ValidationError("ingest config must set 'lexicon'", field="lexicon")
        columns = dict(DEFAULT_COLUMNS)
        for key, value in raw.items():
            if key.startswith("column."):
                logical = key.split(".", 1)[1]
                if logical not in DEFAULT_COLUMNS:
                    raise ValidationError(f"unknown column mapping {key!r}", field=key)
                columns[logical] = value
        return cls(
            lexicon=lexicon,
            gazetteer_person=resolve("gazetteer.person"),
            gazetteer_location=resolve("gazetteer.location"),
            gazetteer_organization=resolve("gazetteer.organization"),
            stopwords=resolve("stopwords"),
            entity_sidecar=resolve("entity_sidecar"),
            keyword_top_k=int(raw.get("keyword_top_k", 20)),
            corpus_name=raw.get("corpus_name", "corpus"),
            columns=columns,
        )


@dataclass
class ServerConfig:
    """Server defaults; every value may be overridden per request where the
    API allows a parameter."""

    host: str = "127.0.0.1"
    port: int = 8000
    default_seed: int = 7
    default_k: int = 4
    silhouette_k_min: int = 2
    silhouette_k_max: int = 10
    site_edge_threshold: float = 0.2
    heatmap_top_n: int = 10
    keyword_top_k: int = 20
    cors_origins: tuple[str, ...] = ()
    ui_dir: Path | None = None

    def __post_init__(self) -> None:
        if not (0 < self.port < 65536):
            raise ValidationError("port out of range", field="port")
        if not (2 <= self.silhouette_k_min <= self.silhouette_k_max):
            raise ValidationError(
                "silhouette bounds must satisfy 2 <= low <= high", field="silhouette_k_min"
            )

    @classmethod
    def from_file(cls, path: str | Path) -> "ServerConfig":
        path = Path(path)
        raw = parse_config_file(path)
        base = path.parent
        kwargs: dict = {}
        if "host" in raw:
            kwargs["host"] = raw["host"]
        for key in (
            "port",
            "default_seed",
            "default_k",
            "silhouette_k_min",
            "silhouette_k_max",
            "heatmap_top_n",
            "keyword_top_k",
        ):
            if key in raw:
                kwargs[key] = int(raw[key])
        if "site_edge_threshold" in raw:
            kwargs["site_edge_threshold"] = float(raw["site_edge_threshold"])
        if "cors_origins" in raw:
            kwargs["cors_origins"] = tuple(
                origin.strip() for origin in raw["cors_origins"].split(",") if origin.strip()
            )
        if "ui_dir" in raw:
            kwargs["ui_dir"] = (base / raw["ui_dir"]).resolve()
        return cls(**kwargs)

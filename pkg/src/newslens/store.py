"""SQLite-backed article store: CSV ingest, manifest, read-only queries.

A store is a single directory holding ``store.db`` (articles, features,
lexicon, meta) and ``manifest.json``.  After ingest the store is immutable
and safe for any number of concurrent readers; each reader thread gets its
own read-only connection.
"""
from __future__ import annotations

import csv
import hashlib
import io
import json
import re
import sqlite3
import threading
from dataclasses import dataclass
from datetime import date
from pathlib import Path
from typing import BinaryIO, Iterable

import numpy as np

from .config import IngestConfig
from .errors import IngestError, NotFoundError
from .features import DocumentFrequencies, FeatureExtractor
from .lexicon import EmotionLexicon, Gazetteer, _phrase_tokens
from .models import (
    EMOTIONS,
    ENTITY_TYPES,
    Article,
    EntitySpan,
    FeatureSet,
    canonical_site_key,
)
from .text import default_stopwords, load_stopwords

DB_NAME = "store.db"
MANIFEST_NAME = "manifest.json"

_DATE_FORMATS = (
    re.compile(r"^(\d{4})-(\d{2})-(\d{2})$"),
    re.compile(r"^(\d{4})/(\d{2})/(\d{2})$"),
)

_SCHEMA = """
CREATE TABLE meta (key TEXT PRIMARY KEY, value TEXT NOT NULL);
CREATE TABLE articles (
    id TEXT PRIMARY KEY,
    title TEXT NOT NULL,
    site TEXT NOT NULL,
    site_key TEXT NOT NULL,
    author TEXT,
    published_at TEXT NOT NULL,
    url TEXT,
    body TEXT NOT NULL,
    row_order INTEGER NOT NULL
);
CREATE INDEX idx_articles_date ON articles (published_at);
CREATE INDEX idx_articles_site ON articles (site_key);
CREATE TABLE features (
    article_id TEXT PRIMARY KEY REFERENCES articles (id),
    keywords TEXT NOT NULL,
    entities TEXT NOT NULL,
    entity_spans TEXT NOT NULL,
    emotion TEXT NOT NULL,
    term_counts TEXT NOT NULL,
    token_count INTEGER NOT NULL
);
CREATE TABLE lexicon (word TEXT NOT NULL, emotion TEXT NOT NULL);
"""


def parse_day(value: str) -> date | None:
    """Day-granularity date: YYYY-MM-DD or YYYY/MM/DD, zero padded.
    Returns None when the value does not parse as a valid calendar day."""
    value = value.strip()
    for pattern in _DATE_FORMATS:
        match = pattern.match(value)
        if match:
            try:
                return date(*(int(g) for g in match.groups()))
            except ValueError:
                return None
    return None


@dataclass
class IngestReport:
    accepted: int
    rejected: int
    reasons: dict[str, int]

    def to_json(self) -> dict:
        return {
            "accepted": self.accepted,
            "rejected": self.rejected,
            "reasons": dict(sorted(self.reasons.items())),
        }


@dataclass
class StoreManifest:
    corpus_name: str
    article_count: int
    site_list: list[tuple[str, int]]
    date_range: tuple[str | None, str | None]
    ingest_config_digest: str

    def to_json(self) -> dict:
        return {
            "corpus_name": self.corpus_name,
            "article_count": self.article_count,
            "site_list": [[site, count] for site, count in self.site_list],
            "date_range": {"min": self.date_range[0], "max": self.date_range[1]},
            "ingest_config_digest": self.ingest_config_digest,
        }

    @classmethod
    def from_json(cls, payload: dict) -> "StoreManifest":
        return cls(
            corpus_name=payload["corpus_name"],
            article_count=payload["article_count"],
            site_list=[(site, count) for site, count in payload["site_list"]],
            date_range=(payload["date_range"]["min"], payload["date_range"]["max"]),
            ingest_config_digest=payload["ingest_config_digest"],
        )


def _config_digest(config: IngestConfig, stopwords: frozenset[str]) -> str:
    digest = hashlib.sha256()
    parts = [
        ("lexicon", config.lexicon),
        ("gazetteer.person", config.gazetteer_person),
        ("gazetteer.location", config.gazetteer_location),
        ("gazetteer.organization", config.gazetteer_organization),
        ("entity_sidecar", config.entity_sidecar),
    ]
    for label, path in parts:
        digest.update(label.encode() + b"\x00")
        digest.update(Path(path).read_bytes() if path is not None else b"-")
        digest.update(b"\x00")
    # hash the effective list so the packaged default participates too
    digest.update(b"stopwords\x00" + "\n".join(sorted(stopwords)).encode() + b"\x00")
    digest.update(f"top_k={config.keyword_top_k}".encode())
    return digest.hexdigest()


def _load_sidecar(path: Path) -> dict[str, list[tuple[int, int, str, str]]]:
    """Entity sidecar: JSON Lines with article_id, type, surface, start, end."""
    spans: dict[str, list[tuple[int, int, str, str]]] = {}
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise IngestError(f"entity sidecar line {lineno}: invalid JSON") from exc
        etype = record.get("type")
        if etype not in ENTITY_TYPES:
            raise IngestError(f"entity sidecar line {lineno}: unknown entity type {etype!r}")
        canonical = " ".join(_phrase_tokens(str(record["surface"])))
        if not canonical:
            raise IngestError(f"entity sidecar line {lineno}: empty surface")
        spans.setdefault(str(record["article_id"]), []).append(
            (int(record["start"]), int(record["end"]), etype, canonical)
        )
    return spans


@dataclass
class _PendingArticle:
    article: Article
    row_order: int


def _open_csv(csv_source: BinaryIO | bytes | str | Path) -> io.TextIOWrapper:
    if isinstance(csv_source, (str, Path)):
        return open(csv_source, "r", encoding="utf-8", newline="")
    if isinstance(csv_source, bytes):
        return io.TextIOWrapper(io.BytesIO(csv_source), encoding="utf-8", newline="")
    return io.TextIOWrapper(csv_source, encoding="utf-8", newline="")


def ingest_corpus(
    csv_source: BinaryIO | bytes | str | Path,
    config: IngestConfig,
    out_dir: str | Path,
) -> IngestReport:
    """Validate and store every CSV row, then derive features for all
    accepted articles (document frequencies are computed in a first pass
    and frozen before feature extraction).

    Row-level problems (unparseable date, empty body, missing site) skip
    the row and are tallied; a missing required column or a duplicate
    explicit id is fatal.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    db_path = out_dir / DB_NAME
    if db_path.exists():
        raise IngestError(f"store already exists at {db_path}")

    stopwords = (
        load_stopwords(config.stopwords) if config.stopwords is not None else default_stopwords()
    )
    lexicon = EmotionLexicon.from_file(config.lexicon)
    gazetteer = Gazetteer.from_files(
        config.gazetteer_person, config.gazetteer_location, config.gazetteer_organization
    )
    sidecar = _load_sidecar(config.entity_sidecar) if config.entity_sidecar else {}
    extractor = FeatureExtractor(stopwords, lexicon, gazetteer, top_k=config.keyword_top_k)

    text_stream = _open_csv(csv_source)
    reader = csv.DictReader(text_stream)
    header = reader.fieldnames or []
    for logical in ("title", "site", "date", "body"):
        column = config.columns[logical]
        if column not in header:
            raise IngestError(f"missing required column {column!r}")
    has_id_column = config.columns["id"] in header
    has_author = config.columns["author"] in header
    has_url = config.columns["url"] in header

    accepted: list[_PendingArticle] = []
    reasons: dict[str, int] = {}
    seen_ids: set[str] = set()
    site_display: dict[str, str] = {}
    total = 0

    def reject(reason: str) -> None:
        reasons[reason] = reasons.get(reason, 0) + 1

    for row_order, row in enumerate(reader, 1):
        total += 1
        if has_id_column:
            article_id = (row.get(config.columns["id"]) or "").strip()
            if not article_id:
                reject("empty_id")
                continue
            if article_id in seen_ids:
                raise IngestError(f"duplicate article id {article_id!r}")
            seen_ids.add(article_id)
        else:
            article_id = f"a{row_order}"
        site = (row.get(config.columns["site"]) or "").strip()
        if not site:
            reject("missing_site")
            continue
        published = parse_day(row.get(config.columns["date"]) or "")
        if published is None:
            reject("bad_date")
            continue
        body = row.get(config.columns["body"]) or ""
        if not body.strip():
            reject("empty_body")
            continue
        site_key = canonical_site_key(site)
        site_display.setdefault(site_key, site)
        author = (row.get(config.columns["author"]) or "").strip() if has_author else ""
        url = (row.get(config.columns["url"]) or "").strip() if has_url else ""
        accepted.append(
            _PendingArticle(
                article=Article(
                    id=article_id,
                    title=(row.get(config.columns["title"]) or "").strip(),
                    site=site_display[site_key],
                    author=author or None,
                    published_at=published,
                    url=url or None,
                    body=body,
                ),
                row_order=row_order,
            )
        )
    if isinstance(csv_source, (str, Path)):
        text_stream.close()
    else:
        text_stream.detach()  # leave caller-owned streams open

    # First pass: corpus document frequencies over post-stopword terms.
    tokenized = {p.article.id: extractor.tokenize(p.article.body) for p in accepted}
    df: dict[str, int] = {}
    for tok in tokenized.values():
        for term in set(tok.terms):
            df[term] = df.get(term, 0) + 1
    stats = DocumentFrequencies(df=df, n_docs=len(accepted))

    conn = sqlite3.connect(db_path)
    try:
        conn.executescript(_SCHEMA)
        for pending in accepted:
            art = pending.article
            conn.execute(
                "INSERT INTO articles (id, title, site, site_key, author, published_at, url,"
                " body, row_order) VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?)",
                (
                    art.id,
                    art.title,
                    art.site,
                    art.site_key,
                    art.author,
                    art.published_at.isoformat(),
                    art.url,
                    art.body,
                    pending.row_order,
                ),
            )
            fs = extractor.extract(art.id, art.body, stats, sidecar.get(art.id))
            conn.execute(
                "INSERT INTO features (article_id, keywords, entities, entity_spans, emotion,"
                " term_counts, token_count) VALUES (?, ?, ?, ?, ?, ?, ?)",
                (
                    art.id,
                    json.dumps([[t, s] for t, s in fs.keywords]),
                    json.dumps({e: sorted(v) for e, v in fs.entities.items()}),
                    json.dumps([[sp.start, sp.end, sp.type, sp.canonical] for sp in fs.entity_spans]),
                    json.dumps(list(fs.emotion_vector)),
                    json.dumps(fs.term_counts, sort_keys=True),
                    fs.token_count,
                ),
            )
        for word in sorted(lexicon._mapping):
            for emotion in sorted(lexicon.emotions_for(word)):
                conn.execute("INSERT INTO lexicon (word, emotion) VALUES (?, ?)", (word, emotion))
        meta = {
            "corpus_name": config.corpus_name,
            "ingest_config_digest": _config_digest(config, stopwords),
            "stopwords": "\n".join(sorted(stopwords)),
            "keyword_top_k": str(config.keyword_top_k),
        }
        for key, value in meta.items():
            conn.execute("INSERT INTO meta (key, value) VALUES (?, ?)", (key, value))
        conn.commit()
    finally:
        conn.close()

    site_counts: dict[str, int] = {}
    for pending in accepted:
        site_counts[pending.article.site_key] = site_counts.get(pending.article.site_key, 0) + 1
    dates = sorted(p.article.published_at for p in accepted)
    manifest = StoreManifest(
        corpus_name=config.corpus_name,
        article_count=len(accepted),
        site_list=[
            (site_display[key], site_counts[key]) for key in sorted(site_counts)
        ],
        date_range=(
            dates[0].isoformat() if dates else None,
            dates[-1].isoformat() if dates else None,
        ),
        ingest_config_digest=meta["ingest_config_digest"],
    )
    manifest_bytes = json.dumps(manifest.to_json(), sort_keys=True, indent=2).encode() + b"\n"
    (out_dir / MANIFEST_NAME).write_bytes(manifest_bytes)

    return IngestReport(accepted=len(accepted), rejected=total - len(accepted), reasons=reasons)


class Store:
    """Read-only view over an ingested store directory."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        db_path = self.path / DB_NAME
        manifest_path = self.path / MANIFEST_NAME
        if not db_path.exists() or not manifest_path.exists():
            raise NotFoundError(f"no store at {self.path}")
        self._db_uri = f"file:{db_path}?mode=ro"
        self._local = threading.local()
        self.manifest = StoreManifest.from_json(
            json.loads(manifest_path.read_text(encoding="utf-8"))
        )
        self._lexicon: EmotionLexicon | None = None
        self._stopwords: frozenset[str] | None = None
        self._entity_vocab: dict[str, tuple[str, ...]] | None = None
        self._conn()  # fail fast on unreadable DB

    def _conn(self) -> sqlite3.Connection:
        conn = getattr(self._local, "conn", None)
        if conn is None:
            conn = sqlite3.connect(self._db_uri, uri=True)
            conn.row_factory = sqlite3.Row
            self._local.conn = conn
        return conn

    # -- articles ---------------------------------------------------------

    def get_article(self, article_id: str) -> Article:
        row = self._conn().execute(
            "SELECT * FROM articles WHERE id = ?", (article_id,)
        ).fetchone()
        if row is None:
            raise NotFoundError(f"unknown article id {article_id!r}")
        return _row_to_article(row)

    def article_ids(self) -> list[str]:
        rows = self._conn().execute("SELECT id FROM articles ORDER BY row_order").fetchall()
        return [row["id"] for row in rows]

    def has_article(self, article_id: str) -> bool:
        row = self._conn().execute(
            "SELECT 1 FROM articles WHERE id = ?", (article_id,)
        ).fetchone()
        return row is not None

    def list_sites(self) -> list[tuple[str, int]]:
        rows = self._conn().execute(
            "SELECT site, COUNT(*) AS n FROM articles GROUP BY site_key ORDER BY site_key"
        ).fetchall()
        return [(row["site"], row["n"]) for row in rows]

    def candidates(
        self,
        date_from: date,
        date_to: date,
        include_keys: frozenset[str] | None = None,
        exclude_keys: frozenset[str] = frozenset(),
    ) -> list[Article]:
        """Articles inside the window that pass the site filters, in ingest
        order.  Bodies are included (retrieval needs none of them, but the
        rows are small at query scale)."""
        rows = self._conn().execute(
            "SELECT * FROM articles WHERE published_at >= ? AND published_at <= ?"
            " ORDER BY row_order",
            (date_from.isoformat(), date_to.isoformat()),
        ).fetchall()
        out = []
        for row in rows:
            key = row["site_key"]
            if include_keys is not None and key not in include_keys:
                continue
            if key in exclude_keys:
                continue
            out.append(_row_to_article(row))
        return out

    def dates(self, ids: Iterable[str]) -> dict[str, date]:
        return {aid: self.get_article(aid).published_at for aid in ids}

    # -- features ---------------------------------------------------------

    def feature_set(self, article_id: str, presence: bool = False) -> FeatureSet:
        row = self._conn().execute(
            "SELECT * FROM features WHERE article_id = ?", (article_id,)
        ).fetchone()
        if row is None:
            raise NotFoundError(f"unknown article id {article_id!r}")
        entities = {
            etype: frozenset(values)
            for etype, values in json.loads(row["entities"]).items()
        }
        fs = FeatureSet(
            article_id=article_id,
            keywords=tuple((t, float(s)) for t, s in json.loads(row["keywords"])),
            entities=entities,
            emotion_vector=np.array(json.loads(row["emotion"]), dtype=float),
            token_count=row["token_count"],
            term_counts={t: int(c) for t, c in json.loads(row["term_counts"]).items()},
            entity_spans=tuple(
                EntitySpan(start=s, end=e, type=t, canonical=c)
                for s, e, t, c in json.loads(row["entity_spans"])
            ),
        )
        if presence:
            vocab = self.entity_vocabulary()
            fs.entity_presence = {
                etype: np.array(
                    [1 if term in fs.entities[etype] else 0 for term in vocab[etype]],
                    dtype=np.uint8,
                )
                for etype in ENTITY_TYPES
            }
        return fs

    def feature_sets(self, ids: Iterable[str]) -> dict[str, FeatureSet]:
        return {aid: self.feature_set(aid) for aid in ids}

    def term_counts(self, article_id: str) -> dict[str, int]:
        row = self._conn().execute(
            "SELECT term_counts FROM features WHERE article_id = ?", (article_id,)
        ).fetchone()
        if row is None:
            raise NotFoundError(f"unknown article id {article_id!r}")
        return {t: int(c) for t, c in json.loads(row["term_counts"]).items()}

    def emotion_vectors(self, ids: list[str]) -> np.ndarray:
        vectors = [self.feature_set(aid).emotion_vector for aid in ids]
        return np.array(vectors, dtype=float).reshape(len(ids), len(EMOTIONS))

    def entity_vocabulary(self) -> dict[str, tuple[str, ...]]:
        """Sorted corpus-wide entity vocabulary per type (presence-vector
        basis)."""
        if self._entity_vocab is None:
            vocab: dict[str, set[str]] = {etype: set() for etype in ENTITY_TYPES}
            for row in self._conn().execute("SELECT entities FROM features").fetchall():
                for etype, values in json.loads(row["entities"]).items():
                    vocab[etype].update(values)
            self._entity_vocab = {etype: tuple(sorted(vocab[etype])) for etype in ENTITY_TYPES}
        return self._entity_vocab

    # -- ingest-time resources -------------------------------------------

    def lexicon(self) -> EmotionLexicon:
        if self._lexicon is None:
            mapping: dict[str, set[str]] = {}
            for row in self._conn().execute("SELECT word, emotion FROM lexicon").fetchall():
                mapping.setdefault(row["word"], set()).add(row["emotion"])
            self._lexicon = EmotionLexicon({w: frozenset(e) for w, e in mapping.items()})
        return self._lexicon

    def stopwords(self) -> frozenset[str]:
        if self._stopwords is None:
            value = self._meta("stopwords")
            self._stopwords = frozenset(w for w in value.splitlines() if w)
        return self._stopwords

    def _meta(self, key: str) -> str:
        row = self._conn().execute("SELECT value FROM meta WHERE key = ?", (key,)).fetchone()
        if row is None:
            raise NotFoundError(f"missing store metadata {key!r}")
        return row["value"]

    def close(self) -> None:
        conn = getattr(self._local, "conn", None)
        if conn is not None:
            conn.close()
            self._local.conn = None


def _row_to_article(row: sqlite3.Row) -> Article:
    return Article(
        id=row["id"],
        title=row["title"],
        site=row["site"],
        author=row["author"],
        published_at=date.fromisoformat(row["published_at"]),
        url=row["url"],
        body=row["body"],
    )

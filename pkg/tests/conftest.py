from __future__ import annotations

import csv
import io
from pathlib import Path

import pytest

from newslens.config import IngestConfig
from newslens.store import Store, ingest_corpus

FIXTURES_DIR = Path(__file__).resolve().parent.parent / "fixtures"

# Minimal resources for inline test corpora.
TINY_LEXICON = """\
victory\tjoy\t1
joy\tjoy\t1
hope\tanticipation\t1
fear\tfear\t1
war\tfear\t1
war\tanger\t1
grief\tsadness\t1
"""

TINY_STOPWORDS = "the\na\nof\nin\nand\n"

TINY_PERSONS = "Donald Trump\nHillary Clinton\nTrump\n"
TINY_LOCATIONS = "Phoenix\nOhio\nNew York\nNew York City\n"
TINY_ORGS = "White House\nSenate\n"


def write_ingest_setup(
    directory: Path,
    lexicon: str = TINY_LEXICON,
    stopwords: str = TINY_STOPWORDS,
    persons: str = TINY_PERSONS,
    locations: str = TINY_LOCATIONS,
    organizations: str = TINY_ORGS,
    extra_config: str = "",
) -> Path:
    """Create lexicon/gazetteer/stopword files plus an ingest config in
    ``directory``; returns the config path."""
    (directory / "lexicon.tsv").write_text(lexicon, encoding="utf-8")
    (directory / "stopwords.txt").write_text(stopwords, encoding="utf-8")
    (directory / "persons.txt").write_text(persons, encoding="utf-8")
    (directory / "locations.txt").write_text(locations, encoding="utf-8")
    (directory / "orgs.txt").write_text(organizations, encoding="utf-8")
    config = directory / "ingest.cfg"
    config.write_text(
        "lexicon = lexicon.tsv\n"
        "stopwords = stopwords.txt\n"
        "gazetteer.person = persons.txt\n"
        "gazetteer.location = locations.txt\n"
        "gazetteer.organization = orgs.txt\n"
        "corpus_name = test-corpus\n" + extra_config,
        encoding="utf-8",
    )
    return config


def rows_to_csv(rows: list[dict], fieldnames: list[str] | None = None) -> str:
    fieldnames = fieldnames or list(rows[0].keys())
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=fieldnames)
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def build_store(tmp_path: Path, rows: list[dict], name: str = "store", **setup_kwargs) -> Store:
    """Ingest ``rows`` (dicts with the default CSV columns) into a fresh
    store under ``tmp_path``."""
    config_path = write_ingest_setup(tmp_path, **setup_kwargs)
    csv_path = tmp_path / f"{name}.csv"
    csv_path.write_text(rows_to_csv(rows), encoding="utf-8")
    ingest_corpus(csv_path, IngestConfig.from_file(config_path), tmp_path / name)
    return Store(tmp_path / name)


def article_row(
    aid: str,
    body: str,
    site: str = "Alpha",
    day: str = "2016-11-09",
    title: str | None = None,
) -> dict:
    return {
        "id": aid,
        "title": title or f"title {aid}",
        "publication": site,
        "author": "desk",
        "date": day,
        "content": body,
        "url": f"https://example.org/{aid}",
    }


@pytest.fixture(scope="session")
def fixture_store(tmp_path_factory) -> Store:
    """The bundled 50-article two-site corpus, ingested once per session."""
    out = tmp_path_factory.mktemp("fixture-store")
    config = IngestConfig.from_file(FIXTURES_DIR / "ingest.cfg")
    report = ingest_corpus(FIXTURES_DIR / "corpus.csv", config, out / "store")
    assert report.accepted == 50 and report.rejected == 0
    return Store(out / "store")


# -- acceptance summary: one PASS/FAIL line per criterion ----------------------

_acceptance_results: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance_results.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for name, outcome in _acceptance_results:
        terminalreporter.write_line(f"  [{'PASS' if outcome == 'passed' else 'FAIL'}] {name}")

"""Constrained article search ranked by TF-IDF over the candidate set.

The query is treated as a small document: each distinct query term
contributes tf(term, article) * ln(N_c / df_c(term)), with both counts
taken over the candidate set (articles passing the date and site
filters).  Articles scoring 0 are dropped; ties break by earlier date,
then id.
"""
from __future__ import annotations

from dataclasses import dataclass
from datetime import date
from math import log

from .errors import ValidationError
from .models import Article, canonical_site_key
from .store import Store
from .text import tokenize


@dataclass(frozen=True)
class QuerySpec:
    keywords: tuple[str, ...]
    date_from: date | None = None
    date_to: date | None = None
    sites_include: frozenset[str] | None = None
    sites_exclude: frozenset[str] = frozenset()
    limit: int = 50
    balanced: bool = False

    def validate(self) -> None:
        if not self.keywords:
            raise ValidationError("query needs at least one keyword", field="keywords")
        if self.limit < 1:
            raise ValidationError("limit must be >= 1", field="limit")
        if self.date_from is not None and self.date_to is not None:
            if self.date_from > self.date_to:
                raise ValidationError("date_from must not exceed date_to", field="date_from")
        if self.sites_include is not None:
            include = {canonical_site_key(s) for s in self.sites_include}
            exclude = {canonical_site_key(s) for s in self.sites_exclude}
            if include & exclude:
                raise ValidationError(
                    "include and exclude site sets overlap", field="sites_include"
                )


@dataclass
class ResultSet:
    """Ranked (article_id, score) entries plus the query window and the
    per-day histogram of result counts."""

    entries: tuple[tuple[str, float], ...]
    date_from: date
    date_to: date
    histogram: tuple[int, ...]

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(aid for aid, _ in self.entries)

    @property
    def window_days(self) -> int:
        return (self.date_to - self.date_from).days + 1

    def to_json(self) -> dict:
        return {
            "results": [{"id": aid, "score": score} for aid, score in self.entries],
            "date_from": self.date_from.isoformat(),
            "date_to": self.date_to.isoformat(),
            "window_days": self.window_days,
            "histogram": list(self.histogram),
        }


def daily_histogram(
    dates: list[date], date_from: date, date_to: date
) -> tuple[int, ...]:
    """One zero-filled bucket per calendar day in the window, inclusive."""
    n_days = (date_to - date_from).days + 1
    buckets = [0] * n_days
    for d in dates:
        buckets[(d - date_from).days] += 1
    return tuple(buckets)


def _query_window(store: Store, query: QuerySpec) -> tuple[date, date]:
    date_from, date_to = query.date_from, query.date_to
    if date_from is None or date_to is None:
        lo, hi = store.manifest.date_range
        if lo is None or hi is None:
            raise ValidationError("store is empty; query needs an explicit date range")
        date_from = date_from or date.fromisoformat(lo)
        date_to = date_to or date.fromisoformat(hi)
    if date_from > date_to:
        raise ValidationError("date_from must not exceed date_to", field="date_from")
    return date_from, date_to


def _score_candidates(
    store: Store, candidates: list[Article], terms: tuple[str, ...]
) -> list[tuple[Article, float]]:
    counts = {art.id: store.term_counts(art.id) for art in candidates}
    n_c = len(candidates)
    df = {
        term: sum(1 for art in candidates if counts[art.id].get(term, 0) > 0)
        for term in terms
    }
    scored = []
    for art in candidates:
        score = 0.0
        for term in terms:
            tf = counts[art.id].get(term, 0)
            if tf > 0 and df[term] > 0:
                score += tf * log(n_c / df[term])
        if score > 0.0:
            scored.append((art, score))
    scored.sort(key=lambda item: (-item[1], item[0].published_at, item[0].id))
    return scored


def search(store: Store, query: QuerySpec) -> ResultSet:
    """Execute the query; dispatches to balanced mode when asked."""
    query.validate()
    if query.balanced:
        return search_balanced(store, query)
    date_from, date_to = _query_window(store, query)
    scored = _score_candidates(store, _candidates(store, query, date_from, date_to), _terms(store, query))
    top = scored[: query.limit]
    return _result_set(store, top, date_from, date_to)


def search_balanced(store: Store, query: QuerySpec) -> ResultSet:
    """Per-site quota sampling: floor(limit / number of sites with at least
    one scoring candidate) articles per site, shortfall not redistributed."""
    query.validate()
    date_from, date_to = _query_window(store, query)
    scored = _score_candidates(store, _candidates(store, query, date_from, date_to), _terms(store, query))
    by_site: dict[str, list[tuple[Article, float]]] = {}
    for art, score in scored:
        by_site.setdefault(art.site_key, []).append((art, score))
    if not by_site:
        return _result_set(store, [], date_from, date_to)
    quota = query.limit // len(by_site)
    merged = [item for site in by_site.values() for item in site[:quota]]
    merged.sort(key=lambda item: (-item[1], item[0].published_at, item[0].id))
    return _result_set(store, merged, date_from, date_to)


def _terms(store: Store, query: QuerySpec) -> tuple[str, ...]:
    # Query keywords go through the same tokenize + stopword pipeline as
    # article bodies; distinct terms only.
    tokenized = tokenize(" ".join(query.keywords), store.stopwords())
    seen: dict[str, None] = {}
    for term in tokenized.terms:
        seen.setdefault(term)
    return tuple(seen)


def _candidates(
    store: Store, query: QuerySpec, date_from: date, date_to: date
) -> list[Article]:
    include = (
        frozenset(canonical_site_key(s) for s in query.sites_include)
        if query.sites_include is not None
        else None
    )
    exclude = frozenset(canonical_site_key(s) for s in query.sites_exclude)
    return store.candidates(date_from, date_to, include, exclude)


def _result_set(
    store: Store,
    entries: list[tuple[Article, float]],
    date_from: date,
    date_to: date,
) -> ResultSet:
    histogram = daily_histogram([art.published_at for art, _ in entries], date_from, date_to)
    return ResultSet(
        entries=tuple((art.id, score) for art, score in entries),
        date_from=date_from,
        date_to=date_to,
        histogram=histogram,
    )

"""Core domain types: articles and their derived feature sets."""
from __future__ import annotations

from dataclasses import dataclass, field
from datetime import date

import numpy as np

# Canonical component order of the emotion style vector (alphabetical).
EMOTIONS: tuple[str, ...] = (
    "anger",
    "anticipation",
    "disgust",
    "fear",
    "joy",
    "sadness",
    "surprise",
    "trust",
)

ENTITY_TYPES: tuple[str, ...] = ("person", "location", "organization")


def canonical_site_key(site: str) -> str:
    """Identity key for case-insensitive site matching."""
    return site.strip().casefold()


@dataclass(frozen=True)
class Article:
    """One stored news item. ``published_at`` has day granularity."""

    id: str
    title: str
    site: str
    author: str | None
    published_at: date
    url: str | None
    body: str

    @property
    def site_key(self) -> str:
        return canonical_site_key(self.site)


@dataclass(frozen=True)
class EntitySpan:
    """A resolved entity occurrence in an article body.

    ``start``/``end`` are character offsets into the raw body;
    ``canonical`` is the normalized entity string used in entity sets.
    """

    start: int
    end: int
    type: str
    canonical: str


@dataclass
class FeatureSet:
    """Per-article derived data: keywords, typed entities, emotion vector.

    ``keywords`` is the top-K (term, tf-idf score) list, scores
    non-increasing.  ``entities`` maps entity type to the set of canonical
    strings found in the body.  ``emotion_vector`` is the 1x8 vector in
    EMOTIONS order with components n_i / N.  ``term_counts`` holds the
    post-stopword token frequencies the scores were derived from.
    ``entity_presence`` (optional, filled by the store on request) holds one
    binary vector per type over the corpus-wide entity vocabulary.
    """

    article_id: str
    keywords: tuple[tuple[str, float], ...]
    entities: dict[str, frozenset[str]]
    emotion_vector: np.ndarray
    token_count: int
    term_counts: dict[str, int] = field(default_factory=dict)
    entity_spans: tuple[EntitySpan, ...] = ()
    entity_presence: dict[str, np.ndarray] | None = None

    @property
    def keyword_terms(self) -> frozenset[str]:
        return frozenset(term for term, _ in self.keywords)

    def tagged_entities(self, types: tuple[str, ...] = ENTITY_TYPES) -> frozenset[str]:
        """Union of the selected typed entity sets, tagged by type so the
        same surface string in two types stays distinct."""
        tagged = set()
        for etype in types:
            for entity in self.entities.get(etype, ()):
                tagged.add(f"{etype}:{entity}")
        return frozenset(tagged)

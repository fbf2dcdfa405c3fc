"""Per-article feature derivation: keywords, typed entities, emotion vector."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import log
from typing import Iterable, Mapping, Sequence

import numpy as np

from .lexicon import EmotionLexicon, Gazetteer
from .models import EMOTIONS, ENTITY_TYPES, EntitySpan, FeatureSet
from .text import Token, TokenizedText, tokenize

_TYPE_PRIORITY = {etype: i for i, etype in enumerate(ENTITY_TYPES)}


@dataclass(frozen=True)
class DocumentFrequencies:
    """Corpus-level document frequencies, frozen after the first ingest pass."""

    df: Mapping[str, int]
    n_docs: int


def extract_keywords(
    terms: Iterable[str], stats: DocumentFrequencies, k: int
) -> tuple[tuple[str, float], ...]:
    """Top-k terms by tf*idf with tf the in-article count and
    idf = ln(n_docs / df).  Ties break lexicographically; scores are
    non-increasing.  Terms without a positive document frequency are
    skipped."""
    counts = Counter(terms)
    scored = []
    for term, tf in counts.items():
        df = stats.df.get(term, 0)
        if df <= 0:
            continue
        scored.append((term, tf * log(stats.n_docs / df)))
    scored.sort(key=lambda item: (-item[1], item[0]))
    return tuple(scored[:k])


def _resolve_spans(candidates: list[tuple[int, int, str, str]]) -> list[tuple[int, int, str, str]]:
    """Greedy overlap resolution: longest span first, then leftmost, then
    entity-type order.  ``candidates`` items are (start, end, type, canonical)."""
    ordered = sorted(
        candidates,
        key=lambda c: (-(c[1] - c[0]), c[0], _TYPE_PRIORITY.get(c[2], 99), c[3]),
    )
    accepted: list[tuple[int, int, str, str]] = []
    for cand in ordered:
        if all(cand[1] <= a[0] or cand[0] >= a[1] for a in accepted):
            accepted.append(cand)
    accepted.sort(key=lambda c: c[0])
    return accepted


def extract_entities(
    all_tokens: Sequence[Token],
    gazetteer: Gazetteer,
    stopwords: frozenset[str] = frozenset(),
) -> tuple[dict[str, frozenset[str]], tuple[EntitySpan, ...]]:
    """Match gazetteer phrases on whole-token boundaries.

    Matching scans every token position for the longest phrase of each
    type; overlaps are then resolved longest-first, leftmost next.  A
    single-token phrase that is itself a stopword never matches (entity
    sets stay disjoint from the stopword list).
    """
    texts = [t.text for t in all_tokens]
    max_len = gazetteer.max_phrase_length()
    candidates: list[tuple[int, int, str, str]] = []
    for i in range(len(texts)):
        upper = min(max_len, len(texts) - i)
        for length in range(upper, 0, -1):
            window = tuple(texts[i : i + length])
            for etype in ENTITY_TYPES:
                if window in gazetteer.phrases[etype]:
                    canonical = " ".join(window)
                    if length == 1 and window[0] in stopwords:
                        continue
                    candidates.append(
                        (all_tokens[i].start, all_tokens[i + length - 1].end, etype, canonical)
                    )
    resolved = _resolve_spans(candidates)
    entities: dict[str, set[str]] = {etype: set() for etype in ENTITY_TYPES}
    spans = []
    for start, end, etype, canonical in resolved:
        entities[etype].add(canonical)
        spans.append(EntitySpan(start=start, end=end, type=etype, canonical=canonical))
    return {e: frozenset(v) for e, v in entities.items()}, tuple(spans)


def emotion_vector(
    terms: Sequence[str], lexicon: EmotionLexicon
) -> tuple[np.ndarray, bool]:
    """Emotion style vector with components n_i / N over the post-stopword
    tokens.  A token carrying m emotions increments all m counters.

    Returns ``(vector, degenerate)``; degenerate flags N == 0, where the
    vector is all zeros.
    """
    n = len(terms)
    if n == 0:
        return np.zeros(len(EMOTIONS)), True
    counts = dict.fromkeys(EMOTIONS, 0)
    for term in terms:
        for emotion in lexicon.emotions_for(term):
            counts[emotion] += 1
    vector = np.array([counts[e] / n for e in EMOTIONS], dtype=float)
    return vector, False


class FeatureExtractor:
    """Bundles the ingest-time resources and derives one FeatureSet per
    article.  Pure given its inputs; corpus stats come from a prior pass."""

    def __init__(
        self,
        stopwords: frozenset[str],
        lexicon: EmotionLexicon,
        gazetteer: Gazetteer,
        top_k: int = 20,
    ):
        self.stopwords = stopwords
        self.lexicon = lexicon
        self.gazetteer = gazetteer
        self.top_k = top_k

    def tokenize(self, body: str) -> TokenizedText:
        return tokenize(body, self.stopwords)

    def extract(
        self,
        article_id: str,
        body: str,
        stats: DocumentFrequencies,
        sidecar_spans: Sequence[tuple[int, int, str, str]] | None = None,
    ) -> FeatureSet:
        tokenized = self.tokenize(body)
        terms = tokenized.terms
        keywords = extract_keywords(terms, stats, self.top_k)
        if sidecar_spans is not None:
            resolved = _resolve_spans(list(sidecar_spans))
            entities: dict[str, set[str]] = {etype: set() for etype in ENTITY_TYPES}
            spans = []
            for start, end, etype, canonical in resolved:
                entities[etype].add(canonical)
                spans.append(EntitySpan(start=start, end=end, type=etype, canonical=canonical))
            entity_sets = {e: frozenset(v) for e, v in entities.items()}
            entity_spans = tuple(spans)
        else:
            entity_sets, entity_spans = extract_entities(
                tokenized.all_tokens, self.gazetteer, self.stopwords
            )
        vector, _ = emotion_vector(terms, self.lexicon)
        return FeatureSet(
            article_id=article_id,
            keywords=keywords,
            entities=entity_sets,
            emotion_vector=vector,
            token_count=len(terms),
            term_counts=dict(Counter(terms)),
            entity_spans=entity_spans,
        )

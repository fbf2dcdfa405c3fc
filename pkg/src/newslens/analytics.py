"""Derived views for the overview, NER, emotions, and article panels."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clustering import ClusterModel, kmeans
from .errors import ValidationError
from .models import EMOTIONS, ENTITY_TYPES, FeatureSet
from .retrieval import ResultSet, daily_histogram
from .similarity import entity_distance, jaccard_distance
from .store import Store
from .text import tokenize


@dataclass
class SiteNode:
    site: str
    article_count: int
    top_emotions: list[tuple[str, float]]
    top_keywords: list[str]
    top_entities: dict[str, list[str]]


@dataclass
class SiteOverview:
    nodes: list[SiteNode]
    edges: list[tuple[str, str, float]]

    def to_json(self) -> dict:
        return {
            "nodes": [
                {
                    "site": n.site,
                    "article_count": n.article_count,
                    "top_emotions": [{"emotion": e, "value": v} for e, v in n.top_emotions],
                    "top_keywords": n.top_keywords,
                    "top_entities": n.top_entities,
                }
                for n in self.nodes
            ],
            "edges": [
                {"site_a": a, "site_b": b, "similarity": s} for a, b, s in self.edges
            ],
        }


def _top_by_doc_frequency(items_per_article: list[frozenset[str]], top_n: int) -> list[str]:
    counts: dict[str, int] = {}
    for items in items_per_article:
        for item in items:
            counts[item] = counts.get(item, 0) + 1
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return [item for item, _ in ranked[:top_n]]


def site_overview(
    store: Store, ids: list[str] | tuple[str, ...], edge_threshold: float = 0.2, top_n: int = 10
) -> SiteOverview:
    """Per-site summary of the retrieved articles plus edges between sites
    whose content similarity (equal-weight mean of keyword-set and tagged
    entity-set Jaccard over site-level unions) clears the threshold."""
    if not ids:
        raise ValidationError("empty result set", field="article_ids")
    by_site: dict[str, list[FeatureSet]] = {}
    display: dict[str, str] = {}
    for aid in ids:
        article = store.get_article(aid)
        display.setdefault(article.site_key, article.site)
        by_site.setdefault(article.site_key, []).append(store.feature_set(aid))

    nodes = []
    site_keywords: dict[str, frozenset[str]] = {}
    site_entities: dict[str, frozenset[str]] = {}
    for key in sorted(by_site):
        features = by_site[key]
        mean_emotion = np.mean([fs.emotion_vector for fs in features], axis=0)
        ranked = sorted(zip(EMOTIONS, mean_emotion), key=lambda kv: (-kv[1], kv[0]))
        site_keywords[key] = frozenset().union(*(fs.keyword_terms for fs in features))
        site_entities[key] = frozenset().union(*(fs.tagged_entities() for fs in features))
        nodes.append(
            SiteNode(
                site=display[key],
                article_count=len(features),
                top_emotions=[(e, float(v)) for e, v in ranked[:4]],
                top_keywords=_top_by_doc_frequency([fs.keyword_terms for fs in features], top_n),
                top_entities={
                    etype: _top_by_doc_frequency(
                        [frozenset(fs.entities.get(etype, ())) for fs in features], top_n
                    )
                    for etype in ENTITY_TYPES
                },
            )
        )

    edges = []
    keys = sorted(by_site)
    for i, key_a in enumerate(keys):
        for key_b in keys[i + 1 :]:
            sim_k = 1.0 - jaccard_distance(site_keywords[key_a], site_keywords[key_b])
            sim_e = 1.0 - jaccard_distance(site_entities[key_a], site_entities[key_b])
            similarity = 0.5 * sim_k + 0.5 * sim_e
            if similarity >= edge_threshold:
                edges.append((display[key_a], display[key_b], similarity))
    return SiteOverview(nodes=nodes, edges=edges)


@dataclass
class ClusterLabelHeatmap:
    keywords: list[str]
    clusters: list[int]
    values: list[list[float]]  # rows x clusters

    def to_json(self) -> dict:
        return {"keywords": self.keywords, "clusters": self.clusters, "values": self.values}


def cluster_label_heatmap(
    store: Store,
    ids: list[str],
    assignments: list[int],
    top_n: int,
) -> ClusterLabelHeatmap:
    """Rows are the union of each cluster's top keywords (by within-cluster
    document frequency of the articles' keyword sets); a cell holds the
    fraction of the cluster's articles containing the row keyword."""
    if len(ids) != len(assignments):
        raise ValidationError("assignments must align with article_ids", field="assignments")
    if not ids:
        raise ValidationError("empty result set", field="article_ids")
    if top_n < 1:
        raise ValidationError("top_n must be >= 1", field="top_n")
    keyword_sets = {aid: store.feature_set(aid).keyword_terms for aid in ids}
    clusters = sorted(set(assignments))
    members: dict[int, list[str]] = {c: [] for c in clusters}
    for aid, cluster in zip(ids, assignments):
        members[cluster].append(aid)

    row_set: set[str] = set()
    for cluster in clusters:
        tops = _top_by_doc_frequency([keyword_sets[aid] for aid in members[cluster]], top_n)
        row_set.update(tops)

    def cell(term: str, cluster: int) -> float:
        containing = sum(1 for aid in members[cluster] if term in keyword_sets[aid])
        return containing / len(members[cluster])

    rows = sorted(row_set, key=lambda term: (-max(cell(term, c) for c in clusters), term))
    values = [[cell(term, cluster) for cluster in clusters] for term in rows]
    return ClusterLabelHeatmap(keywords=rows, clusters=clusters, values=values)


@dataclass
class EmotionCluster:
    index: int
    member_ids: list[str]
    dominant_emotions: list[tuple[str, float]]
    contributing_words: dict[str, list[str]]


@dataclass
class EmotionClusterSummary:
    k: int
    seed: int
    clusters: list[EmotionCluster]
    model: ClusterModel

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "seed": self.seed,
            "clusters": [
                {
                    "index": c.index,
                    "member_ids": c.member_ids,
                    "dominant_emotions": [
                        {"emotion": e, "value": v} for e, v in c.dominant_emotions
                    ],
                    "contributing_words": c.contributing_words,
                }
                for c in self.clusters
            ],
        }


def emotion_clusters(
    store: Store, ids: list[str], k: int, seed: int, words_per_emotion: int = 5
) -> EmotionClusterSummary:
    """k-means over the subselection's emotion vectors.  Each cluster
    reports its four largest mean components and, per dominant emotion, the
    most frequent tokens in its articles that the lexicon associates with
    that emotion.  Members are ordered by publication day, then id."""
    if k < 1:
        raise ValidationError("k must be >= 1", field="k")
    if len(ids) < k:
        raise ValidationError(f"subselection of {len(ids)} is smaller than k={k}", field="k")
    vectors = store.emotion_vectors(list(ids))
    model = kmeans(vectors, k, seed)
    lexicon = store.lexicon()
    dates = store.dates(ids)
    index_of = {aid: i for i, aid in enumerate(ids)}

    clusters = []
    for cluster in range(model.k):
        member_ids = [ids[i] for i in model.members(cluster)]
        member_ids.sort(key=lambda aid: (dates[aid], aid))
        mean_vec = np.mean([vectors[index_of[aid]] for aid in member_ids], axis=0)
        dominant = sorted(zip(EMOTIONS, mean_vec), key=lambda kv: (-kv[1], kv[0]))[:4]

        term_totals: dict[str, int] = {}
        for aid in member_ids:
            for term, count in store.term_counts(aid).items():
                term_totals[term] = term_totals.get(term, 0) + count
        contributing: dict[str, list[str]] = {}
        for emotion, _ in dominant:
            carriers = [
                (term, total)
                for term, total in term_totals.items()
                if emotion in lexicon.emotions_for(term)
            ]
            carriers.sort(key=lambda kv: (-kv[1], kv[0]))
            contributing[emotion] = [term for term, _ in carriers[:words_per_emotion]]
        clusters.append(
            EmotionCluster(
                index=cluster,
                member_ids=member_ids,
                dominant_emotions=[(e, float(v)) for e, v in dominant],
                contributing_words=contributing,
            )
        )
    return EmotionClusterSummary(k=k, seed=seed, clusters=clusters, model=model)


@dataclass
class EntityMatrixView:
    ids: list[str]
    types: list[str]
    matrix: list[list[float]]  # full square, unit diagonal
    word_cloud: list[dict]
    shared: list[list[list[dict]]]

    def to_json(self) -> dict:
        return {
            "ids": self.ids,
            "types": self.types,
            "matrix": self.matrix,
            "word_cloud": self.word_cloud,
            "shared": self.shared,
        }


def entity_matrix(
    store: Store, ids: list[str], types: tuple[str, ...] = ENTITY_TYPES
) -> EntityMatrixView:
    """Pairwise entity similarity (1 - d_e over the selected types), the
    per-entity document frequencies for the word cloud, and the shared
    entities behind every cell."""
    if len(ids) < 2:
        raise ValidationError("need at least 2 articles", field="article_ids")
    bad = [t for t in types if t not in ENTITY_TYPES]
    if bad or not types:
        raise ValidationError(f"invalid entity types {bad}", field="types")
    features = [store.feature_set(aid) for aid in ids]
    n = len(ids)
    matrix = [[1.0] * n for _ in range(n)]
    shared: list[list[list[dict]]] = [[[] for _ in range(n)] for _ in range(n)]
    tagged = [fs.tagged_entities(tuple(types)) for fs in features]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            matrix[i][j] = 1.0 - entity_distance(features[i], features[j], tuple(types))
            common = sorted(tagged[i] & tagged[j])
            shared[i][j] = [
                {"type": item.split(":", 1)[0], "entity": item.split(":", 1)[1]}
                for item in common
            ]
    freq: dict[str, int] = {}
    for entry in tagged:
        for item in entry:
            freq[item] = freq.get(item, 0) + 1
    ranked = sorted(freq.items(), key=lambda kv: (-kv[1], kv[0]))
    word_cloud = [
        {
            "entity": item.split(":", 1)[1],
            "type": item.split(":", 1)[0],
            "frequency": count,
        }
        for item, count in ranked
    ]
    return EntityMatrixView(
        ids=list(ids), types=list(types), matrix=matrix, word_cloud=word_cloud, shared=shared
    )


def temporal_histogram(store: Store, result: ResultSet) -> tuple[int, ...]:
    """Recompute the per-day result counts from stored dates (the search
    response carries the same numbers).  An empty result yields all-zero
    buckets over the window."""
    dates = [store.get_article(aid).published_at for aid in result.ids]
    return daily_histogram(dates, result.date_from, result.date_to)


@dataclass
class Annotation:
    start: int
    end: int
    kind: str  # keyword | person | location | organization
    surface: str
    canonical: str

    def to_json(self) -> dict:
        return {
            "start": self.start,
            "end": self.end,
            "kind": self.kind,
            "surface": self.surface,
            "canonical": self.canonical,
        }


def article_annotations(store: Store, article_id: str) -> list[Annotation]:
    """Highlight spans for every keyword and entity occurrence in the
    article body.  Entity spans win over keyword spans; the returned list
    is strictly increasing and non-overlapping."""
    article = store.get_article(article_id)
    fs = store.feature_set(article_id)
    annotations = [
        Annotation(
            start=span.start,
            end=span.end,
            kind=span.type,
            surface=article.body[span.start : span.end],
            canonical=span.canonical,
        )
        for span in fs.entity_spans
    ]
    entity_ranges = [(span.start, span.end) for span in fs.entity_spans]
    keyword_terms = fs.keyword_terms
    tokenized = tokenize(article.body, frozenset())
    for token in tokenized.all_tokens:
        if token.text not in keyword_terms:
            continue
        if any(token.start < e and token.end > s for s, e in entity_ranges):
            continue
        annotations.append(
            Annotation(
                start=token.start,
                end=token.end,
                kind="keyword",
                surface=article.body[token.start : token.end],
                canonical=token.text,
            )
        )
    annotations.sort(key=lambda a: a.start)
    return annotations

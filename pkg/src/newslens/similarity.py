"""Pairwise article dissimilarities and their weighted fusion.

All three component metrics are dissimilarities in [0, 1] (larger = more
different): keyword and entity distances are Jaccard distances over term
sets, temporal distance is the absolute day difference scaled by the
query-window length.  The aggregate is the weighted sum
w_k * d_k + w_e * d_e + w_t * d_t.
"""
from __future__ import annotations

from dataclasses import dataclass
from datetime import date
from typing import Mapping

import numpy as np

from .errors import ValidationError
from .models import ENTITY_TYPES, FeatureSet


@dataclass(frozen=True)
class DistanceWeights:
    keyword: float
    entity: float
    temporal: float

    def validate(self) -> None:
        for name, value in (
            ("keyword", self.keyword),
            ("entity", self.entity),
            ("temporal", self.temporal),
        ):
            if value < 0:
                raise ValidationError(f"{name} weight must be >= 0", field=f"weights.{name}")
        if self.keyword == 0 and self.entity == 0 and self.temporal == 0:
            raise ValidationError("at least one weight must be positive", field="weights")


def jaccard_distance(a: frozenset, b: frozenset) -> float:
    """1 - |a & b| / |a | b|; two empty sets are identical (0), one empty
    set is maximally distant (1)."""
    if not a and not b:
        return 0.0
    if not a or not b:
        return 1.0
    return 1.0 - len(a & b) / len(a | b)


def keyword_distance(a1: FeatureSet, a2: FeatureSet) -> float:
    return jaccard_distance(a1.keyword_terms, a2.keyword_terms)


def entity_distance(
    a1: FeatureSet, a2: FeatureSet, types: tuple[str, ...] = ENTITY_TYPES
) -> float:
    """Jaccard distance over the type-tagged union of the selected entity
    sets ('washington'-as-person stays distinct from the location)."""
    if not types:
        raise ValidationError("at least one entity type required", field="types")
    return jaccard_distance(a1.tagged_entities(types), a2.tagged_entities(types))


def temporal_distance(d1: date, d2: date, window_days: int) -> float:
    """Absolute publication-day difference scaled by the query window."""
    if window_days < 1:
        raise ValidationError("window must span at least one day", field="window_days")
    return abs((d1 - d2).days) / window_days


def emotion_distance(a1: FeatureSet, a2: FeatureSet) -> float:
    return float(np.linalg.norm(a1.emotion_vector - a2.emotion_vector))


@dataclass
class DistanceMatrix:
    """Fused pairwise distances plus the component matrices they came
    from, kept for explanation views.  All matrices are symmetric with a
    zero diagonal, ordered by ``ids``."""

    ids: tuple[str, ...]
    aggregate: np.ndarray
    keyword: np.ndarray
    entity: np.ndarray
    temporal: np.ndarray
    weights: DistanceWeights

    def to_json(self) -> dict:
        return {
            "ids": list(self.ids),
            "aggregate": _lower_triangle(self.aggregate),
            "components": {
                "keyword": _lower_triangle(self.keyword),
                "entity": _lower_triangle(self.entity),
                "temporal": _lower_triangle(self.temporal),
            },
            "weights": {
                "keyword": self.weights.keyword,
                "entity": self.weights.entity,
                "temporal": self.weights.temporal,
            },
        }


def _lower_triangle(matrix: np.ndarray) -> list[float]:
    """Row-major strictly-lower triangle (the diagonal is zero by
    construction)."""
    n = matrix.shape[0]
    return [float(matrix[i, j]) for i in range(n) for j in range(i)]


def aggregate_matrix(
    ids: tuple[str, ...] | list[str],
    features: Mapping[str, FeatureSet],
    dates: Mapping[str, date],
    window_days: int,
    weights: DistanceWeights,
) -> DistanceMatrix:
    """Pairwise component distances and their weighted fusion for the
    given articles, in id order."""
    weights.validate()
    ids = tuple(ids)
    n = len(ids)
    if n < 2:
        raise ValidationError("need at least 2 articles", field="article_ids")
    d_k = np.zeros((n, n))
    d_e = np.zeros((n, n))
    d_t = np.zeros((n, n))
    fs = [features[aid] for aid in ids]
    when = [dates[aid] for aid in ids]
    for i in range(n):
        for j in range(i):
            d_k[i, j] = d_k[j, i] = keyword_distance(fs[i], fs[j])
            d_e[i, j] = d_e[j, i] = entity_distance(fs[i], fs[j])
            d_t[i, j] = d_t[j, i] = temporal_distance(when[i], when[j], window_days)
    agg = weights.keyword * d_k + weights.entity * d_e + weights.temporal * d_t
    return DistanceMatrix(
        ids=ids, aggregate=agg, keyword=d_k, entity=d_e, temporal=d_t, weights=weights
    )

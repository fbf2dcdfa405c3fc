"""Deterministic k-means (k-means++ seeding, Lloyd iterations) and
silhouette scoring.

Everything here is a pure function of (points, k, seed): the RNG is a
seeded PCG64 generator, assignment ties break toward the lowest centroid
index, and cluster labels are canonicalized by first-occurring member so
fixed inputs serialize bit-for-bit identically.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError

MAX_ITERATIONS = 300


@dataclass
class ClusterModel:
    k: int
    labels: tuple[int, ...]
    centroids: np.ndarray
    seed: int
    iterations_run: int
    converged: bool
    sse: float
    sse_history: tuple[float, ...]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "assignments": list(self.labels),
            "centroids": [[float(v) for v in c] for c in self.centroids],
            "seed": self.seed,
            "iterations_run": self.iterations_run,
            "converged": self.converged,
        }

    def members(self, cluster: int) -> list[int]:
        return [i for i, label in enumerate(self.labels) if label == cluster]


def _as_points(points) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    if pts.ndim == 1:
        pts = pts.reshape(-1, 1)
    if pts.ndim != 2:
        raise ValidationError("points must be a 2-D array", field="points")
    return pts


def _plusplus_init(pts: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    n = pts.shape[0]
    chosen = [int(rng.integers(n))]
    d2 = np.sum((pts - pts[chosen[0]]) ** 2, axis=1)
    while len(chosen) < k:
        total = d2.sum()
        if total <= 0.0:
            # remaining points coincide with chosen centroids; pick uniformly
            idx = int(rng.integers(n))
        else:
            idx = int(rng.choice(n, p=d2 / total))
        chosen.append(idx)
        d2 = np.minimum(d2, np.sum((pts - pts[idx]) ** 2, axis=1))
    return pts[chosen].copy()


def _sse(pts: np.ndarray, centroids: np.ndarray, labels: np.ndarray) -> float:
    return float(np.sum((pts - centroids[labels]) ** 2))


def kmeans(points, k: int, seed: int) -> ClusterModel:
    """Lloyd's algorithm from a k-means++ start, run to assignment fixpoint
    or MAX_ITERATIONS.  Empty clusters are repaired by reassigning the
    point farthest from its current centroid.  The within-cluster sum of
    squares is tracked per iteration and checked to be non-increasing.
    """
    pts = _as_points(points)
    n = pts.shape[0]
    if k < 1:
        raise ValidationError("k must be >= 1", field="k")
    if k > n:
        raise ValidationError(f"k={k} exceeds the number of points ({n})", field="k")

    rng = np.random.default_rng(seed)
    centroids = _plusplus_init(pts, k, rng)
    labels = np.zeros(n, dtype=int)
    prev_labels = None
    history: list[float] = []
    iterations = 0
    converged = False

    for _ in range(MAX_ITERATIONS):
        iterations += 1
        # assignment step; ties go to the lowest centroid index (argmin)
        d2 = np.sum((pts[:, None, :] - centroids[None, :, :]) ** 2, axis=2)
        labels = np.argmin(d2, axis=1)
        for cluster in range(k):
            if not np.any(labels == cluster):
                dist_to_own = np.sum((pts - centroids[labels]) ** 2, axis=1)
                # never steal a cluster's only member
                sizes = np.bincount(labels, minlength=k)
                dist_to_own[sizes[labels] <= 1] = -np.inf
                farthest = int(np.argmax(dist_to_own))
                labels[farthest] = cluster
        for cluster in range(k):
            centroids[cluster] = pts[labels == cluster].mean(axis=0)
        history.append(_sse(pts, centroids, labels))
        if len(history) > 1 and history[-1] > history[-2] * (1 + 1e-12) + 1e-12:
            raise AssertionError("k-means objective increased between iterations")
        if prev_labels is not None and np.array_equal(labels, prev_labels):
            converged = True
            break
        prev_labels = labels.copy()

    labels, centroids = _canonicalize(labels, centroids, k)
    return ClusterModel(
        k=k,
        labels=tuple(int(v) for v in labels),
        centroids=centroids,
        seed=seed,
        iterations_run=iterations,
        converged=converged,
        sse=history[-1],
        sse_history=tuple(history),
    )


def _canonicalize(labels: np.ndarray, centroids: np.ndarray, k: int):
    """Renumber clusters by first-occurring member so label permutations
    cannot break golden tests."""
    mapping: dict[int, int] = {}
    for label in labels:
        if int(label) not in mapping:
            mapping[int(label)] = len(mapping)
    # clusters that lost every member cannot remain (repair guarantees it)
    new_labels = np.array([mapping[int(v)] for v in labels], dtype=int)
    order = sorted(mapping, key=mapping.get)
    return new_labels, centroids[order]


def silhouette(points, model: ClusterModel) -> float:
    """Mean silhouette score: per point s = (b - a) / max(a, b) with a the
    mean intra-cluster distance (excluding self) and b the lowest mean
    distance to any other cluster.  Singletons score 0, as does the
    a = b = 0 degenerate case."""
    pts = _as_points(points)
    if model.k < 2:
        raise ValidationError("silhouette needs k >= 2", field="k")
    labels = np.asarray(model.labels)
    n = pts.shape[0]
    dist = np.sqrt(np.sum((pts[:, None, :] - pts[None, :, :]) ** 2, axis=2))
    scores = np.zeros(n)
    for i in range(n):
        own = labels == labels[i]
        own_size = int(own.sum())
        if own_size <= 1:
            continue
        a = dist[i, own].sum() / (own_size - 1)
        b = np.inf
        for cluster in range(model.k):
            if cluster == labels[i]:
                continue
            mask = labels == cluster
            if mask.any():
                b = min(b, dist[i, mask].mean())
        denom = max(a, b)
        scores[i] = 0.0 if denom == 0.0 else (b - a) / denom
    return float(scores.mean())


def silhouette_sweep(
    points, seed: int, k_min: int = 2, k_max: int = 10
) -> dict[int, float]:
    """Mean silhouette for every k in [k_min, min(k_max, n - 1)], all runs
    from the same seed."""
    pts = _as_points(points)
    n = pts.shape[0]
    if n < 3:
        raise ValidationError("silhouette sweep needs at least 3 points", field="article_ids")
    table: dict[int, float] = {}
    for k in range(k_min, min(k_max, n - 1) + 1):
        model = kmeans(pts, k, seed)
        table[k] = silhouette(pts, model)
    return table

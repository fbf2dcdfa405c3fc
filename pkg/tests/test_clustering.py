from __future__ import annotations

import json

import numpy as np
import pytest

from newslens.clustering import ClusterModel, kmeans, silhouette, silhouette_sweep
from newslens.errors import ValidationError
from oracles import best_sse_partition, naive_silhouette, sse_of

ONE_D_FIXTURE = np.array([[0.0], [0.1], [10.0], [10.1]])


def test_k1_centroid_is_the_mean():
    pts = np.array([[0.0, 0.0], [2.0, 4.0], [4.0, 2.0]])
    model = kmeans(pts, 1, seed=0)
    assert np.allclose(model.centroids[0], pts.mean(axis=0))
    assert model.labels == (0, 0, 0)


@pytest.mark.parametrize("seed", [0, 1, 7, 42, 1234])
def test_planted_two_clusters_found_for_any_seed(seed):
    model = kmeans(ONE_D_FIXTURE, 2, seed=seed)
    assert model.labels == (0, 0, 1, 1)  # canonical labels: first point is cluster 0
    assert model.sse == pytest.approx(best_sse_partition(ONE_D_FIXTURE, 2), abs=1e-12)


def test_n_equals_k_gives_singletons():
    pts = np.array([[0.0], [1.0], [2.0]])
    model = kmeans(pts, 3, seed=5)
    assert sorted(model.labels) == [0, 1, 2]
    assert model.sse == 0.0


def test_k_larger_than_n_rejected():
    with pytest.raises(ValidationError):
        kmeans(np.zeros((2, 2)), 3, seed=0)
    with pytest.raises(ValidationError):
        kmeans(np.zeros((2, 2)), 0, seed=0)


def test_deterministic_serialization():
    rng = np.random.default_rng(3)
    pts = rng.random((20, 4))
    a = kmeans(pts, 4, seed=11)
    b = kmeans(pts, 4, seed=11)
    assert json.dumps(a.to_json()) == json.dumps(b.to_json())


def test_objective_history_non_increasing():
    rng = np.random.default_rng(0)
    for trial in range(10):
        pts = rng.random((30, 3))
        model = kmeans(pts, 5, seed=trial)
        history = model.sse_history
        assert all(later <= earlier + 1e-9 for earlier, later in zip(history, history[1:]))


def test_no_empty_clusters_even_with_duplicate_points():
    pts = np.array([[1.0, 1.0]] * 6 + [[5.0, 5.0]] * 2)
    for seed in range(8):
        model = kmeans(pts, 3, seed=seed)
        assert set(model.labels) == {0, 1, 2}


def test_labels_canonicalized_by_first_occurrence():
    rng = np.random.default_rng(9)
    pts = rng.random((12, 2)) + np.repeat([[0, 0], [5, 5], [10, 0]], 4, axis=0)
    model = kmeans(pts, 3, seed=21)
    seen = []
    for label in model.labels:
        if label not in seen:
            seen.append(label)
    assert seen == [0, 1, 2]


# -- silhouette ---------------------------------------------------------------


def test_silhouette_hand_value_on_planted_fixture():
    model = kmeans(ONE_D_FIXTURE, 2, seed=0)
    assert silhouette(ONE_D_FIXTURE, model) == pytest.approx(0.9899, abs=1e-3)


def test_silhouette_coincident_groups_scores_one():
    pts = np.array([[0.0]] * 3 + [[9.0]] * 3)
    model = kmeans(pts, 2, seed=1)
    assert silhouette(pts, model) == 1.0


def test_silhouette_all_identical_points_is_zero():
    pts = np.zeros((4, 2))
    model = ClusterModel(
        k=2, labels=(0, 0, 1, 1), centroids=np.zeros((2, 2)), seed=0,
        iterations_run=1, converged=True, sse=0.0, sse_history=(0.0,),
    )
    assert silhouette(pts, model) == 0.0


def test_silhouette_requires_k_of_two():
    model = kmeans(ONE_D_FIXTURE, 1, seed=0)
    with pytest.raises(ValidationError):
        silhouette(ONE_D_FIXTURE, model)


def test_silhouette_matches_brute_force():
    rng = np.random.default_rng(17)
    for trial in range(8):
        pts = rng.random((rng.integers(6, 30), 3))
        k = int(rng.integers(2, 5))
        model = kmeans(pts, k, seed=trial)
        expected = naive_silhouette(pts, list(model.labels))
        assert silhouette(pts, model) == pytest.approx(expected, abs=1e-9)


def test_singletons_contribute_zero():
    pts = np.array([[0.0], [0.1], [50.0]])
    model = kmeans(pts, 2, seed=0)
    # the singleton at 50 contributes 0; the pair contributes twice
    expected = naive_silhouette(pts, list(model.labels))
    assert silhouette(pts, model) == pytest.approx(expected, abs=1e-12)


# -- sweep ----------------------------------------------------------------------


def test_sweep_covers_2_to_min_10_nminus1():
    table = silhouette_sweep(ONE_D_FIXTURE, seed=0)
    assert sorted(table) == [2, 3]
    assert max(table, key=table.get) == 2


def test_sweep_n3_covers_only_k2():
    pts = np.array([[0.0], [1.0], [2.0]])
    table = silhouette_sweep(pts, seed=0)
    assert sorted(table) == [2]


def test_sweep_needs_three_points():
    with pytest.raises(ValidationError):
        silhouette_sweep(np.zeros((2, 1)), seed=0)


def test_sweep_argmax_on_three_planted_triples():
    rng = np.random.default_rng(23)
    centers = np.array([[0.0, 0.0], [20.0, 0.0], [0.0, 20.0]])
    pts = np.vstack([c + 0.1 * rng.standard_normal((3, 2)) for c in centers])
    table = silhouette_sweep(pts, seed=0)
    assert sorted(table) == list(range(2, 9))  # min(10, 9-1) = 8
    assert max(table, key=table.get) == 3


def test_sweep_scores_within_bounds():
    rng = np.random.default_rng(2)
    pts = rng.random((15, 4))
    table = silhouette_sweep(pts, seed=3)
    assert all(-1.0 <= score <= 1.0 for score in table.values())


def test_kmeans_reaches_brute_force_optimum_on_separated_fixtures():
    rng = np.random.default_rng(31)
    for trial in range(5):
        centers = rng.uniform(-50, 50, size=(3, 2))
        while np.min(
            [np.linalg.norm(a - b) for i, a in enumerate(centers) for b in centers[i + 1 :]]
        ) < 20:
            centers = rng.uniform(-50, 50, size=(3, 2))
        pts = np.vstack([c + 0.5 * rng.standard_normal((4, 2)) for c in centers])
        model = kmeans(pts, 3, seed=trial)
        optimum = best_sse_partition(pts, 3)
        assert model.sse == pytest.approx(optimum, rel=1e-9)
        assert sse_of(pts, list(model.labels)) == pytest.approx(optimum, rel=1e-9)

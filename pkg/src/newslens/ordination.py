"""Deterministic 2-D layout of a distance matrix.

Classical (Torgerson) MDS provides the starting configuration: the
squared-distance matrix is double-centered, the top eigenpairs taken
(negative eigenvalues clamped to zero), and each eigenvector's sign fixed
by making its largest-magnitude component positive.  Stress majorization
(SMACOF / Guttman transform) then refines the configuration; its stress
never increases, so the whole pipeline is seed-free and repeatable
bit-for-bit.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError

SMACOF_MAX_STEPS = 200
SMACOF_REL_TOL = 1e-12


@dataclass
class Layout:
    """Normalized 2-D coordinates for an ordered id list.

    ``coords`` live in [0, 1]^2 with aspect ratio preserved; ``scale`` and
    ``origin`` recover the raw embedding (raw = coords * scale + origin),
    which is what ``achieved_stress`` was measured on.
    """

    ids: tuple[str, ...]
    coords: np.ndarray
    stress: float
    scale: float
    origin: tuple[float, float]
    stress_history: tuple[float, ...]

    def raw_coords(self) -> np.ndarray:
        return self.coords * self.scale + np.asarray(self.origin)

    def to_json(self) -> dict:
        return {
            "ids": list(self.ids),
            "x": [float(v) for v in self.coords[:, 0]],
            "y": [float(v) for v in self.coords[:, 1]],
            "stress": float(self.stress),
        }


def _validate_matrix(d: np.ndarray) -> np.ndarray:
    d = np.asarray(d, dtype=float)
    if d.ndim != 2 or d.shape[0] != d.shape[1]:
        raise ValidationError("distance matrix must be square", field="matrix")
    if d.shape[0] < 2:
        raise ValidationError("need at least 2 points", field="matrix")
    if not np.array_equal(d, d.T):
        raise ValidationError("distance matrix must be symmetric", field="matrix")
    if np.any(d < 0):
        raise ValidationError("distance matrix must be non-negative", field="matrix")
    return d


def classical_embedding(d: np.ndarray, dim: int) -> np.ndarray:
    """Torgerson's classical MDS into ``dim`` dimensions.

    Negative eigenvalues of the double-centered matrix are clamped to 0
    (weighted Jaccard mixtures need not be Euclidean-embeddable).  Sign
    convention: per axis, the largest-magnitude coordinate is positive.
    """
    d = _validate_matrix(d)
    n = d.shape[0]
    j = np.eye(n) - np.full((n, n), 1.0 / n)
    b = -0.5 * j @ (d**2) @ j
    evals, evecs = np.linalg.eigh(b)
    order = np.argsort(evals)[::-1]
    evals = np.clip(evals[order][:dim], 0.0, None)
    vecs = evecs[:, order][:, :dim]
    coords = vecs * np.sqrt(evals)
    for axis in range(coords.shape[1]):
        column = coords[:, axis]
        pivot = int(np.argmax(np.abs(column)))
        if column[pivot] < 0:
            coords[:, axis] = -column
    return coords


def stress_1(d: np.ndarray, coords: np.ndarray) -> float:
    """Kruskal stress-1: sqrt(sum (d_ij - delta_ij)^2 / sum delta_ij^2)
    over i < j.  Defined as 0 when all input distances are zero."""
    delta = np.asarray(d, dtype=float)
    layout_d = _pairwise(coords)
    iu = np.triu_indices(delta.shape[0], k=1)
    denom = float(np.sum(delta[iu] ** 2))
    if denom == 0.0:
        return 0.0
    num = float(np.sum((layout_d[iu] - delta[iu]) ** 2))
    return float(np.sqrt(num / denom))


def _pairwise(coords: np.ndarray) -> np.ndarray:
    diff = coords[:, None, :] - coords[None, :, :]
    return np.sqrt(np.sum(diff**2, axis=2))


def _smacof(d: np.ndarray, start: np.ndarray) -> tuple[np.ndarray, list[float]]:
    n = d.shape[0]
    coords = start.copy()
    history = [stress_1(d, coords)]
    for _ in range(SMACOF_MAX_STEPS):
        dist = _pairwise(coords)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(dist > 0, d / dist, 0.0)
        b = -ratio
        np.fill_diagonal(b, 0.0)
        np.fill_diagonal(b, -b.sum(axis=1))
        coords_next = (b @ coords) / n
        s = stress_1(d, coords_next)
        if s > history[-1] * (1.0 + 1e-12) + 1e-15:
            raise AssertionError("stress increased during majorization")
        coords = coords_next
        history.append(s)
        if history[-2] - history[-1] <= SMACOF_REL_TOL * max(history[-2], 1e-300):
            break
    return coords, history


def mds_layout(ids: tuple[str, ...] | list[str], d: np.ndarray) -> Layout:
    """Classical-MDS start refined by stress majorization, normalized to
    the unit square with aspect ratio preserved."""
    d = _validate_matrix(d)
    ids = tuple(ids)
    if len(ids) != d.shape[0]:
        raise ValidationError("id list and matrix size differ", field="matrix")
    start = classical_embedding(d, 2)
    coords, history = _smacof(d, start)
    stress = history[-1]

    mins = coords.min(axis=0)
    ranges = coords.max(axis=0) - mins
    span = float(ranges.max())
    if span <= 0.0:
        normalized = np.full_like(coords, 0.5)
        scale = 1.0
        origin = (float(mins[0]) - 0.5, float(mins[1]) - 0.5)
    else:
        normalized = (coords - mins) / span
        scale = span
        origin = (float(mins[0]), float(mins[1]))
    return Layout(
        ids=ids,
        coords=normalized,
        stress=stress,
        scale=scale,
        origin=origin,
        stress_history=tuple(history),
    )


def stress(d: np.ndarray, layout: Layout) -> float:
    """Stress-1 of an existing layout against a distance matrix."""
    d = _validate_matrix(d)
    if d.shape[0] != len(layout.ids):
        raise ValidationError("layout does not cover the matrix id list", field="matrix")
    return stress_1(d, layout.raw_coords())

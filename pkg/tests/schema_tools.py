"""Structural JSON schema descriptions used by the golden-file tests.

``schema_of`` reduces a payload to its shape: object field names, array
element shapes, and scalar kinds (int and float both count as "number",
mirroring JSON).  Shapes are environment-independent, so the golden files
stay stable while exact float values may differ across platforms.
"""
from __future__ import annotations

import json
from pathlib import Path

GOLDEN_DIR = Path(__file__).resolve().parent / "golden"

_IDS_12 = [f"a{i:02d}" for i in range(1, 7)] + [f"b{i:02d}" for i in range(1, 7)]

# One schema-pinned request per endpoint plus the two error shapes, all
# against the bundled fixture corpus.
GOLDEN_REQUESTS: list[tuple[str, str, str, dict | None]] = [
    ("health", "GET", "/api/health", None),
    ("sites", "GET", "/api/sites", None),
    (
        "search",
        "POST",
        "/api/search",
        {
            "keywords": ["election", "trump"],
            "date_from": "2016-11-06",
            "date_to": "2016-11-13",
            "limit": 50,
        },
    ),
    (
        "layout",
        "POST",
        "/api/layout",
        {
            "article_ids": _IDS_12,
            "weights": {"keyword": 1.0, "entity": 1.0, "temporal": 2.0},
            "k": 3,
            "seed": 7,
            "include_components": True,
        },
    ),
    ("silhouette", "POST", "/api/silhouette", {"article_ids": _IDS_12, "seed": 7}),
    (
        "emotion_clusters",
        "POST",
        "/api/emotion-clusters",
        {"article_ids": _IDS_12, "k": 2, "seed": 7},
    ),
    ("entity_matrix", "POST", "/api/entity-matrix", {"article_ids": _IDS_12[:6]}),
    ("site_overview", "POST", "/api/site-overview", {"article_ids": _IDS_12}),
    (
        "cluster_labels",
        "POST",
        "/api/cluster-labels",
        {"article_ids": _IDS_12[:6], "assignments": [0, 0, 1, 1, 2, 2], "top_n": 3},
    ),
    ("article", "GET", "/api/article/a01?annotate=true", None),
    ("error_validation", "POST", "/api/search", {"keywords": []}),
    ("error_not_found", "GET", "/api/article/does-not-exist", None),
]


def schema_of(value) -> dict | str:
    if isinstance(value, bool):
        return "boolean"
    if isinstance(value, (int, float)):
        return "number"
    if isinstance(value, str):
        return "string"
    if value is None:
        return "null"
    if isinstance(value, dict):
        return {"object": {key: schema_of(value[key]) for key in sorted(value)}}
    if isinstance(value, (list, tuple)):
        shapes = []
        for item in value:
            shape = schema_of(item)
            if shape not in shapes:
                shapes.append(shape)
        if not shapes:
            return {"array": "empty"}
        if len(shapes) == 1:
            return {"array": shapes[0]}
        return {"array": sorted(map(json.dumps, shapes))}
    raise TypeError(f"unexpected payload type {type(value)!r}")


def dump_schema(payload) -> str:
    return json.dumps(schema_of(payload), indent=2, sort_keys=True) + "\n"


def load_golden(name: str) -> dict | str:
    return json.loads((GOLDEN_DIR / f"{name}.schema.json").read_text(encoding="utf-8"))

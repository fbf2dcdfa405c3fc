"""HTTP/JSON API over an ingested store.

Every endpoint is read-only and referentially transparent for a fixed
store, request body, and seed; responses carry a ``schema_version`` field
and errors use the closed code set validation_error | not_found |
internal.
"""
from __future__ import annotations

import hashlib
import json
from datetime import date, timedelta
from typing import Literal

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from . import analytics, clustering, ordination, retrieval, similarity
from .config import ServerConfig
from .errors import NotFoundError, ValidationError
from .models import ENTITY_TYPES
from .store import Store, parse_day

SCHEMA_VERSION = 1


def _error_response(code: str, message: str, field: str | None, status: int) -> Response:
    payload = {"code": code, "message": message}
    if field:
        payload["field"] = field
    return _json_response({"schema_version": SCHEMA_VERSION, "error": payload}, status)


def _json_response(payload: dict, status: int = 200, etag: bool = False) -> Response:
    body = json.dumps(payload, ensure_ascii=False, allow_nan=False, separators=(",", ":"))
    headers = {}
    if etag:
        headers["ETag"] = '"' + hashlib.sha256(body.encode("utf-8")).hexdigest() + '"'
    return Response(content=body, media_type="application/json", status_code=status, headers=headers)


class WeightsBody(BaseModel):
    keyword: float = 1.0
    entity: float = 1.0
    temporal: float = 1.0

    def to_weights(self) -> similarity.DistanceWeights:
        return similarity.DistanceWeights(
            keyword=self.keyword, entity=self.entity, temporal=self.temporal
        )


class SearchBody(BaseModel):
    keywords: list[str]
    date_from: str | None = None
    date_to: str | None = None
    sites_include: list[str] | None = None
    sites_exclude: list[str] = Field(default_factory=list)
    limit: int = 50
    balanced: bool = False


class LayoutBody(BaseModel):
    article_ids: list[str]
    weights: WeightsBody = Field(default_factory=WeightsBody)
    k: int | None = None
    cluster_space: Literal["aggregate", "xy"] = "aggregate"
    seed: int | None = None
    date_from: str | None = None
    date_to: str | None = None
    include_components: bool = False


class SilhouetteBody(BaseModel):
    article_ids: list[str]
    weights: WeightsBody = Field(default_factory=WeightsBody)
    cluster_space: Literal["aggregate", "xy"] = "aggregate"
    seed: int | None = None
    date_from: str | None = None
    date_to: str | None = None


class EmotionClustersBody(BaseModel):
    article_ids: list[str]
    k: int | None = None
    seed: int | None = None


class EntityMatrixBody(BaseModel):
    article_ids: list[str]
    types: list[str] = Field(default_factory=lambda: list(ENTITY_TYPES))


class SiteOverviewBody(BaseModel):
    article_ids: list[str]


class ClusterLabelsBody(BaseModel):
    article_ids: list[str]
    assignments: list[int]
    top_n: int | None = None


def _parse_date(value: str | None, field: str) -> date | None:
    if value is None:
        return None
    parsed = parse_day(value)
    if parsed is None:
        raise ValidationError(f"invalid date {value!r}", field=field)
    return parsed


def create_app(store: Store, config: ServerConfig | None = None) -> FastAPI:
    config = config or ServerConfig()
    app = FastAPI(title="newslens", docs_url=None, redoc_url=None)

    if config.cors_origins:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=list(config.cors_origins),
            allow_methods=["GET", "POST"],
            allow_headers=["*"],
        )

    @app.exception_handler(ValidationError)
    async def _validation_handler(request: Request, exc: ValidationError):
        return _error_response("validation_error", str(exc), exc.field, 400)

    @app.exception_handler(NotFoundError)
    async def _not_found_handler(request: Request, exc: NotFoundError):
        return _error_response("not_found", str(exc), None, 404)

    @app.exception_handler(RequestValidationError)
    async def _request_validation_handler(request: Request, exc: RequestValidationError):
        errors = exc.errors()
        field = None
        if errors:
            loc = [str(part) for part in errors[0].get("loc", ()) if part != "body"]
            field = ".".join(loc) or None
        return _error_response("validation_error", "malformed request body", field, 400)

    @app.exception_handler(Exception)
    async def _internal_handler(request: Request, exc: Exception):
        return _error_response("internal", "internal server error", None, 500)

    def _require_ids(ids: list[str], minimum: int = 1) -> list[str]:
        if len(ids) < minimum:
            raise ValidationError(
                f"need at least {minimum} article ids", field="article_ids"
            )
        if len(set(ids)) != len(ids):
            raise ValidationError("duplicate article ids", field="article_ids")
        for aid in ids:
            if not store.has_article(aid):
                raise NotFoundError(f"unknown article id {aid!r}")
        return ids

    def _window_days(ids: list[str], date_from: str | None, date_to: str | None) -> int:
        lo = _parse_date(date_from, "date_from")
        hi = _parse_date(date_to, "date_to")
        dates = sorted(store.dates(ids).values())
        lo = lo if lo is not None else dates[0]
        hi = hi if hi is not None else dates[-1]
        if lo > hi:
            raise ValidationError("date_from must not exceed date_to", field="date_from")
        if dates[0] < lo or dates[-1] > hi:
            # temporal distances are only defined for dates inside the window
            raise ValidationError(
                "article dates fall outside the supplied window", field="date_from"
            )
        return (hi - lo).days + 1

    def _distance_matrix(
        ids: list[str], weights: WeightsBody, date_from: str | None, date_to: str | None
    ) -> similarity.DistanceMatrix:
        w = weights.to_weights()
        w.validate()
        return similarity.aggregate_matrix(
            ids,
            store.feature_sets(ids),
            store.dates(ids),
            _window_days(ids, date_from, date_to),
            w,
        )

    def _cluster_points(matrix: similarity.DistanceMatrix, space: str, layout=None):
        if space == "xy":
            layout = layout if layout is not None else ordination.mds_layout(matrix.ids, matrix.aggregate)
            return layout.coords
        dim = min(8, len(matrix.ids) - 1)
        return ordination.classical_embedding(matrix.aggregate, dim)

    # -- endpoints ---------------------------------------------------------

    @app.get("/api/health")
    def health() -> Response:
        return _json_response(
            {
                "schema_version": SCHEMA_VERSION,
                "status": "ok",
                "corpus_name": store.manifest.corpus_name,
                "article_count": store.manifest.article_count,
            }
        )

    @app.get("/api/sites")
    def sites() -> Response:
        return _json_response(
            {
                "schema_version": SCHEMA_VERSION,
                "sites": [[site, count] for site, count in store.list_sites()],
            },
            etag=True,
        )

    @app.post("/api/search")
    def search(body: SearchBody) -> Response:
        query = retrieval.QuerySpec(
            keywords=tuple(body.keywords),
            date_from=_parse_date(body.date_from, "date_from"),
            date_to=_parse_date(body.date_to, "date_to"),
            sites_include=frozenset(body.sites_include) if body.sites_include is not None else None,
            sites_exclude=frozenset(body.sites_exclude),
            limit=body.limit,
            balanced=body.balanced,
        )
        result = retrieval.search(store, query)
        days = [
            (result.date_from + timedelta(days=i)).isoformat()
            for i in range(result.window_days)
        ]

        def entry(aid: str, score: float) -> dict:
            art = store.get_article(aid)
            return {
                "id": aid,
                "score": score,
                "site": art.site,
                "published_at": art.published_at.isoformat(),
                "title": art.title,
            }

        return _json_response(
            {
                "schema_version": SCHEMA_VERSION,
                "results": [entry(aid, score) for aid, score in result.entries],
                "date_from": result.date_from.isoformat(),
                "date_to": result.date_to.isoformat(),
                "window_days": result.window_days,
                "histogram": [
                    {"date": day, "count": count}
                    for day, count in zip(days, result.histogram)
                ],
            }
        )

    @app.post("/api/layout")
    def layout(body: LayoutBody) -> Response:
        ids = _require_ids(body.article_ids, minimum=2)
        matrix = _distance_matrix(ids, body.weights, body.date_from, body.date_to)
        layout_result = ordination.mds_layout(matrix.ids, matrix.aggregate)
        k = body.k if body.k is not None else min(config.default_k, len(ids))
        seed = body.seed if body.seed is not None else config.default_seed
        points = _cluster_points(matrix, body.cluster_space, layout=layout_result)
        model = clustering.kmeans(points, k, seed)
        payload = {
            "schema_version": SCHEMA_VERSION,
            "ids": list(matrix.ids),
            "x": [float(v) for v in layout_result.coords[:, 0]],
            "y": [float(v) for v in layout_result.coords[:, 1]],
            "stress": float(layout_result.stress),
            "assignments": list(model.labels),
            "k": k,
            "seed": seed,
            "cluster_space": body.cluster_space,
        }
        if body.include_components:
            payload["component_matrices"] = matrix.to_json()
        return _json_response(payload)

    @app.post("/api/silhouette")
    def silhouette_table(body: SilhouetteBody) -> Response:
        ids = _require_ids(body.article_ids, minimum=3)
        matrix = _distance_matrix(ids, body.weights, body.date_from, body.date_to)
        seed = body.seed if body.seed is not None else config.default_seed
        points = _cluster_points(matrix, body.cluster_space)
        table = clustering.silhouette_sweep(
            points, seed, k_min=config.silhouette_k_min, k_max=config.silhouette_k_max
        )
        return _json_response(
            {
                "schema_version": SCHEMA_VERSION,
                "seed": seed,
                "cluster_space": body.cluster_space,
                "table": [{"k": k, "score": table[k]} for k in sorted(table)],
            }
        )

    @app.post("/api/emotion-clusters")
    def emotion_clusters(body: EmotionClustersBody) -> Response:
        ids = _require_ids(body.article_ids, minimum=1)
        k = body.k if body.k is not None else min(config.default_k, len(ids))
        seed = body.seed if body.seed is not None else config.default_seed
        summary = analytics.emotion_clusters(store, ids, k, seed)
        payload = {"schema_version": SCHEMA_VERSION, **summary.to_json()}
        # per-article vectors back the radial glyphs and the hover bar chart
        payload["emotion_vectors"] = {
            aid: [float(v) for v in store.feature_set(aid).emotion_vector] for aid in ids
        }
        return _json_response(payload)

    @app.post("/api/entity-matrix")
    def entity_matrix(body: EntityMatrixBody) -> Response:
        ids = _require_ids(body.article_ids, minimum=2)
        view = analytics.entity_matrix(store, ids, tuple(body.types))
        return _json_response({"schema_version": SCHEMA_VERSION, **view.to_json()})

    @app.post("/api/site-overview")
    def site_overview(body: SiteOverviewBody) -> Response:
        ids = _require_ids(body.article_ids, minimum=1)
        overview = analytics.site_overview(
            store, ids, edge_threshold=config.site_edge_threshold
        )
        return _json_response({"schema_version": SCHEMA_VERSION, **overview.to_json()})

    @app.post("/api/cluster-labels")
    def cluster_labels(body: ClusterLabelsBody) -> Response:
        ids = _require_ids(body.article_ids, minimum=1)
        top_n = body.top_n if body.top_n is not None else config.heatmap_top_n
        heatmap = analytics.cluster_label_heatmap(store, ids, body.assignments, top_n)
        return _json_response({"schema_version": SCHEMA_VERSION, **heatmap.to_json()})

    @app.get("/api/article/{article_id}")
    def article(article_id: str, annotate: bool = False) -> Response:
        art = store.get_article(article_id)
        payload = {
            "schema_version": SCHEMA_VERSION,
            "article": {
                "id": art.id,
                "title": art.title,
                "site": art.site,
                "author": art.author,
                "published_at": art.published_at.isoformat(),
                "url": art.url,
                "body": art.body,
            },
        }
        if annotate:
            payload["annotations"] = [
                a.to_json() for a in analytics.article_annotations(store, article_id)
            ]
        return _json_response(payload, etag=True)

    if config.ui_dir is not None and config.ui_dir.is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=config.ui_dir, html=True), name="ui")

    return app

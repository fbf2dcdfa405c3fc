/** Typed client for the analytics API; the UI's only data source. */
import type {
  ArticleResponse,
  ApiErrorCode,
  ApiErrorPayload,
  ClusterLabelsResponse,
  EmotionClustersResponse,
  EntityMatrixResponse,
  EntityType,
  HealthResponse,
  LayoutRequest,
  LayoutResponse,
  SearchRequest,
  SearchResponse,
  SilhouetteResponse,
  SiteOverviewResponse,
  SitesResponse,
} from "./types.js";

export class ApiError extends Error {
  readonly code: ApiErrorCode;
  readonly field?: string;

  constructor(payload: ApiErrorPayload, readonly status: number) {
    super(payload.message);
    this.code = payload.code;
    this.field = payload.field;
  }
}

export class ApiClient {
  constructor(private readonly base: string = "") {}

  private async request<T>(method: "GET" | "POST", path: string, body?: unknown): Promise<T> {
    const response = await fetch(this.base + path, {
      method,
      headers: body !== undefined ? { "content-type": "application/json" } : undefined,
      body: body !== undefined ? JSON.stringify(body) : undefined,
    });
    const payload = await response.json();
    if (!response.ok) {
      const error = (payload?.error ?? {
        code: "internal",
        message: `request failed (${response.status})`,
      }) as ApiErrorPayload;
      throw new ApiError(error, response.status);
    }
    return payload as T;
  }

  health(): Promise<HealthResponse> {
    return this.request("GET", "/api/health");
  }

  sites(): Promise<SitesResponse> {
    return this.request("GET", "/api/sites");
  }

  search(body: SearchRequest): Promise<SearchResponse> {
    return this.request("POST", "/api/search", body);
  }

  layout(body: LayoutRequest): Promise<LayoutResponse> {
    return this.request("POST", "/api/layout", body);
  }

  silhouette(body: LayoutRequest): Promise<SilhouetteResponse> {
    return this.request("POST", "/api/silhouette", body);
  }

  emotionClusters(articleIds: string[], k?: number, seed?: number): Promise<EmotionClustersResponse> {
    return this.request("POST", "/api/emotion-clusters", {
      article_ids: articleIds,
      ...(k !== undefined ? { k } : {}),
      ...(seed !== undefined ? { seed } : {}),
    });
  }

  entityMatrix(articleIds: string[], types: EntityType[]): Promise<EntityMatrixResponse> {
    return this.request("POST", "/api/entity-matrix", { article_ids: articleIds, types });
  }

  siteOverview(articleIds: string[]): Promise<SiteOverviewResponse> {
    return this.request("POST", "/api/site-overview", { article_ids: articleIds });
  }

  clusterLabels(
    articleIds: string[],
    assignments: number[],
    topN?: number,
  ): Promise<ClusterLabelsResponse> {
    return this.request("POST", "/api/cluster-labels", {
      article_ids: articleIds,
      assignments,
      ...(topN !== undefined ? { top_n: topN } : {}),
    });
  }

  article(id: string, annotate = true): Promise<ArticleResponse> {
    return this.request("GET", `/api/article/${encodeURIComponent(id)}?annotate=${annotate}`);
  }
}

/** Canned API payloads (matching the server's response schemas) and a
 * fetch mock that routes on path. */
import type {
  ArticleResponse,
  EmotionClustersResponse,
  EntityMatrixResponse,
  LayoutResponse,
  SearchResponse,
  SitesResponse,
} from "../src/types.js";

export const IDS = ["n1", "n2", "n3", "n4", "n5", "n6"];

const site = (id: string): string => (Number(id.slice(1)) <= 3 ? "Alpha Post" : "Beta Herald");

export const SEARCH_RESPONSE: SearchResponse = {
  schema_version: 1,
  results: IDS.map((id, i) => ({
    id,
    score: 3.0 - i * 0.25,
    site: site(id),
    published_at: i % 2 === 0 ? "2016-11-09" : "2016-11-10",
    title: `Story ${id}`,
  })),
  date_from: "2016-11-09",
  date_to: "2016-11-10",
  window_days: 2,
  histogram: [
    { date: "2016-11-09", count: 3 },
    { date: "2016-11-10", count: 3 },
  ],
};

export const LAYOUT_RESPONSE: LayoutResponse = {
  schema_version: 1,
  ids: IDS,
  x: [0.05, 0.15, 0.4, 0.55, 0.75, 1.0],
  y: [0.9, 0.82, 0.35, 0.3, 0.2, 0.0],
  stress: 0.042,
  assignments: [0, 0, 1, 1, 1, 2],
  k: 3,
  seed: 7,
  cluster_space: "aggregate",
};

export const CLUSTER_ONE = ["n3", "n4", "n5"];

export const EMOTION_VECTORS: Record<string, number[]> = {
  n1: [0.12, 0, 0, 0.26, 0, 0.03, 0, 0],
  n2: [0.08, 0.01, 0, 0.29, 0, 0, 0, 0.01],
  n3: [0.05, 0, 0, 0.31, 0, 0, 0, 0.02],
  n4: [0, 0.04, 0, 0, 0.27, 0, 0, 0.11],
  n5: [0, 0, 0, 0.01, 0.33, 0, 0.02, 0.08],
  n6: [0, 0, 0, 0, 0, 0, 0, 0],
};

const DOMINANT_TEMPLATES = [
  {
    dominant_emotions: [
      { emotion: "fear" as const, value: 0.31 },
      { emotion: "anger" as const, value: 0.05 },
      { emotion: "trust" as const, value: 0.02 },
      { emotion: "anticipation" as const, value: 0.0 },
    ],
    contributing_words: { fear: ["panic", "threat"], anger: ["outrage"], trust: [], anticipation: [] },
  },
  {
    dominant_emotions: [
      { emotion: "joy" as const, value: 0.3 },
      { emotion: "trust" as const, value: 0.095 },
      { emotion: "anticipation" as const, value: 0.02 },
      { emotion: "surprise" as const, value: 0.01 },
    ],
    contributing_words: { joy: ["victory", "cheer"], trust: ["ally"], anticipation: [], surprise: [] },
  },
];

/** Emotion clusters for exactly the requested ids: fear-leaning articles
 * (n1..n3) and joy-leaning ones (n4..n6) split apart, extra groups peel
 * off the tail when k > 2. */
export function buildEmotionClusters(ids: string[], k: number): EmotionClustersResponse {
  const fearish = ids.filter((id) => Number(id.slice(1)) <= 3);
  const joyish = ids.filter((id) => Number(id.slice(1)) > 3);
  let groups = [fearish, joyish].filter((g) => g.length > 0);
  while (groups.length < k) {
    const donor = groups.find((g) => g.length > 1);
    if (!donor) break;
    groups.push([donor.pop()!]);
  }
  groups = groups.slice(0, k);
  return {
    schema_version: 1,
    k,
    seed: 7,
    clusters: groups.map((member_ids, index) => ({
      index,
      member_ids,
      ...DOMINANT_TEMPLATES[index % DOMINANT_TEMPLATES.length],
    })),
    emotion_vectors: Object.fromEntries(ids.map((id) => [id, EMOTION_VECTORS[id] ?? []])),
  };
}

/** Entity matrix for exactly the requested ids; every off-diagonal pair
 * shares one person entity. */
export function buildEntityMatrix(ids: string[], types: string[]): EntityMatrixResponse {
  return {
    schema_version: 1,
    ids,
    types: types as EntityMatrixResponse["types"],
    matrix: ids.map((_, i) => ids.map((_, j) => (i === j ? 1.0 : 0.5))),
    word_cloud: [
      { entity: "donald trump", type: "person", frequency: ids.length },
      { entity: "phoenix", type: "location", frequency: 2 },
      { entity: "senate", type: "organization", frequency: 1 },
    ],
    shared: ids.map((_, i) =>
      ids.map((_, j) => (i === j ? [] : [{ type: "person" as const, entity: "donald trump" }])),
    ),
  };
}

export const EMOTION_CLUSTERS_RESPONSE = buildEmotionClusters(CLUSTER_ONE, 2);
export const ENTITY_MATRIX_RESPONSE = buildEntityMatrix(CLUSTER_ONE, [
  "person",
  "location",
  "organization",
]);

export const SITES_RESPONSE: SitesResponse = {
  schema_version: 1,
  sites: [
    ["Alpha Post", 3],
    ["Beta Herald", 3],
  ],
};

export const ARTICLE_RESPONSE: ArticleResponse = {
  schema_version: 1,
  article: {
    id: "n3",
    title: "Story n3",
    site: "Alpha Post",
    author: "desk",
    published_at: "2016-11-09",
    url: null,
    body: "Donald Trump spoke in Phoenix about the election.",
  },
  annotations: [
    { start: 0, end: 12, kind: "person", surface: "Donald Trump", canonical: "donald trump" },
    { start: 22, end: 29, kind: "location", surface: "Phoenix", canonical: "phoenix" },
    { start: 40, end: 48, kind: "keyword", surface: "election", canonical: "election" },
  ],
};

export interface RecordedCall {
  path: string;
  body: unknown;
}

export interface FetchMock {
  calls: RecordedCall[];
  install(): void;
}

type Responder = (body: unknown) => unknown | Promise<unknown>;

export function mockFetch(overrides: Partial<Record<string, Responder>> = {}): FetchMock {
  const calls: RecordedCall[] = [];
  const routes: Record<string, Responder> = {
    "/api/sites": () => SITES_RESPONSE,
    "/api/search": () => SEARCH_RESPONSE,
    "/api/layout": () => LAYOUT_RESPONSE,
    "/api/emotion-clusters": (body) => {
      const { article_ids, k } = body as { article_ids: string[]; k?: number };
      return buildEmotionClusters(article_ids, k ?? 2);
    },
    "/api/entity-matrix": (body) => {
      const { article_ids, types } = body as { article_ids: string[]; types: string[] };
      return buildEntityMatrix(article_ids, types);
    },
    "/api/cluster-labels": () => ({
      schema_version: 1,
      keywords: ["election", "victory"],
      clusters: [0, 1, 2],
      values: [
        [1.0, 0.5, 0.0],
        [0.0, 1.0, 0.5],
      ],
    }),
    "/api/site-overview": () => ({ schema_version: 1, nodes: [], edges: [] }),
    "/api/silhouette": () => ({
      schema_version: 1,
      seed: 7,
      cluster_space: "aggregate",
      table: [
        { k: 2, score: 0.41 },
        { k: 3, score: 0.62 },
        { k: 4, score: 0.3 },
      ],
    }),
    ...overrides,
  };
  const fake = async (url: string, init?: RequestInit): Promise<Response> => {
    const path = url.split("?")[0];
    const body = init?.body ? JSON.parse(String(init.body)) : undefined;
    calls.push({ path, body });
    if (path.startsWith("/api/article/")) {
      return jsonResponse(ARTICLE_RESPONSE);
    }
    const responder = routes[path];
    if (!responder) {
      return jsonResponse(
        { schema_version: 1, error: { code: "not_found", message: `no route ${path}` } },
        404,
      );
    }
    return jsonResponse(await responder(body));
  };
  return {
    calls,
    install() {
      (globalThis as { fetch: unknown }).fetch = fake;
    },
  };
}

export function jsonResponse(payload: unknown, status = 200): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { "content-type": "application/json" },
  });
}

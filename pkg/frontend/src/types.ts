/** Payload types mirroring the JSON API (schema_version 1). */

export const EMOTIONS = [
  "anger",
  "anticipation",
  "disgust",
  "fear",
  "joy",
  "sadness",
  "surprise",
  "trust",
] as const;

export type Emotion = (typeof EMOTIONS)[number];
export type EntityType = "person" | "location" | "organization";
export const ENTITY_TYPES: EntityType[] = ["person", "location", "organization"];

export interface Weights {
  keyword: number;
  entity: number;
  temporal: number;
}

export interface SearchRequest {
  keywords: string[];
  date_from?: string;
  date_to?: string;
  sites_include?: string[];
  sites_exclude?: string[];
  limit?: number;
  balanced?: boolean;
}

export interface SearchResultEntry {
  id: string;
  score: number;
  site: string;
  published_at: string;
  title: string;
}

export interface HistogramBucket {
  date: string;
  count: number;
}

export interface SearchResponse {
  schema_version: number;
  results: SearchResultEntry[];
  date_from: string;
  date_to: string;
  window_days: number;
  histogram: HistogramBucket[];
}

export interface LayoutRequest {
  article_ids: string[];
  weights?: Weights;
  k?: number;
  cluster_space?: "aggregate" | "xy";
  seed?: number;
  date_from?: string;
  date_to?: string;
  include_components?: boolean;
}

export interface LayoutResponse {
  schema_version: number;
  ids: string[];
  x: number[];
  y: number[];
  stress: number;
  assignments: number[];
  k: number;
  seed: number;
  cluster_space: string;
}

export interface SilhouetteRow {
  k: number;
  score: number;
}

export interface SilhouetteResponse {
  schema_version: number;
  seed: number;
  cluster_space: string;
  table: SilhouetteRow[];
}

export interface EmotionValue {
  emotion: Emotion;
  value: number;
}

export interface EmotionCluster {
  index: number;
  member_ids: string[];
  dominant_emotions: EmotionValue[];
  contributing_words: Record<string, string[]>;
}

export interface EmotionClustersResponse {
  schema_version: number;
  k: number;
  seed: number;
  clusters: EmotionCluster[];
  emotion_vectors: Record<string, number[]>;
}

export interface SharedEntity {
  type: EntityType;
  entity: string;
}

export interface WordCloudEntry {
  entity: string;
  type: EntityType;
  frequency: number;
}

export interface EntityMatrixResponse {
  schema_version: number;
  ids: string[];
  types: EntityType[];
  matrix: number[][];
  word_cloud: WordCloudEntry[];
  shared: SharedEntity[][][];
}

export interface SiteOverviewNode {
  site: string;
  article_count: number;
  top_emotions: EmotionValue[];
  top_keywords: string[];
  top_entities: Record<string, string[]>;
}

export interface SiteOverviewResponse {
  schema_version: number;
  nodes: SiteOverviewNode[];
  edges: { site_a: string; site_b: string; similarity: number }[];
}

export interface ClusterLabelsResponse {
  schema_version: number;
  keywords: string[];
  clusters: number[];
  values: number[][];
}

export interface Annotation {
  start: number;
  end: number;
  kind: "keyword" | EntityType;
  surface: string;
  canonical: string;
}

export interface ArticleResponse {
  schema_version: number;
  article: {
    id: string;
    title: string;
    site: string;
    author: string | null;
    published_at: string;
    url: string | null;
    body: string;
  };
  annotations?: Annotation[];
}

export interface SitesResponse {
  schema_version: number;
  sites: [string, number][];
}

export interface HealthResponse {
  schema_version: number;
  status: string;
  corpus_name: string;
  article_count: number;
}

export type ApiErrorCode = "validation_error" | "not_found" | "internal";

export interface ApiErrorPayload {
  code: ApiErrorCode;
  message: string;
  field?: string;
}

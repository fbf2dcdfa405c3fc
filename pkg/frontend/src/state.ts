/** Session state shared by the five panels.
 *
 * Invariants kept here: the subselection is always a subset of the
 * current result ids, weights stay non-negative with at least one
 * positive, and the site color mapping is fixed per result set.
 */
import { SitePalette } from "./colors.js";
import type {
  LayoutResponse,
  SearchRequest,
  SearchResponse,
  SearchResultEntry,
  Weights,
} from "./types.js";

export type SubselectionOrigin = "lasso" | "cluster";

export interface Subselection {
  ids: string[];
  origin: SubselectionOrigin;
}

export type SessionEvent =
  | "result"
  | "layout"
  | "subselection"
  | "weights"
  | "article";

export class Session {
  query: SearchRequest | null = null;
  result: SearchResponse | null = null;
  layout: LayoutResponse | null = null;
  weights: Weights = { keyword: 1, entity: 1, temporal: 1 };
  k = 4;
  clusterSpace: "aggregate" | "xy" = "aggregate";
  subselection: Subselection | null = null;
  selectedArticleId: string | null = null;
  readonly palette = new SitePalette();

  private byId = new Map<string, SearchResultEntry>();
  private listeners = new Map<SessionEvent, Set<() => void>>();

  on(event: SessionEvent, listener: () => void): void {
    if (!this.listeners.has(event)) this.listeners.set(event, new Set());
    this.listeners.get(event)!.add(listener);
  }

  private emit(event: SessionEvent): void {
    for (const listener of this.listeners.get(event) ?? []) listener();
  }

  setResult(query: SearchRequest, result: SearchResponse): void {
    this.query = query;
    this.result = result;
    this.layout = null;
    this.subselection = null;
    this.byId = new Map(result.results.map((entry) => [entry.id, entry]));
    this.palette.assign(result.results.map((entry) => entry.site));
    this.emit("result");
  }

  setLayout(layout: LayoutResponse): void {
    this.layout = layout;
    this.emit("layout");
  }

  setWeights(weights: Weights): void {
    const safe = {
      keyword: Math.max(0, weights.keyword),
      entity: Math.max(0, weights.entity),
      temporal: Math.max(0, weights.temporal),
    };
    if (safe.keyword === 0 && safe.entity === 0 && safe.temporal === 0) return;
    this.weights = safe;
    this.emit("weights");
  }

  /** Returns the ids actually selected (intersected with the result). */
  setSubselection(ids: string[], origin: SubselectionOrigin): string[] {
    const valid = ids.filter((id) => this.byId.has(id));
    if (valid.length === 0) return [];
    this.subselection = { ids: valid, origin };
    this.emit("subselection");
    return valid;
  }

  setSelectedArticle(id: string | null): void {
    this.selectedArticleId = id;
    this.emit("article");
  }

  entry(id: string): SearchResultEntry | undefined {
    return this.byId.get(id);
  }

  clusterMembers(cluster: number): string[] {
    if (!this.layout) return [];
    return this.layout.ids.filter((_, i) => this.layout!.assignments[i] === cluster);
  }
}

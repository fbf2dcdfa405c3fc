/** Wires the five panels to the API through the shared session.
 *
 * All analytics stay server-side; this file only moves payloads between
 * endpoints and renderers.  Layout recomputation is debounced through a
 * single-flight gate so a slider drag storm issues at most one in-flight
 * request; the entity and emotion panels each get their own latest-wins
 * gate.
 */
import { ApiClient, ApiError } from "./api.js";
import { el, toast } from "./dom.js";
import { Session, type SubselectionOrigin } from "./state.js";
import { SingleFlight } from "./singleflight.js";
import { ArticlePanel } from "./panels/article.js";
import { EmotionsPanel } from "./panels/emotions.js";
import { EntitiesPanel } from "./panels/entities.js";
import { OrdinationPanel } from "./panels/ordination.js";
import { SearchPanel } from "./panels/search.js";
import type { LayoutRequest, SearchRequest, Weights } from "./types.js";

export interface App {
  session: Session;
  search: SearchPanel;
  ordination: OrdinationPanel;
  entities: EntitiesPanel;
  emotions: EmotionsPanel;
  article: ArticlePanel;
  layoutFlight: SingleFlight;
  panelFlights: { entities: SingleFlight; emotions: SingleFlight };
  runSearch(request: SearchRequest): Promise<void>;
  subselect(ids: string[], origin: SubselectionOrigin): void;
}

export function createApp(root: HTMLElement, api: ApiClient, debounceMs = 150): App {
  const session = new Session();
  const layoutFlight = new SingleFlight(debounceMs);
  const entitiesFlight = new SingleFlight(0);
  const emotionsFlight = new SingleFlight(0);
  let emotionK = 2;

  const panelHost = (id: string, extra = ""): HTMLElement => {
    const host = el("section", { id, class: `panel ${extra}` });
    root.append(host);
    return host;
  };

  const searchPanel = new SearchPanel(panelHost("panel-search"), {
    onSubmit: (request) => void runSearch(request),
  });

  const layoutRequest = (): LayoutRequest => ({
    article_ids: session.result!.results.map((entry) => entry.id),
    weights: session.weights,
    k: Math.min(session.k, session.result!.results.length),
    cluster_space: session.clusterSpace,
    date_from: session.result!.date_from,
    date_to: session.result!.date_to,
  });

  const scheduleRelayout = (): void => {
    if (!session.result || session.result.results.length < 2) return;
    layoutFlight.schedule(
      () => api.layout(layoutRequest()),
      (layout) => session.setLayout(layout),
      (error) => toast(describe(error)),
    );
  };

  const ordinationPanel = new OrdinationPanel(panelHost("panel-ordination", "wide"), session, {
    onWeightsChange: (weights: Weights) => {
      session.setWeights(weights);
      scheduleRelayout();
    },
    onKChange: (k: number) => {
      session.k = Math.max(1, k);
      scheduleRelayout();
    },
    onClusterSpaceChange: (space) => {
      session.clusterSpace = space;
      scheduleRelayout();
    },
    onSubselect: (ids, origin) => subselect(ids, origin),
    onOpenArticle: (id) => void openArticle(id),
    onSilhouetteHover: () => void showSilhouette(),
    onShowSiteOverview: () => void showSiteOverview(),
    onShowClusterLabels: () => void showClusterLabels(),
  });

  const entitiesPanel = new EntitiesPanel(panelHost("panel-entities"), {
    onTypesChange: () => refreshEntities(),
    onOpenArticle: (id) => void openArticle(id),
  });

  const emotionsPanel = new EmotionsPanel(panelHost("panel-emotions"), session, {
    onKChange: (k: number) => {
      emotionK = Math.max(1, k);
      refreshEmotions();
    },
    onOpenArticle: (id) => void openArticle(id),
  });

  const articlePanel = new ArticlePanel(panelHost("panel-article", "wide"));

  session.on("layout", () => ordinationPanel.render());
  session.on("result", () => {
    ordinationPanel.render();
    entitiesPanel.renderEmpty();
    emotionsPanel.renderEmpty();
  });

  function describe(error: unknown): string {
    return error instanceof ApiError ? error.message : "request failed";
  }

  async function runSearch(request: SearchRequest): Promise<void> {
    try {
      const result = await api.search(request);
      session.setResult(request, result);
      if (result.results.length === 0) {
        searchPanel.showEmptyState();
        return;
      }
      if (result.results.length >= 2) {
        const layout = await api.layout(layoutRequest());
        session.setLayout(layout);
      }
    } catch (error) {
      if (error instanceof ApiError && error.code === "validation_error") {
        searchPanel.showFieldError(error.field, error.message);
      } else {
        toast(describe(error));
      }
    }
  }

  function subselect(ids: string[], origin: SubselectionOrigin): void {
    const selected = session.setSubselection(ids, origin);
    if (selected.length === 0) {
      toast("selection contains no retrieved articles");
      return;
    }
    refreshEntities();
    refreshEmotions();
  }

  function refreshEntities(): void {
    const ids = session.subselection?.ids ?? [];
    if (ids.length < 2) {
      entitiesPanel.renderEmpty();
      return;
    }
    entitiesFlight.schedule(
      () => api.entityMatrix(ids, entitiesPanel.selectedTypes()),
      (view) => entitiesPanel.render(view),
      (error) => toast(describe(error)),
    );
  }

  function refreshEmotions(): void {
    const ids = session.subselection?.ids ?? [];
    if (ids.length === 0) {
      emotionsPanel.renderEmpty();
      return;
    }
    emotionsFlight.schedule(
      () => api.emotionClusters(ids, Math.min(emotionK, ids.length)),
      (summary) => emotionsPanel.render(summary),
      (error) => toast(describe(error)),
    );
  }

  async function openArticle(id: string): Promise<void> {
    try {
      const payload = await api.article(id, true);
      session.setSelectedArticle(id);
      articlePanel.render(payload);
    } catch (error) {
      toast(describe(error)); // panel stays unchanged on not_found
    }
  }

  async function showSilhouette(): Promise<void> {
    if (!session.result || session.result.results.length < 3) return;
    try {
      const table = await api.silhouette({
        article_ids: session.result.results.map((entry) => entry.id),
        weights: session.weights,
        cluster_space: session.clusterSpace,
        date_from: session.result.date_from,
        date_to: session.result.date_to,
      });
      ordinationPanel.showSilhouette(table);
    } catch {
      ordinationPanel.showSilhouetteError(() => void showSilhouette());
    }
  }

  async function showSiteOverview(): Promise<void> {
    if (!session.result || session.result.results.length === 0) return;
    try {
      const overview = await api.siteOverview(session.result.results.map((entry) => entry.id));
      ordinationPanel.renderSiteOverview(overview);
    } catch (error) {
      toast(describe(error));
    }
  }

  async function showClusterLabels(): Promise<void> {
    if (!session.layout) return;
    try {
      const heatmap = await api.clusterLabels(session.layout.ids, [...session.layout.assignments]);
      ordinationPanel.renderClusterLabels(heatmap);
    } catch (error) {
      toast(describe(error));
    }
  }

  void api
    .sites()
    .then((payload) => searchPanel.populateSites(payload.sites))
    .catch(() => toast("could not load site list"));

  return {
    session,
    search: searchPanel,
    ordination: ordinationPanel,
    entities: entitiesPanel,
    emotions: emotionsPanel,
    article: articlePanel,
    layoutFlight,
    panelFlights: { entities: entitiesFlight, emotions: emotionsFlight },
    runSearch,
    subselect,
  };
}

declare global {
  interface Window {
    NEWSLENS_API_BASE?: string;
  }
}

const autoRoot = typeof document !== "undefined" ? document.getElementById("app") : null;
if (autoRoot) {
  createApp(autoRoot, new ApiClient(window.NEWSLENS_API_BASE ?? ""));
}

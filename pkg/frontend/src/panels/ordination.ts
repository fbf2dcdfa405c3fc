/** Panel B: MDS scatter with cluster hulls, lasso and cluster-click
 * subselection, weight sliders, k input with silhouette tooltip, the
 * temporal area chart, and the site-overview / cluster-labels tabs. */
import { clear, el, svgEl, toast } from "../dom.js";
import { EMOTION_COLORS, ENTITY_COLORS } from "../colors.js";
import { paddedHull, pointInPolygon, polygonPath, type Point } from "../geometry.js";
import type { Session, SubselectionOrigin } from "../state.js";
import type {
  ClusterLabelsResponse,
  SilhouetteResponse,
  SiteOverviewResponse,
  Weights,
} from "../types.js";

export const PLOT_W = 560;
export const PLOT_H = 420;
export const MARGIN = 24;
const HULL_PAD = 16;
const AREA_H = 64;

const CLUSTER_HUES = [
  "#4e79a7",
  "#e15759",
  "#59a14f",
  "#edc948",
  "#b07aa1",
  "#76b7b2",
  "#ff9da7",
  "#9c755f",
  "#f28e2b",
  "#bab0ac",
];

export interface OrdinationCallbacks {
  onWeightsChange(weights: Weights): void;
  onKChange(k: number): void;
  onClusterSpaceChange(space: "aggregate" | "xy"): void;
  onSubselect(ids: string[], origin: SubselectionOrigin): void;
  onOpenArticle(id: string): void;
  onSilhouetteHover(): void;
  onShowSiteOverview(): void;
  onShowClusterLabels(): void;
}

export class OrdinationPanel {
  private plot: SVGElement;
  private pointLayer: SVGElement;
  private hullLayer: SVGElement;
  private lassoLayer: SVGElement;
  private areaChart: SVGElement;
  private legendBox: HTMLElement;
  private tooltip: HTMLElement;
  private tabContent: HTMLElement;
  private stressLabel: HTMLElement;
  private lassoPoints: Point[] = [];
  private lassoActive = false;

  constructor(private root: HTMLElement, private session: Session, private callbacks: OrdinationCallbacks) {
    this.hullLayer = svgEl("g", { class: "hulls" });
    this.pointLayer = svgEl("g", { class: "points" });
    this.lassoLayer = svgEl("g", { class: "lasso" });
    this.plot = svgEl(
      "svg",
      { id: "ordination-plot", width: PLOT_W, height: PLOT_H, viewBox: `0 0 ${PLOT_W} ${PLOT_H}` },
      this.hullLayer,
      this.pointLayer,
      this.lassoLayer,
    );
    this.areaChart = svgEl("svg", {
      id: "temporal-area",
      width: PLOT_W,
      height: AREA_H,
      viewBox: `0 0 ${PLOT_W} ${AREA_H}`,
    });
    this.legendBox = el("div", { class: "legend", id: "site-legend" });
    this.tooltip = el("div", { class: "silhouette-tooltip hidden", id: "silhouette-tooltip" });
    this.tabContent = el("div", { class: "tab-content", id: "overview-tabs-content" });
    this.stressLabel = el("span", { class: "stress", id: "layout-stress" });

    root.append(
      el("h2", {}, "Ordination"),
      this.controls(),
      this.tooltip,
      this.areaChart,
      this.plot,
      this.legendBox,
      this.stressLabel,
      this.tabs(),
      this.tabContent,
    );
    this.wireLasso();
  }

  private controls(): HTMLElement {
    const weightRow = el("div", { class: "weights" });
    const sliders: Record<string, HTMLInputElement> = {};
    for (const name of ["keyword", "entity", "temporal"] as const) {
      const slider = el("input", {
        type: "range",
        id: `weight-${name}`,
        min: "0",
        max: "3",
        step: "0.1",
        value: String(this.session.weights[name]),
      });
      const value = el("span", { class: "weight-value", id: `weight-${name}-value` },
        this.session.weights[name].toFixed(1));
      slider.addEventListener("input", () => {
        value.textContent = Number(slider.value).toFixed(1);
        this.callbacks.onWeightsChange({
          keyword: Number(sliders.keyword.value),
          entity: Number(sliders.entity.value),
          temporal: Number(sliders.temporal.value),
        });
      });
      sliders[name] = slider;
      weightRow.append(el("label", { class: "inline" }, `w_${name[0]} `, slider, value));
    }

    const kInput = el("input", {
      type: "number",
      id: "cluster-k",
      min: "1",
      value: String(this.session.k),
    });
    kInput.addEventListener("change", () => this.callbacks.onKChange(Number(kInput.value)));
    kInput.addEventListener("mouseenter", () => this.callbacks.onSilhouetteHover());
    kInput.addEventListener("mouseleave", () => this.hideSilhouette());

    const space = el(
      "select",
      { id: "cluster-space" },
      el("option", { value: "aggregate" }, "aggregate pairwise distance"),
      el("option", { value: "xy" }, "x/y positioning"),
    ) as HTMLSelectElement;
    space.addEventListener("change", () =>
      this.callbacks.onClusterSpaceChange(space.value as "aggregate" | "xy"),
    );

    return el(
      "div",
      { class: "ordination-controls" },
      weightRow,
      el("label", { class: "inline" }, "k ", kInput),
      el("label", { class: "inline" }, "cluster on ", space),
    );
  }

  private tabs(): HTMLElement {
    const overviewBtn = el("button", { type: "button", id: "tab-site-overview" }, "Site overview");
    const labelsBtn = el("button", { type: "button", id: "tab-cluster-labels" }, "Cluster labels");
    overviewBtn.addEventListener("click", () => this.callbacks.onShowSiteOverview());
    labelsBtn.addEventListener("click", () => this.callbacks.onShowClusterLabels());
    return el("div", { class: "tabs" }, overviewBtn, labelsBtn);
  }

  private toPixel(i: number): Point {
    const layout = this.session.layout!;
    return {
      x: MARGIN + layout.x[i] * (PLOT_W - 2 * MARGIN),
      y: MARGIN + (1 - layout.y[i]) * (PLOT_H - 2 * MARGIN),
    };
  }

  render(): void {
    const layout = this.session.layout;
    clear(this.hullLayer);
    clear(this.pointLayer);
    this.renderLegend();
    this.renderArea();
    if (!layout) {
      this.stressLabel.textContent = "";
      return;
    }
    this.stressLabel.textContent = `stress ${layout.stress.toFixed(4)}`;

    const byCluster = new Map<number, { id: string; point: Point }[]>();
    layout.ids.forEach((id, i) => {
      const cluster = layout.assignments[i];
      if (!byCluster.has(cluster)) byCluster.set(cluster, []);
      byCluster.get(cluster)!.push({ id, point: this.toPixel(i) });
    });

    for (const [cluster, members] of [...byCluster.entries()].sort((a, b) => a[0] - b[0])) {
      const hull = paddedHull(members.map((m) => m.point), HULL_PAD);
      const path = svgEl("path", {
        d: polygonPath(hull),
        class: "cluster-hull",
        "data-cluster": cluster,
        fill: CLUSTER_HUES[cluster % CLUSTER_HUES.length],
        "fill-opacity": "0.12",
        stroke: CLUSTER_HUES[cluster % CLUSTER_HUES.length],
        "stroke-opacity": "0.5",
      });
      path.addEventListener("click", () => {
        this.callbacks.onSubselect(this.session.clusterMembers(cluster), "cluster");
      });
      this.hullLayer.append(path);
    }

    layout.ids.forEach((id, i) => {
      const entry = this.session.entry(id);
      const point = this.toPixel(i);
      const circle = svgEl("circle", {
        class: "article-dot",
        "data-article-id": id,
        r: 5,
        cx: 0,
        cy: 0,
        fill: this.session.palette.color(entry?.site ?? ""),
        stroke: "#ffffff",
        "stroke-width": "1",
        style: `transform: translate(${point.x}px, ${point.y}px);`,
      });
      circle.append(
        svgEl("title", {}, `${entry?.title ?? id}\n${entry?.site ?? ""} ${entry?.published_at ?? ""}`),
      );
      circle.addEventListener("click", (event) => {
        event.stopPropagation();
        this.callbacks.onOpenArticle(id);
      });
      this.pointLayer.append(circle);
    });
  }

  private renderLegend(): void {
    clear(this.legendBox);
    for (const [site, color] of this.session.palette.entries()) {
      this.legendBox.append(
        el("span", { class: "legend-item" }, el("i", { style: `background:${color}` }), ` ${site}`),
      );
    }
  }

  private renderArea(): void {
    clear(this.areaChart);
    const histogram = this.session.result?.histogram ?? [];
    if (histogram.length === 0) return;
    const max = Math.max(1, ...histogram.map((b) => b.count));
    const step = PLOT_W / Math.max(1, histogram.length - 1);
    const baseline = AREA_H - 4;
    const coords = histogram.map((b, i) => ({
      x: histogram.length === 1 ? PLOT_W / 2 : i * step,
      y: baseline - (b.count / max) * (AREA_H - 12),
    }));
    const path =
      `M 0 ${baseline} ` +
      coords.map((c) => `L ${c.x.toFixed(1)} ${c.y.toFixed(1)}`).join(" ") +
      ` L ${PLOT_W} ${baseline} Z`;
    this.areaChart.append(
      svgEl("path", { d: path, fill: "#9ecae9", stroke: "#4e79a7", "data-role": "area" }),
    );
    this.areaChart.append(
      svgEl("title", {}, histogram.map((b) => `${b.date}: ${b.count}`).join("\n")),
    );
  }

  private wireLasso(): void {
    this.plot.addEventListener("pointerdown", (event) => {
      if ((event.target as Element).classList?.contains("article-dot")) return;
      this.lassoActive = true;
      this.lassoPoints = [this.eventPoint(event)];
    });
    this.plot.addEventListener("pointermove", (event) => {
      if (!this.lassoActive) return;
      this.lassoPoints.push(this.eventPoint(event));
      this.drawLasso();
    });
    this.plot.addEventListener("pointerup", () => {
      if (!this.lassoActive) return;
      this.lassoActive = false;
      clear(this.lassoLayer);
      if (this.lassoPoints.length >= 3) this.applyLasso();
      this.lassoPoints = [];
    });
  }

  private eventPoint(event: PointerEvent): Point {
    const rect = this.plot.getBoundingClientRect();
    return { x: event.clientX - rect.left, y: event.clientY - rect.top };
  }

  private drawLasso(): void {
    clear(this.lassoLayer);
    this.lassoLayer.append(
      svgEl("path", {
        d: polygonPath(this.lassoPoints),
        class: "lasso-path",
        fill: "none",
        stroke: "#555",
        "stroke-dasharray": "4 3",
      }),
    );
  }

  private applyLasso(): void {
    const layout = this.session.layout;
    if (!layout) return;
    const inside = layout.ids.filter((_, i) => pointInPolygon(this.toPixel(i), this.lassoPoints));
    if (inside.length === 0) {
      toast("lasso selected no articles");
      return;
    }
    this.callbacks.onSubselect(inside, "lasso");
  }

  // -- silhouette tooltip ----------------------------------------------------

  showSilhouette(table: SilhouetteResponse): void {
    clear(this.tooltip);
    this.tooltip.classList.remove("hidden");
    const best = table.table.reduce((a, b) => (b.score > a.score ? b : a), table.table[0]);
    for (const row of table.table) {
      const width = Math.max(2, Math.round(((row.score + 1) / 2) * 120));
      this.tooltip.append(
        el(
          "div",
          { class: `silhouette-row${row.k === best.k ? " best" : ""}`, "data-k": row.k },
          el("span", { class: "sil-k" }, `k=${row.k}`),
          el("i", { class: "sil-bar", style: `width:${width}px` }),
          el("span", { class: "sil-score" }, row.score.toFixed(3)),
        ),
      );
    }
  }

  showSilhouetteError(retry: () => void): void {
    clear(this.tooltip);
    this.tooltip.classList.remove("hidden");
    const button = el("button", { type: "button", class: "retry" }, "retry");
    button.addEventListener("click", retry);
    this.tooltip.append(el("span", {}, "silhouette unavailable "), button);
  }

  hideSilhouette(): void {
    this.tooltip.classList.add("hidden");
  }

  // -- tabs -------------------------------------------------------------------

  renderSiteOverview(overview: SiteOverviewResponse): void {
    clear(this.tabContent);
    const nodes = el("div", { class: "site-cards" });
    for (const node of overview.nodes) {
      const bars = el("div", { class: "emotion-bars" });
      for (const { emotion, value } of node.top_emotions) {
        bars.append(
          el(
            "div",
            { class: "emotion-bar-row" },
            el("span", { class: "emotion-name" }, emotion),
            el("i", {
              class: "emotion-bar",
              style: `width:${Math.round(value * 220)}px;background:${EMOTION_COLORS[emotion]}`,
              "data-emotion": emotion,
              "data-value": value.toFixed(3),
            }),
          ),
        );
      }
      const entities = el("div", { class: "site-entities" });
      for (const [etype, names] of Object.entries(node.top_entities)) {
        if (names.length === 0) continue;
        entities.append(
          el(
            "div",
            {},
            el("span", { class: "entity-type", style: `color:${ENTITY_COLORS[etype]}` }, etype),
            ` ${names.join(", ")}`,
          ),
        );
      }
      nodes.append(
        el(
          "div",
          { class: "site-card", "data-site": node.site },
          el("h3", {}, `${node.site} (${node.article_count})`),
          bars,
          el("div", { class: "site-keywords" }, node.top_keywords.join(", ")),
          entities,
        ),
      );
    }
    const edges = el("ul", { class: "site-edges" });
    for (const edge of overview.edges) {
      edges.append(el("li", {}, `${edge.site_a} — ${edge.site_b}: ${edge.similarity.toFixed(3)}`));
    }
    this.tabContent.append(nodes, overview.edges.length ? edges : el("p", {}, "no edges above threshold"));
  }

  renderClusterLabels(heatmap: ClusterLabelsResponse): void {
    clear(this.tabContent);
    const table = el("table", { class: "heatmap", id: "cluster-heatmap" });
    const head = el("tr", {}, el("th", {}, ""));
    for (const cluster of heatmap.clusters) head.append(el("th", {}, `c${cluster}`));
    table.append(head);
    heatmap.keywords.forEach((keyword, r) => {
      const row = el("tr", {}, el("th", {}, keyword));
      heatmap.values[r].forEach((value) => {
        row.append(
          el("td", {
            style: `background: rgba(78, 121, 167, ${value.toFixed(3)})`,
            title: value.toFixed(3),
            "data-value": value.toFixed(3),
          }),
        );
      });
      table.append(row);
    });
    this.tabContent.append(table);
  }
}

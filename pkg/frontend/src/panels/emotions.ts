/** Panel D: emotion-space clusters of the subselection.  Each cluster row
 * shows its dominant emotions with contributing words and its members
 * ordered by publication day (equal spacing per day); circles toggle to
 * radial bar glyphs, hovering shows the article's full 8-bar vector. */
import { clear, el, svgEl } from "../dom.js";
import { EMOTION_COLORS } from "../colors.js";
import type { Session } from "../state.js";
import { EMOTIONS, type EmotionClustersResponse } from "../types.js";

const DAY_STEP = 26;
const ROW_H = 24;
const GLYPH_R = 7;

export interface EmotionsCallbacks {
  onKChange(k: number): void;
  onOpenArticle(id: string): void;
}

export class EmotionsPanel {
  private kInput: HTMLInputElement;
  private modeButton: HTMLButtonElement;
  private rowsBox: HTMLElement;
  private hoverBox: HTMLElement;
  private radial = false;
  private summary: EmotionClustersResponse | null = null;

  constructor(private root: HTMLElement, private session: Session, private callbacks: EmotionsCallbacks) {
    this.kInput = el("input", { type: "number", id: "emotion-k", min: "1", value: "2" });
    this.kInput.addEventListener("change", () => this.callbacks.onKChange(Number(this.kInput.value)));
    this.modeButton = el("button", { type: "button", id: "emotion-mode" }, "radial bars");
    this.modeButton.addEventListener("click", () => {
      this.radial = !this.radial;
      this.modeButton.textContent = this.radial ? "circles" : "radial bars";
      if (this.summary) this.render(this.summary);
    });
    this.rowsBox = el("div", { class: "emotion-rows", id: "emotion-rows" });
    this.hoverBox = el("div", { class: "emotion-hover hidden", id: "emotion-hover" });
    root.append(
      el("h2", {}, "Emotions"),
      el("div", { class: "emotion-controls" },
        el("label", { class: "inline" }, "k ", this.kInput), this.modeButton),
      this.hoverBox,
      this.rowsBox,
    );
  }

  renderEmpty(): void {
    this.summary = null;
    clear(this.rowsBox);
    this.rowsBox.append(el("p", { class: "hint" }, "make a subselection in the ordination panel"));
  }

  render(summary: EmotionClustersResponse): void {
    this.summary = summary;
    this.kInput.value = String(summary.k);
    clear(this.rowsBox);
    for (const cluster of summary.clusters) {
      const label = el("div", { class: "cluster-label" }, el("h3", {}, `cluster ${cluster.index}`));
      for (const { emotion, value } of cluster.dominant_emotions) {
        const words = cluster.contributing_words[emotion] ?? [];
        label.append(
          el(
            "div",
            { class: "dominant-row" },
            el("span", {
              class: "chip",
              style: `background:${EMOTION_COLORS[emotion]}`,
              "data-emotion": emotion,
              "data-value": value.toFixed(3),
            }, `${emotion} ${value.toFixed(3)}`),
            el("span", { class: "contributing" }, words.join(", ")),
          ),
        );
      }
      this.rowsBox.append(
        el("div", { class: "emotion-cluster", "data-cluster": cluster.index },
          label, this.memberStrip(cluster.member_ids, summary)),
      );
    }
  }

  private memberStrip(memberIds: string[], summary: EmotionClustersResponse): SVGElement {
    const days = memberIds.map((id) => this.session.entry(id)?.published_at ?? "");
    const uniqueDays = [...new Set(days)].sort();
    const dayIndex = new Map(uniqueDays.map((d, i) => [d, i]));
    const stacks = new Map<string, number>();
    const width = Math.max(uniqueDays.length * DAY_STEP + DAY_STEP, 120);
    let maxStack = 1;
    const placed = memberIds.map((id) => {
      const day = this.session.entry(id)?.published_at ?? "";
      const stack = stacks.get(day) ?? 0;
      stacks.set(day, stack + 1);
      maxStack = Math.max(maxStack, stack + 1);
      return { id, x: DAY_STEP / 2 + (dayIndex.get(day) ?? 0) * DAY_STEP, row: stack };
    });
    const height = maxStack * ROW_H + 8;
    const strip = svgEl("svg", {
      class: "member-strip",
      width,
      height,
      viewBox: `0 0 ${width} ${height}`,
    });
    for (const member of placed) {
      const cy = height - (member.row * ROW_H + ROW_H / 2);
      strip.append(this.glyph(member.id, member.x, cy, summary));
    }
    return strip;
  }

  private glyph(id: string, cx: number, cy: number, summary: EmotionClustersResponse): SVGElement {
    const entry = this.session.entry(id);
    const vector = summary.emotion_vectors[id] ?? new Array(8).fill(0);
    const group = svgEl("g", {
      class: "member-glyph",
      "data-article-id": id,
      style: `transform: translate(${cx}px, ${cy}px);`,
    });
    group.append(
      svgEl("circle", {
        r: GLYPH_R,
        fill: this.session.palette.color(entry?.site ?? ""),
        stroke: "#fff",
      }),
    );
    if (this.radial) {
      vector.forEach((value, i) => {
        const angle = (Math.PI * 2 * i) / 8 - Math.PI / 2;
        const length = GLYPH_R + value * 26;
        group.append(
          svgEl("line", {
            class: "radial-bar",
            "data-emotion": EMOTIONS[i],
            x1: (GLYPH_R * Math.cos(angle)).toFixed(2),
            y1: (GLYPH_R * Math.sin(angle)).toFixed(2),
            x2: (length * Math.cos(angle)).toFixed(2),
            y2: (length * Math.sin(angle)).toFixed(2),
            stroke: EMOTION_COLORS[EMOTIONS[i]],
            "stroke-width": "2.5",
          }),
        );
      });
    }
    group.append(svgEl("title", {}, `${entry?.title ?? id}\n${entry?.published_at ?? ""}`));
    group.addEventListener("mouseenter", () => this.showHover(id, vector));
    group.addEventListener("mouseleave", () => this.hoverBox.classList.add("hidden"));
    group.addEventListener("click", () => this.callbacks.onOpenArticle(id));
    return group;
  }

  private showHover(id: string, vector: number[]): void {
    clear(this.hoverBox);
    this.hoverBox.classList.remove("hidden");
    const entry = this.session.entry(id);
    this.hoverBox.append(el("strong", {}, entry?.title ?? id));
    const chart = el("div", { class: "hover-bars" });
    vector.forEach((value, i) => {
      chart.append(
        el(
          "div",
          { class: "hover-bar-col" },
          el("i", {
            class: "hover-bar",
            "data-emotion": EMOTIONS[i],
            "data-value": value.toFixed(3),
            style: `height:${Math.round(value * 60)}px;background:${EMOTION_COLORS[EMOTIONS[i]]}`,
          }),
          el("span", { class: "hover-bar-label" }, EMOTIONS[i].slice(0, 3)),
        ),
      );
    });
    this.hoverBox.append(chart);
  }

  renderedIds(): string[] {
    return [...this.rowsBox.querySelectorAll(".member-glyph")].map(
      (node) => node.getAttribute("data-article-id")!,
    );
  }
}

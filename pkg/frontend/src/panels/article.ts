/** Panel E: raw article text with keyword/entity highlights. */
import { clear, el } from "../dom.js";
import { ENTITY_COLORS } from "../colors.js";
import type { Annotation, ArticleResponse } from "../types.js";

export class ArticlePanel {
  private keywordToggle: HTMLInputElement;
  private entityToggle: HTMLInputElement;
  private metaBox: HTMLElement;
  private bodyBox: HTMLElement;
  private current: ArticleResponse | null = null;

  constructor(private root: HTMLElement) {
    this.keywordToggle = el("input", { type: "checkbox", id: "highlight-keywords", checked: true });
    this.entityToggle = el("input", { type: "checkbox", id: "highlight-entities", checked: true });
    this.keywordToggle.addEventListener("change", () => this.renderBody());
    this.entityToggle.addEventListener("change", () => this.renderBody());
    this.metaBox = el("div", { class: "article-meta", id: "article-meta" });
    this.bodyBox = el("div", { class: "article-body", id: "article-body" });
    root.append(
      el("h2", {}, "Article"),
      el(
        "div",
        { class: "article-toggles" },
        el("label", { class: "inline" }, this.keywordToggle, " keywords"),
        el("label", { class: "inline" }, this.entityToggle, " entities"),
      ),
      this.metaBox,
      this.bodyBox,
    );
  }

  render(payload: ArticleResponse): void {
    this.current = payload;
    clear(this.metaBox);
    const article = payload.article;
    this.metaBox.append(
      el("h3", { "data-article-id": article.id }, article.title || article.id),
      el(
        "p",
        { class: "byline" },
        `${article.site} · ${article.published_at}` +
          (article.author ? ` · ${article.author}` : ""),
      ),
    );
    if (article.url) {
      this.metaBox.append(el("a", { href: article.url, target: "_blank" }, article.url));
    }
    this.renderBody();
  }

  private activeAnnotations(): Annotation[] {
    const annotations = this.current?.annotations ?? [];
    return annotations.filter((a) =>
      a.kind === "keyword" ? this.keywordToggle.checked : this.entityToggle.checked,
    );
  }

  private renderBody(): void {
    clear(this.bodyBox);
    if (!this.current) return;
    const body = this.current.article.body;
    const spans = this.activeAnnotations();
    let cursor = 0;
    for (const span of spans) {
      if (span.start > cursor) this.bodyBox.append(body.slice(cursor, span.start));
      const color = span.kind === "keyword" ? "#f6d55c" : ENTITY_COLORS[span.kind];
      this.bodyBox.append(
        el(
          "mark",
          {
            class: `ann ann-${span.kind}`,
            "data-kind": span.kind,
            "data-canonical": span.canonical,
            style: span.kind === "keyword" ? "" : `background:${color};color:#fff`,
            title: `${span.kind}: ${span.canonical}`,
          },
          body.slice(span.start, span.end),
        ),
      );
      cursor = span.end;
    }
    this.bodyBox.append(body.slice(cursor));
  }

  highlightCount(): number {
    return this.bodyBox.querySelectorAll("mark").length;
  }
}

/** Panel C: entity-similarity adjacency matrix plus word cloud.  Hovering
 * a cell highlights the pair's shared entities in the cloud; the type
 * toggle re-requests the matrix for the selected entity types. */
import { clear, el } from "../dom.js";
import { ENTITY_COLORS } from "../colors.js";
import { ENTITY_TYPES, type EntityMatrixResponse, type EntityType } from "../types.js";

export interface EntitiesCallbacks {
  onTypesChange(types: EntityType[]): void;
  onOpenArticle(id: string): void;
}

export class EntitiesPanel {
  private toggles = new Map<EntityType, HTMLInputElement>();
  private matrixBox: HTMLElement;
  private cloudBox: HTMLElement;
  private view: EntityMatrixResponse | null = null;

  constructor(private root: HTMLElement, private callbacks: EntitiesCallbacks) {
    const toggleRow = el("div", { class: "type-toggles" });
    for (const etype of ENTITY_TYPES) {
      const box = el("input", { type: "checkbox", id: `type-${etype}`, checked: true });
      box.addEventListener("change", () => {
        const chosen = this.selectedTypes();
        if (chosen.length === 0) {
          box.checked = true; // at least one type stays active
          return;
        }
        this.callbacks.onTypesChange(chosen);
      });
      this.toggles.set(etype, box);
      toggleRow.append(
        el("label", { class: "inline", style: `color:${ENTITY_COLORS[etype]}` }, box, ` ${etype}`),
      );
    }
    this.matrixBox = el("div", { class: "matrix-box", id: "entity-matrix" });
    this.cloudBox = el("div", { class: "word-cloud", id: "entity-cloud" });
    root.append(el("h2", {}, "Entities"), toggleRow, this.matrixBox, this.cloudBox);
  }

  selectedTypes(): EntityType[] {
    return ENTITY_TYPES.filter((etype) => this.toggles.get(etype)!.checked);
  }

  render(view: EntityMatrixResponse): void {
    this.view = view;
    this.renderMatrix();
    this.renderCloud();
  }

  renderEmpty(): void {
    this.view = null;
    clear(this.matrixBox);
    clear(this.cloudBox);
    this.matrixBox.append(el("p", { class: "hint" }, "make a subselection in the ordination panel"));
  }

  private renderMatrix(): void {
    clear(this.matrixBox);
    const view = this.view!;
    const table = el("table", { class: "adjacency" });
    const head = el("tr", {}, el("th", {}, ""));
    for (const id of view.ids) {
      const label = el("th", { class: "matrix-label", "data-article-id": id }, id);
      label.addEventListener("click", () => this.callbacks.onOpenArticle(id));
      head.append(label);
    }
    table.append(head);
    view.ids.forEach((rowId, i) => {
      const rowLabel = el("th", { class: "matrix-label", "data-article-id": rowId }, rowId);
      rowLabel.addEventListener("click", () => this.callbacks.onOpenArticle(rowId));
      const row = el("tr", {}, rowLabel);
      view.ids.forEach((_, j) => {
        const value = view.matrix[i][j];
        const cell = el("td", {
          class: "matrix-cell",
          "data-i": i,
          "data-j": j,
          title: value.toFixed(3),
          style: `background: rgba(78, 121, 167, ${(0.08 + 0.92 * value).toFixed(3)})`,
        });
        cell.addEventListener("mouseenter", () => this.highlightShared(i, j));
        cell.addEventListener("mouseleave", () => this.clearHighlights());
        row.append(cell);
      });
      table.append(row);
    });
    this.matrixBox.append(table);
  }

  private renderCloud(): void {
    clear(this.cloudBox);
    const view = this.view!;
    const top = view.word_cloud[0]?.frequency ?? 1;
    for (const word of view.word_cloud) {
      const size = 11 + Math.round((word.frequency / top) * 14);
      this.cloudBox.append(
        el(
          "span",
          {
            class: "cloud-word",
            "data-entity": `${word.type}:${word.entity}`,
            style: `font-size:${size}px;color:${ENTITY_COLORS[word.type]}`,
            title: `${word.entity} (${word.type}) in ${word.frequency} articles`,
          },
          word.entity,
        ),
      );
    }
  }

  private highlightShared(i: number, j: number): void {
    this.clearHighlights();
    const shared = this.view?.shared[i][j] ?? [];
    for (const item of shared) {
      const key = `${item.type}:${item.entity}`;
      for (const node of this.cloudBox.querySelectorAll(".cloud-word")) {
        if (node.getAttribute("data-entity") === key) node.classList.add("highlight");
      }
    }
  }

  private clearHighlights(): void {
    for (const node of this.cloudBox.querySelectorAll(".cloud-word.highlight")) {
      node.classList.remove("highlight");
    }
  }

  renderedIds(): string[] {
    return [...this.matrixBox.querySelectorAll("tr:first-child .matrix-label")].map(
      (node) => node.getAttribute("data-article-id")!,
    );
  }
}

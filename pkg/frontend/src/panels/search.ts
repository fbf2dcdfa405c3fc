/** Panel A: query form with date/site/limit constraints and balanced mode.
 * API validation errors surface inline next to the offending field. */
import { clear, el } from "../dom.js";
import type { SearchRequest } from "../types.js";

export interface SearchCallbacks {
  onSubmit(request: SearchRequest): void;
}

export class SearchPanel {
  private keywordsInput: HTMLInputElement;
  private fromInput: HTMLInputElement;
  private toInput: HTMLInputElement;
  private limitInput: HTMLInputElement;
  private balancedInput: HTMLInputElement;
  private sitesBox: HTMLElement;
  private errors = new Map<string, HTMLElement>();

  constructor(private root: HTMLElement, private callbacks: SearchCallbacks) {
    this.keywordsInput = el("input", {
      type: "text",
      id: "search-keywords",
      placeholder: "keywords, space separated",
    });
    this.fromInput = el("input", { type: "text", id: "search-from", placeholder: "YYYY-MM-DD" });
    this.toInput = el("input", { type: "text", id: "search-to", placeholder: "YYYY-MM-DD" });
    this.limitInput = el("input", { type: "number", id: "search-limit", value: "50", min: "1" });
    this.balancedInput = el("input", { type: "checkbox", id: "search-balanced" });
    this.sitesBox = el("div", { class: "site-filter", id: "search-sites" });

    const form = el(
      "form",
      { class: "search-form" },
      this.field("keywords", "Keywords", this.keywordsInput),
      this.field("date_from", "From", this.fromInput),
      this.field("date_to", "To", this.toInput),
      this.field("limit", "Articles", this.limitInput),
      el("label", { class: "inline" }, this.balancedInput, " balanced per site"),
      el("div", {}, el("span", { class: "field-label" }, "Sites"), this.sitesBox),
      el("button", { type: "submit", id: "search-submit" }, "Search"),
    );
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      this.clearErrors();
      this.callbacks.onSubmit(this.currentRequest());
    });
    root.append(el("h2", {}, "Search"), form);
  }

  private field(name: string, label: string, input: HTMLElement): HTMLElement {
    const error = el("span", { class: "field-error", "data-error-for": name });
    this.errors.set(name, error);
    return el("div", { class: "field" }, el("span", { class: "field-label" }, label), input, error);
  }

  populateSites(sites: [string, number][]): void {
    clear(this.sitesBox);
    for (const [site, count] of sites) {
      const box = el("input", { type: "checkbox", value: site, checked: true });
      this.sitesBox.append(el("label", { class: "inline" }, box, ` ${site} (${count})`));
    }
  }

  currentRequest(): SearchRequest {
    const keywords = this.keywordsInput.value.trim().split(/\s+/).filter(Boolean);
    const request: SearchRequest = { keywords, limit: Number(this.limitInput.value) || 50 };
    if (this.fromInput.value.trim()) request.date_from = this.fromInput.value.trim();
    if (this.toInput.value.trim()) request.date_to = this.toInput.value.trim();
    if (this.balancedInput.checked) request.balanced = true;
    const boxes = [...this.sitesBox.querySelectorAll("input[type=checkbox]")] as HTMLInputElement[];
    const chosen = boxes.filter((b) => b.checked).map((b) => b.value);
    if (boxes.length > 0 && chosen.length < boxes.length) request.sites_include = chosen;
    return request;
  }

  showFieldError(field: string | undefined, message: string): void {
    const slot = (field && this.errors.get(field)) || this.errors.get("keywords")!;
    slot.textContent = message;
  }

  clearErrors(): void {
    for (const slot of this.errors.values()) slot.textContent = "";
  }

  showEmptyState(): void {
    this.showFieldError("keywords", "no articles matched; adjust the query");
  }
}

/** Deterministic session palettes: site colors are assigned by legend
 * order (sorted site names), emotion colors are fixed. */
import type { Emotion } from "./types.js";

const SITE_PALETTE = [
  "#4e79a7",
  "#f28e2b",
  "#59a14f",
  "#e15759",
  "#b07aa1",
  "#76b7b2",
  "#edc948",
  "#ff9da7",
  "#9c755f",
  "#bab0ac",
];

export const EMOTION_COLORS: Record<Emotion, string> = {
  anger: "#d62728",
  anticipation: "#ff7f0e",
  disgust: "#8c564b",
  fear: "#7f2ea0",
  joy: "#f2c907",
  sadness: "#1f77b4",
  surprise: "#17becf",
  trust: "#2ca02c",
};

export const ENTITY_COLORS: Record<string, string> = {
  person: "#4e79a7",
  location: "#59a14f",
  organization: "#e15759",
};

export class SitePalette {
  private assigned = new Map<string, string>();

  /** Fix the mapping for a result set; legend order is sorted site names. */
  assign(sites: string[]): void {
    this.assigned.clear();
    [...new Set(sites)].sort().forEach((site, i) => {
      this.assigned.set(site, SITE_PALETTE[i % SITE_PALETTE.length]);
    });
  }

  color(site: string): string {
    return this.assigned.get(site) ?? "#888888";
  }

  entries(): [string, string][] {
    return [...this.assigned.entries()];
  }
}

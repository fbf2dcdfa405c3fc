import { describe, expect, it } from "vitest";

import { Session } from "../src/state.js";
import { LAYOUT_RESPONSE, SEARCH_RESPONSE } from "./fixtures.js";

function seeded(): Session {
  const session = new Session();
  session.setResult({ keywords: ["election"] }, SEARCH_RESPONSE);
  session.setLayout(LAYOUT_RESPONSE);
  return session;
}

describe("Session", () => {
  it("keeps the subselection inside the result set", () => {
    const session = seeded();
    const kept = session.setSubselection(["n3", "ghost", "n5"], "lasso");
    expect(kept).toEqual(["n3", "n5"]);
    expect(session.subselection?.ids).toEqual(["n3", "n5"]);
  });

  it("ignores selections fully outside the result", () => {
    const session = seeded();
    expect(session.setSubselection(["ghost"], "lasso")).toEqual([]);
    expect(session.subselection).toBeNull();
  });

  it("a new result clears layout and subselection", () => {
    const session = seeded();
    session.setSubselection(["n3"], "cluster");
    session.setResult({ keywords: ["other"] }, SEARCH_RESPONSE);
    expect(session.layout).toBeNull();
    expect(session.subselection).toBeNull();
  });

  it("cluster membership follows the layout assignments", () => {
    const session = seeded();
    expect(session.clusterMembers(1)).toEqual(["n3", "n4", "n5"]);
    expect(session.clusterMembers(2)).toEqual(["n6"]);
  });

  it("site colors are fixed per result set in legend order", () => {
    const session = seeded();
    const entries = session.palette.entries();
    expect(entries.map(([site]) => site)).toEqual(["Alpha Post", "Beta Herald"]);
    const alpha = session.palette.color("Alpha Post");
    session.setSubselection(["n3"], "cluster");
    expect(session.palette.color("Alpha Post")).toBe(alpha);
  });

  it("all-zero weights are rejected", () => {
    const session = seeded();
    session.setWeights({ keyword: 0, entity: 0, temporal: 0 });
    expect(session.weights.keyword).toBe(1);
    session.setWeights({ keyword: 0, entity: 0.5, temporal: 2 });
    expect(session.weights).toEqual({ keyword: 0, entity: 0.5, temporal: 2 });
  });
});

import { describe, expect, it } from "vitest";

import { SingleFlight } from "../src/singleflight.js";

const sleep = (ms: number) => new Promise((resolve) => setTimeout(resolve, ms));

describe("SingleFlight", () => {
  it("collapses a burst into at most one in-flight request", async () => {
    const flight = new SingleFlight(5);
    let active = 0;
    let maxActive = 0;
    let issued = 0;
    const applied: number[] = [];

    for (let i = 0; i < 10; i++) {
      flight.schedule(async () => {
        issued++;
        active++;
        maxActive = Math.max(maxActive, active);
        await sleep(8);
        active--;
        return i;
      }, (result) => applied.push(result));
    }
    await flight.settled();

    expect(maxActive).toBe(1);
    expect(issued).toBe(1); // the burst debounced into the final job only
    expect(applied).toEqual([9]);
  });

  it("drops stale results when a newer job arrives mid-flight", async () => {
    const flight = new SingleFlight(1);
    const applied: string[] = [];
    flight.schedule(async () => {
      await sleep(15);
      return "stale";
    }, (r) => applied.push(r));
    await sleep(6); // first job is now in flight
    flight.schedule(async () => "fresh", (r) => applied.push(r));
    await flight.settled();
    expect(applied).toEqual(["fresh"]);
  });

  it("reports errors only for the latest job", async () => {
    const flight = new SingleFlight(1);
    const errors: string[] = [];
    const applied: string[] = [];
    flight.schedule(
      async () => {
        await sleep(4);
        throw new Error("boom");
      },
      () => applied.push("no"),
      (error) => errors.push((error as Error).message),
    );
    await flight.settled();
    expect(errors).toEqual(["boom"]);
    expect(applied).toEqual([]);
  });
});

/** Debounced latest-wins request gate: at most one request in flight,
 * the newest scheduled job always lands last, stale results are dropped. */

interface Job<T> {
  issue: () => Promise<T>;
  apply: (result: T) => void;
  onError?: (error: unknown) => void;
}

export class SingleFlight {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private latest: Job<unknown> | null = null;
  private running = false;

  constructor(private readonly delayMs: number) {}

  get busy(): boolean {
    return this.running;
  }

  schedule<T>(issue: () => Promise<T>, apply: (result: T) => void, onError?: (error: unknown) => void): void {
    this.latest = { issue, apply, onError } as Job<unknown>;
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.pump();
    }, this.delayMs);
  }

  private async pump(): Promise<void> {
    if (this.running || this.latest === null) return;
    const job = this.latest;
    this.latest = null;
    this.running = true;
    try {
      const result = await job.issue();
      // drop stale results: something newer was scheduled meanwhile
      if (this.latest === null && this.timer === null) job.apply(result);
    } catch (error) {
      if (this.latest === null && this.timer === null) job.onError?.(error);
    } finally {
      this.running = false;
      if (this.latest !== null && this.timer === null) void this.pump();
    }
  }

  /** Resolves once nothing is pending or in flight (test helper). */
  async settled(): Promise<void> {
    while (this.running || this.latest !== null || this.timer !== null) {
      await new Promise((resolve) => setTimeout(resolve, this.delayMs + 2));
    }
  }
}

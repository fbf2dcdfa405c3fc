/** Lasso and cluster-hull geometry in pixel space. */

export interface Point {
  x: number;
  y: number;
}

export function pointInPolygon(point: Point, polygon: Point[]): boolean {
  let inside = false;
  for (let i = 0, j = polygon.length - 1; i < polygon.length; j = i++) {
    const xi = polygon[i].x;
    const yi = polygon[i].y;
    const xj = polygon[j].x;
    const yj = polygon[j].y;
    const intersects =
      yi > point.y !== yj > point.y &&
      point.x < ((xj - xi) * (point.y - yi)) / (yj - yi) + xi;
    if (intersects) inside = !inside;
  }
  return inside;
}

function cross(o: Point, a: Point, b: Point): number {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/** Andrew's monotone chain; returns hull vertices in counter-clockwise
 * order (degenerate inputs come back as-is). */
export function convexHull(points: Point[]): Point[] {
  const sorted = [...points].sort((p, q) => p.x - q.x || p.y - q.y);
  if (sorted.length <= 2) return sorted;
  const lower: Point[] = [];
  for (const p of sorted) {
    while (lower.length >= 2 && cross(lower[lower.length - 2], lower[lower.length - 1], p) <= 0) {
      lower.pop();
    }
    lower.push(p);
  }
  const upper: Point[] = [];
  for (const p of [...sorted].reverse()) {
    while (upper.length >= 2 && cross(upper[upper.length - 2], upper[upper.length - 1], p) <= 0) {
      upper.pop();
    }
    upper.push(p);
  }
  lower.pop();
  upper.pop();
  return lower.concat(upper);
}

/** Padded hull for a cluster: each member contributes an octagon of
 * radius ``pad`` so the hull stays visible for 1- and 2-point clusters. */
export function paddedHull(points: Point[], pad: number): Point[] {
  const expanded: Point[] = [];
  for (const p of points) {
    for (let step = 0; step < 8; step++) {
      const angle = (Math.PI / 4) * step;
      expanded.push({ x: p.x + pad * Math.cos(angle), y: p.y + pad * Math.sin(angle) });
    }
  }
  return convexHull(expanded);
}

export function polygonPath(points: Point[]): string {
  if (points.length === 0) return "";
  const [head, ...rest] = points;
  return (
    `M ${head.x.toFixed(1)} ${head.y.toFixed(1)} ` +
    rest.map((p) => `L ${p.x.toFixed(1)} ${p.y.toFixed(1)}`).join(" ") +
    " Z"
  );
}

// Stable circular layout with drag-to-pin. Positions are client-side only
// and persist across mutations, so the picture does not jump when B changes.

export interface Point {
  x: number;
  y: number;
}

export interface EdgeLine {
  x1: number;
  y1: number;
  x2: number;
  y2: number;
  // control point for a quadratic curve; equals the midpoint for straight lines
  cx: number;
  cy: number;
}

export class LayoutStore {
  private pinned = new Map<string, Point>();
  private defaults = new Map<string, Point>();

  constructor(
    private width: number = 520,
    private height: number = 420,
    private radius: number = 150
  ) {}

  setVertices(labels: string[]): void {
    this.defaults.clear();
    const cx = this.width / 2;
    const cy = this.height / 2;
    labels.forEach((label, i) => {
      const angle = (2 * Math.PI * i) / labels.length - Math.PI / 2;
      this.defaults.set(label, {
        x: cx + this.radius * Math.cos(angle),
        y: cy + this.radius * Math.sin(angle),
      });
    });
    // pins for vertices that no longer exist are dropped
    for (const key of [...this.pinned.keys()]) {
      if (!this.defaults.has(key)) this.pinned.delete(key);
    }
  }

  position(label: string): Point {
    const pin = this.pinned.get(label);
    if (pin) return pin;
    const fallback = this.defaults.get(label);
    if (!fallback) throw new Error(`unknown vertex ${label}`);
    return fallback;
  }

  pin(label: string, point: Point): void {
    this.pinned.set(label, point);
  }
}

// Fan a multi-arrow bundle into parallel curves so multiplicity is visible.
export function arrowCurves(from: Point, to: Point, count: number): EdgeLine[] {
  const dx = to.x - from.x;
  const dy = to.y - from.y;
  const len = Math.hypot(dx, dy) || 1;
  const nx = -dy / len; // unit normal
  const ny = dx / len;
  const spread = 14;
  const lines: EdgeLine[] = [];
  for (let i = 0; i < count; i++) {
    const offset = (i - (count - 1) / 2) * spread;
    const mx = (from.x + to.x) / 2 + nx * offset;
    const my = (from.y + to.y) / 2 + ny * offset;
    lines.push({ x1: from.x, y1: from.y, x2: to.x, y2: to.y, cx: mx, cy: my });
  }
  return lines;
}

// Shorten an edge so the arrowhead stops at the node circle's rim.
export function trimToCircle(line: EdgeLine, nodeRadius: number): EdgeLine {
  const shorten = (
    x: number,
    y: number,
    towardX: number,
    towardY: number
  ): Point => {
    const dx = towardX - x;
    const dy = towardY - y;
    const len = Math.hypot(dx, dy) || 1;
    return { x: x + (dx / len) * nodeRadius, y: y + (dy / len) * nodeRadius };
  };
  const start = shorten(line.x1, line.y1, line.cx, line.cy);
  const end = shorten(line.x2, line.y2, line.cx, line.cy);
  return { ...line, x1: start.x, y1: start.y, x2: end.x, y2: end.y };
}

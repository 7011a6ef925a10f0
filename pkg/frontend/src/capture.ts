import type { RawPoint } from "./types.js";

// Minimal slice of a pointer event the capture needs; lets tests feed
// plain objects instead of real DOM events.
export interface PointerSample {
  offsetX: number;
  offsetY: number;
  timeStamp: number;
}

const MIN_POINTS = 3;

/**
 * Collects raw (ms, x, y) points between pointer-down and pointer-up.
 *
 * Points are appended exactly as the device reports them (duplicates
 * included; the server owns cleaning), except that timestamps are
 * clamped to be monotone non-decreasing. Strokes with fewer than three
 * points are discarded with a notice instead of being dispatched.
 */
export class StrokeCapture {
  private points: RawPoint[] = [];
  private active = false;

  constructor(
    private readonly onStroke: (points: RawPoint[]) => void,
    private readonly onNotice: (message: string) => void,
  ) {}

  get isActive(): boolean {
    return this.active;
  }

  get livePoints(): readonly RawPoint[] {
    return this.points;
  }

  down(ev: PointerSample): void {
    this.points = [];
    this.active = true;
    this.append(ev);
  }

  move(ev: PointerSample): void {
    if (!this.active) return;
    this.append(ev);
  }

  up(ev: PointerSample): void {
    if (!this.active) return;
    this.append(ev);
    this.active = false;
    const stroke = this.points;
    this.points = [];
    if (stroke.length < MIN_POINTS) {
      this.onNotice("stroke too short - draw a longer gesture");
      return;
    }
    this.onStroke(stroke);
  }

  cancel(): void {
    this.active = false;
    this.points = [];
  }

  private append(ev: PointerSample): void {
    const last = this.points[this.points.length - 1];
    const ms = last ? Math.max(ev.timeStamp, last.ms) : ev.timeStamp;
    this.points.push({ ms, x: ev.offsetX, y: ev.offsetY });
  }
}

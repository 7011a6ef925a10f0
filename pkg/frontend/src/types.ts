// JSON shapes exchanged with the recognition service.

export interface RawPoint {
  ms: number;
  x: number;
  y: number;
}

export interface TimedPoint {
  t: number;
  x: number;
  y: number;
}

export interface GestureBody {
  id?: string | null;
  label?: string | null;
  points: RawPoint[] | TimedPoint[];
}

export interface RankedMatch {
  label: string;
  template_id: string;
  distance: number;
}

export interface RecognitionResult {
  ranked: RankedMatch[];
  resample_n: number;
  skipped: string[];
}

export interface TemplateEntry {
  id: string;
  label: string | null;
  points: TimedPoint[];
}

export interface ApiErrorBody {
  code: string;
  message: string;
  detail?: unknown;
}

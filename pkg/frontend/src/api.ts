import type {
  ApiErrorBody,
  GestureBody,
  RawPoint,
  RecognitionResult,
  TemplateEntry,
  TimedPoint,
} from "./types.js";

export class ApiRequestError extends Error {
  constructor(
    readonly status: number,
    readonly body: ApiErrorBody,
  ) {
    super(`${body.code}: ${body.message}`);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function parseError(res: Response): Promise<ApiErrorBody> {
  try {
    const body = (await res.json()) as ApiErrorBody;
    if (body && typeof body.code === "string") return body;
  } catch {
    // fall through to the generic error below
  }
  return { code: "http_error", message: `request failed with ${res.status}` };
}

/**
 * Thin client over the recognition service. Recognition requests carry
 * a sequence number: if another stroke is submitted while one is in
 * flight, the older response resolves to null and must not be rendered.
 */
export class ApiClient {
  private recognizeSeq = 0;

  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const res = await this.fetchFn(this.baseUrl + path, {
      method,
      headers: body === undefined ? undefined : { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!res.ok) {
      throw new ApiRequestError(res.status, await parseError(res));
    }
    if (res.status === 204) return undefined as T;
    return (await res.json()) as T;
  }

  /** Returns null when a newer stroke superseded this request. */
  async recognize(
    points: RawPoint[],
    n: number,
    mode: "uniform" | "weighted" = "uniform",
  ): Promise<RecognitionResult | null> {
    const seq = ++this.recognizeSeq;
    const gesture: GestureBody = { points };
    let result: RecognitionResult;
    try {
      result = await this.request<RecognitionResult>("POST", "/api/recognize", {
        gesture,
        n,
        mode,
      });
    } catch (err) {
      if (seq !== this.recognizeSeq) return null; // stale failure: drop it
      throw err;
    }
    return seq === this.recognizeSeq ? result : null;
  }

  async listTemplates(): Promise<TemplateEntry[]> {
    const body = await this.request<{ templates: TemplateEntry[] }>(
      "GET",
      "/api/templates",
    );
    return body.templates;
  }

  async putTemplate(
    id: string,
    label: string,
    points: RawPoint[] | TimedPoint[],
  ): Promise<TemplateEntry> {
    return this.request<TemplateEntry>("PUT", `/api/templates/${encodeURIComponent(id)}`, {
      label,
      points,
    });
  }

  async deleteTemplate(id: string): Promise<void> {
    await this.request<void>("DELETE", `/api/templates/${encodeURIComponent(id)}`);
  }
}

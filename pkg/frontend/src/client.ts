import {
  SolveResponse,
  SolveResponseSchema,
  WallResponse,
  WallResponseSchema,
  XY,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    message: string,
    readonly status?: number,
  ) {
    super(message);
  }
}

async function postJson(url: string, body: unknown, signal?: AbortSignal): Promise<unknown> {
  const resp = await fetch(url, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
    signal,
  });
  if (!resp.ok) {
    throw new ApiError(`${url} -> ${resp.status}`, resp.status);
  }
  return resp.json();
}

/** Thin validated client; geometry math stays on the server. */
export class ApiClient {
  private inFlight: AbortController | null = null;
  requestCount = 0;

  constructor(readonly baseUrl: string) {}

  /** Latest-wins: a newer solve aborts the one still running. */
  async solve(points: XY[], tol?: number): Promise<SolveResponse> {
    this.inFlight?.abort();
    const ctrl = new AbortController();
    this.inFlight = ctrl;
    this.requestCount += 1;
    const raw = await postJson(
      `${this.baseUrl}/solve`,
      tol === undefined ? { points } : { points, tol },
      ctrl.signal,
    );
    const parsed = SolveResponseSchema.safeParse(raw);
    if (!parsed.success) {
      throw new ApiError(`malformed solve response: ${parsed.error.message}`);
    }
    return parsed.data;
  }

  async wall(pathStart: XY[], pathEnd: XY[]): Promise<WallResponse> {
    const raw = await postJson(`${this.baseUrl}/wall`, { pathStart, pathEnd });
    const parsed = WallResponseSchema.safeParse(raw);
    if (!parsed.success) {
      throw new ApiError(`malformed wall response: ${parsed.error.message}`);
    }
    return parsed.data;
  }

  async health(): Promise<boolean> {
    try {
      const resp = await fetch(`${this.baseUrl}/healthz`);
      return resp.ok;
    } catch {
      return false;
    }
  }
}

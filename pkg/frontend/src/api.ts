// Typed client for the qlab session API. All mathematics lives server-side;
// this file only moves JSON.

export interface QuiverJson {
  format: string;
  vertices: string[];
  b: [string, string, number][];
}

export interface SignCoherence {
  ok: boolean;
  witness: { coord: number; vectors: number[][] } | null;
}

export interface SessionState {
  session_id: string;
  quiver: QuiverJson;
  b: number[][];
  path: string[];
  g_cluster: Record<string, number[]>;
  sign_coherent: SignCoherence;
  det: number;
}

export interface OracleResult {
  slot: string;
  variable: string;
  terms: number;
  g: number[];
}

export class ApiError extends Error {
  constructor(public status: number, public detail: string) {
    super(`${status}: ${detail}`);
  }
}

async function parseOrThrow<T>(response: Response): Promise<T> {
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = await response.json();
      if (body && typeof body.detail === "string") detail = body.detail;
    } catch {
      // keep the status text
    }
    throw new ApiError(response.status, detail);
  }
  return (await response.json()) as T;
}

export interface Api {
  createSession(quiver: QuiverJson): Promise<string>;
  getState(sessionId: string): Promise<SessionState>;
  mutate(sessionId: string, vertex: string): Promise<SessionState>;
  undo(sessionId: string): Promise<SessionState>;
  oracle(sessionId: string, slot: string): Promise<OracleResult>;
}

export class ApiClient implements Api {
  constructor(private baseUrl: string = "") {}

  health(): Promise<{ status: string }> {
    return this.get("/api/health");
  }

  async createSession(quiver: QuiverJson): Promise<string> {
    const body = await this.post<{ session_id: string }>("/api/session", { quiver });
    return body.session_id;
  }

  getState(sessionId: string): Promise<SessionState> {
    return this.get(`/api/session/${sessionId}`);
  }

  mutate(sessionId: string, vertex: string): Promise<SessionState> {
    return this.post(`/api/session/${sessionId}/mutate`, { vertex });
  }

  undo(sessionId: string): Promise<SessionState> {
    return this.post(`/api/session/${sessionId}/undo`, {});
  }

  oracle(sessionId: string, slot: string): Promise<OracleResult> {
    return this.get(`/api/session/${sessionId}/oracle?l=${encodeURIComponent(slot)}`);
  }

  private get<T>(path: string): Promise<T> {
    return fetch(this.baseUrl + path).then((r) => parseOrThrow<T>(r));
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    }).then((r) => parseOrThrow<T>(r));
  }
}

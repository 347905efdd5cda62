// Session store: the UI state is a pure projection of the server session.
// Only one request per session is in flight; clicks arriving meanwhile are
// queued, never dropped, and applied in click order.

import { Api, ApiError, OracleResult, QuiverJson, SessionState } from "./api.js";

export interface OraclePanelState {
  slot: string;
  result: OracleResult | null;
  capped: boolean;
  error: string | null;
}

type Listener = (state: SessionState) => void;

export class SessionStore {
  private sessionId: string | null = null;
  private queue: Array<() => Promise<void>> = [];
  private pumping = false;
  private idleResolvers: Array<() => void> = [];
  private listeners: Listener[] = [];
  state: SessionState | null = null;
  lastError: string | null = null;

  constructor(private api: Api) {}

  onChange(listener: Listener): void {
    this.listeners.push(listener);
  }

  private setState(state: SessionState): void {
    this.state = state;
    for (const listener of this.listeners) listener(state);
  }

  async start(quiver: QuiverJson): Promise<SessionState> {
    this.sessionId = await this.api.createSession(quiver);
    const state = await this.api.getState(this.sessionId);
    this.setState(state);
    return state;
  }

  clickVertex(vertex: string): Promise<void> {
    return this.enqueue(async () => {
      this.setState(await this.api.mutate(this.requireSession(), vertex));
    });
  }

  clickUndo(): Promise<void> {
    return this.enqueue(async () => {
      // undo at the base is a no-op server-side; keep the projection exact
      this.setState(await this.api.undo(this.requireSession()));
    });
  }

  async fetchOracle(slot: string): Promise<OraclePanelState> {
    try {
      const result = await this.api.oracle(this.requireSession(), slot);
      return { slot, result, capped: false, error: null };
    } catch (err) {
      if (err instanceof ApiError && err.status === 422) {
        return { slot, result: null, capped: true, error: err.detail };
      }
      throw err;
    }
  }

  pendingClicks(): number {
    return this.queue.length + (this.pumping ? 1 : 0);
  }

  idle(): Promise<void> {
    if (!this.pumping && this.queue.length === 0) return Promise.resolve();
    return new Promise((resolve) => this.idleResolvers.push(resolve));
  }

  private requireSession(): string {
    if (!this.sessionId) throw new Error("session not started");
    return this.sessionId;
  }

  private enqueue(job: () => Promise<void>): Promise<void> {
    return new Promise((resolve, reject) => {
      this.queue.push(() =>
        job().then(resolve, (err) => {
          this.lastError = String(err);
          reject(err);
        })
      );
      void this.pump();
    });
  }

  private async pump(): Promise<void> {
    if (this.pumping) return;
    this.pumping = true;
    while (this.queue.length > 0) {
      const job = this.queue.shift()!;
      try {
        await job();
      } catch {
        // the click's own promise already carries the rejection
      }
    }
    this.pumping = false;
    const resolvers = this.idleResolvers.splice(0);
    for (const resolve of resolvers) resolve();
  }
}

// Typed client over the session API. The client never computes game logic:
// legal sets, scores, values and winners all come verbatim from the server.

export type Side = "alice" | "bob";
export type EnginePolicy = "optimal" | "paper";

export interface Scores {
  alice: number;
  bob: number;
}

export interface TranscriptEntry {
  side: Side;
  vertex: number;
}

export interface GameStateDto {
  n: number;
  edges: [number, number][];
  weights: number[];
  remaining: number[];
  scores: Scores;
  to_move: Side | null;
  legal_moves: number[];
  transcript: TranscriptEntry[];
  game_over: boolean;
  winner: Side | null;
}

export interface AnalysisEntry {
  vertex: number;
  value_after_move: number;
}

export interface NewSessionRequest {
  graph6?: string;
  n?: number;
  edges?: [number, number][];
  weights: number[];
  human_side: Side;
  engine_policy: EnginePolicy;
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly detail: string,
  ) {
    super(detail);
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

async function fail(res: Response): Promise<never> {
  let detail = res.statusText || `HTTP ${res.status}`;
  try {
    const body = (await res.json()) as { detail?: string };
    if (body.detail) detail = body.detail;
  } catch {
    // non-JSON error body: keep the status text
  }
  throw new ApiError(res.status, detail);
}

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: { "content-type": "application/json" } };
    if (body !== undefined) init.body = JSON.stringify(body);
    const res = await this.fetchImpl(this.base + path, init);
    if (!res.ok) await fail(res);
    return (await res.json()) as T;
  }

  async createSession(req: NewSessionRequest): Promise<{ sessionId: string; state: GameStateDto }> {
    const out = await this.request<{ session_id: string; state: GameStateDto }>(
      "POST",
      "/api/session",
      req,
    );
    return { sessionId: out.session_id, state: out.state };
  }

  async getState(sessionId: string): Promise<GameStateDto> {
    const out = await this.request<{ state: GameStateDto }>("GET", `/api/session/${sessionId}`);
    return out.state;
  }

  async move(sessionId: string, vertex: number): Promise<GameStateDto> {
    const out = await this.request<{ state: GameStateDto }>(
      "POST",
      `/api/session/${sessionId}/move`,
      { vertex },
    );
    return out.state;
  }

  async analysis(sessionId: string): Promise<AnalysisEntry[]> {
    return this.request<AnalysisEntry[]>("GET", `/api/session/${sessionId}/analysis`);
  }

  async deleteSession(sessionId: string): Promise<void> {
    await this.request<Record<string, never>>("DELETE", `/api/session/${sessionId}`);
  }
}

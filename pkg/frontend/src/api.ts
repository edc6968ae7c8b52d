/**
 * Typed client for the query-session service. Thin by design: the UI
 * displays what the server sends and never recomputes probabilities or
 * entropies locally.
 */

export type Label = string | number;

export interface DistributionBody {
  labels: Label[];
  probs: number[];
}

export interface QueryBody {
  id: number;
  cells: number[][];
}

export interface QuerySetBody {
  d: number;
  unconstrained?: boolean;
  queries?: QueryBody[];
}

export interface QueryOption {
  answer: number;
  labels: Label[];
}

export interface QueryPayload {
  query_id: number;
  options: QueryOption[];
}

export interface ResultPayload {
  label: Label;
  questions: number;
}

export interface PosteriorEntry {
  label: Label;
  mass: number;
}

export interface SessionPayload {
  id: string;
  done: boolean;
  questions_asked: number;
  candidates: Label[];
  posterior: PosteriorEntry[];
  entropy_base_d: number;
  query: QueryPayload | null;
  result: ResultPayload | null;
}

export type BattleshipMode = "advisor" | "oracle";
export type BattleshipAnswer = "hit_p1" | "hit_p2" | "miss";

export interface BattleshipConfigBody {
  rows?: number;
  cols?: number;
  fleets?: number[][];
  layout_count?: number;
  stop_rule?: "identify" | "sink";
  seed?: number;
  dedup?: boolean;
}

export interface BattleshipCreatePayload {
  id: string;
  mode: BattleshipMode;
  rows: number;
  cols: number;
  layout_count: number;
  distinct_layouts: number;
  remaining: number;
  entropy_trits: number;
  done: boolean;
  target?: number;
}

export interface RecommendationPayload {
  cell: [number, number];
  probs: { hit_p1: number; hit_p2: number; miss: number };
  entropy_trits: number;
}

export interface ShotResultPayload {
  answer: BattleshipAnswer;
  entropy_trits: number;
  remaining: number;
  done: boolean;
}

export interface HeatmapCell {
  p1: number;
  p2: number;
  empty: number;
}

export interface HeatmapPayload {
  rows: number;
  cols: number;
  cells: HeatmapCell[];
  entropy_trits: number;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

async function parseError(response: Response): Promise<ApiError> {
  let code = "HttpError";
  let message = response.statusText;
  try {
    const body = await response.json();
    if (body && typeof body.code === "string") {
      code = body.code;
      message = body.message ?? message;
    }
  } catch {
    // non-JSON error body; keep the status text
  }
  return new ApiError(response.status, code, message);
}

export class Client {
  constructor(
    readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(this.baseUrl + path, init);
    if (!response.ok) {
      throw await parseError(response);
    }
    return (await response.json()) as T;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  createSession(dist: DistributionBody, qset: QuerySetBody): Promise<SessionPayload> {
    return this.post("/sessions", { dist, qset });
  }

  getSession(id: string): Promise<SessionPayload> {
    return this.request(`/sessions/${id}`);
  }

  answer(id: string, answer: number): Promise<SessionPayload> {
    return this.post(`/sessions/${id}/answer`, { answer });
  }

  createBattleship(
    config: BattleshipConfigBody,
    mode: BattleshipMode,
  ): Promise<BattleshipCreatePayload> {
    return this.post("/battleship", { config, mode });
  }

  recommendation(id: string): Promise<RecommendationPayload> {
    return this.request(`/battleship/${id}/recommendation`);
  }

  reportResult(
    id: string,
    cell: [number, number],
    answer?: BattleshipAnswer,
  ): Promise<ShotResultPayload> {
    return this.post(`/battleship/${id}/result`, answer ? { cell, answer } : { cell });
  }

  heatmap(id: string): Promise<HeatmapPayload> {
    return this.request(`/battleship/${id}/heatmap`);
  }
}

/**
 * Controller for the interactive questioning loop. Holds no game logic:
 * every probability, entropy, and count shown comes verbatim from the
 * latest server payload.
 */

import {
  ApiError,
  Client,
  DistributionBody,
  Label,
  PosteriorEntry,
  QueryOption,
  QuerySetBody,
  SessionPayload,
} from "./api.js";
import { Phase, PhaseMachine } from "./state.js";

export interface SessionView {
  phase: Phase;
  sessionId: string | null;
  /** answer buttons for the current question; nonempty cells only */
  options: QueryOption[];
  queryId: number | null;
  posterior: PosteriorEntry[];
  questionsAsked: number;
  entropyFloor: number;
  history: number[];
  resultLabel: Label | null;
  resultQuestions: number | null;
  /** inline error banner; retryable network faults keep the session alive */
  error: { code: string; message: string; retryable: boolean } | null;
}

export class SessionController {
  private machine = new PhaseMachine();
  private payload: SessionPayload | null = null;
  private history: number[] = [];
  private banner: SessionView["error"] = null;

  constructor(private readonly client: Client) {}

  view(): SessionView {
    const payload = this.payload;
    return {
      phase: this.machine.phase,
      sessionId: payload?.id ?? null,
      options: payload?.query?.options ?? [],
      queryId: payload?.query?.query_id ?? null,
      posterior: payload?.posterior ?? [],
      questionsAsked: payload?.questions_asked ?? 0,
      entropyFloor: payload?.entropy_base_d ?? 0,
      history: [...this.history],
      resultLabel: payload?.result?.label ?? null,
      resultQuestions: payload?.result?.questions ?? null,
      error: this.banner,
    };
  }

  private accept(payload: SessionPayload): void {
    this.payload = payload;
    this.banner = null;
    this.machine.to(payload.done ? "terminal" : "awaiting-answer");
  }

  async start(dist: DistributionBody, qset: QuerySetBody): Promise<SessionView> {
    this.machine.to("loading");
    this.history = [];
    try {
      this.accept(await this.client.createSession(dist, qset));
    } catch (error) {
      this.fail(error, false);
    }
    return this.view();
  }

  /** Press one of the answer buttons. */
  async answer(index: number): Promise<SessionView> {
    if (this.machine.phase !== "awaiting-answer" || !this.payload) {
      return this.view();
    }
    try {
      const next = await this.client.answer(this.payload.id, index);
      this.history.push(index);
      this.accept(next);
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        // contradictory answer: show the server's message, keep local state
        this.banner = { code: error.code, message: error.message, retryable: false };
      } else {
        this.fail(error, true);
      }
    }
    return this.view();
  }

  /** Recover after a network fault: the server is the source of truth. */
  async refresh(): Promise<SessionView> {
    if (!this.payload) {
      return this.view();
    }
    this.machine.to("loading");
    try {
      this.accept(await this.client.getSession(this.payload.id));
    } catch (error) {
      this.fail(error, true);
    }
    return this.view();
  }

  private fail(error: unknown, retryable: boolean): void {
    const code = error instanceof ApiError ? error.code : "NetworkError";
    const message = error instanceof Error ? error.message : String(error);
    this.banner = { code, message, retryable };
    this.machine.to("error");
  }
}

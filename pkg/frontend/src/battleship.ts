/**
 * Controller for the assisted battleship board. The grid colors come
 * straight from the latest heatmap payload, the sparkline from the
 * entropy values the server reported after each shot, and in advisor
 * mode the human enters the real-world answer for every bomb.
 */

import {
  ApiError,
  BattleshipAnswer,
  BattleshipConfigBody,
  BattleshipMode,
  Client,
  HeatmapPayload,
  RecommendationPayload,
} from "./api.js";
import { Phase, PhaseMachine } from "./state.js";

/** Linear per-channel opacity against a fixed palette. */
export interface CellColor {
  red: number;
  green: number;
  blue: number;
}

const P1_CHANNEL: CellColor = { red: 214, green: 69, blue: 69 };
const P2_CHANNEL: CellColor = { red: 69, green: 105, blue: 214 };
const EMPTY_CHANNEL: CellColor = { red: 236, green: 240, blue: 244 };

export function heatmapColor(p1: number, p2: number, empty: number): CellColor {
  const mix = (pick: (c: CellColor) => number) =>
    Math.round(pick(P1_CHANNEL) * p1 + pick(P2_CHANNEL) * p2 + pick(EMPTY_CHANNEL) * empty);
  return { red: mix((c) => c.red), green: mix((c) => c.green), blue: mix((c) => c.blue) };
}

export interface BoardView {
  phase: Phase;
  gameId: string | null;
  mode: BattleshipMode;
  rows: number;
  cols: number;
  /** row-major colors derived only from the latest heatmap payload */
  colors: CellColor[];
  recommended: [number, number] | null;
  recommendedProbs: { hit_p1: number; hit_p2: number; miss: number } | null;
  /** entropy values as served, shot by shot; never increasing */
  entropyTrace: number[];
  remaining: number;
  done: boolean;
  firedCells: string[];
  error: { code: string; message: string } | null;
}

const cellKey = (cell: [number, number]) => `${cell[0]},${cell[1]}`;

export class BattleshipController {
  private machine = new PhaseMachine();
  private gameId: string | null = null;
  private mode: BattleshipMode = "advisor";
  private rows = 0;
  private cols = 0;
  private heat: HeatmapPayload | null = null;
  private rec: RecommendationPayload | null = null;
  private trace: number[] = [];
  private fired = new Set<string>();
  private remaining = 0;
  private done = false;
  private banner: BoardView["error"] = null;

  constructor(private readonly client: Client) {}

  view(): BoardView {
    return {
      phase: this.machine.phase,
      gameId: this.gameId,
      mode: this.mode,
      rows: this.rows,
      cols: this.cols,
      colors: (this.heat?.cells ?? []).map((c) => heatmapColor(c.p1, c.p2, c.empty)),
      recommended: this.rec ? this.rec.cell : null,
      recommendedProbs: this.rec ? this.rec.probs : null,
      entropyTrace: [...this.trace],
      remaining: this.remaining,
      done: this.done,
      firedCells: [...this.fired],
      error: this.banner,
    };
  }

  async start(config: BattleshipConfigBody, mode: BattleshipMode): Promise<BoardView> {
    this.machine.to("loading");
    try {
      const created = await this.client.createBattleship(config, mode);
      this.gameId = created.id;
      this.mode = created.mode;
      this.rows = created.rows;
      this.cols = created.cols;
      this.remaining = created.remaining;
      this.done = created.done;
      this.trace = [created.entropy_trits];
      this.fired.clear();
      this.heat = await this.client.heatmap(created.id);
      if (!this.done) {
        this.rec = await this.client.recommendation(created.id);
        this.machine.to("awaiting-answer");
      } else {
        this.machine.to("terminal");
      }
    } catch (error) {
      this.fail(error);
    }
    return this.view();
  }

  /**
   * Fire a cell (defaults to the recommendation). In oracle mode the
   * server answers; in advisor mode the caller supplies the observed
   * answer. Already-fired cells are blocked client-side.
   */
  async fire(
    cell?: [number, number],
    answer?: BattleshipAnswer,
  ): Promise<BoardView> {
    if (this.machine.phase !== "awaiting-answer" || !this.gameId) {
      return this.view();
    }
    const target = cell ?? this.rec?.cell;
    if (!target) {
      return this.view();
    }
    if (this.fired.has(cellKey(target))) {
      this.banner = { code: "AlreadyFired", message: "that cell was already bombed" };
      return this.view();
    }
    if (this.mode === "advisor" && !answer) {
      this.banner = { code: "AnswerRequired", message: "report the observed result" };
      return this.view();
    }
    try {
      const result = await this.client.reportResult(
        this.gameId,
        target,
        this.mode === "advisor" ? answer : undefined,
      );
      this.fired.add(cellKey(target));
      this.trace.push(result.entropy_trits);
      this.remaining = result.remaining;
      this.done = result.done;
      this.banner = null;
      this.heat = await this.client.heatmap(this.gameId);
      if (this.done) {
        this.rec = null;
        this.machine.to("terminal");
      } else {
        this.rec = await this.client.recommendation(this.gameId);
        this.machine.to("awaiting-answer");
      }
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        // the reported answer matches no surviving layout; state unchanged
        this.banner = { code: error.code, message: error.message };
      } else {
        this.fail(error);
      }
    }
    return this.view();
  }

  /** Oracle-mode demo: keep firing the recommendation until identified. */
  async autoplay(maxShots = 500): Promise<BoardView> {
    let shots = 0;
    while (this.machine.phase === "awaiting-answer" && shots < maxShots) {
      await this.fire();
      shots += 1;
    }
    return this.view();
  }

  private fail(error: unknown): void {
    const code = error instanceof ApiError ? error.code : "NetworkError";
    const message = error instanceof Error ? error.message : String(error);
    this.banner = { code, message };
    this.machine.to("error");
  }
}

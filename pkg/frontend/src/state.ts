/**
 * Session lifecycle state machine. Exactly four phases; transitions are
 * whitelisted so a stray code path cannot invent intermediate states.
 */

export type Phase = "loading" | "awaiting-answer" | "terminal" | "error";

const ALLOWED: Record<Phase, Phase[]> = {
  loading: ["loading", "awaiting-answer", "terminal", "error"],
  "awaiting-answer": ["loading", "awaiting-answer", "terminal", "error"],
  terminal: ["loading"],
  error: ["loading", "awaiting-answer", "terminal", "error"],
};

export class PhaseMachine {
  private current: Phase = "loading";

  get phase(): Phase {
    return this.current;
  }

  to(next: Phase): void {
    if (!ALLOWED[this.current].includes(next)) {
      throw new Error(`illegal phase transition ${this.current} -> ${next}`);
    }
    this.current = next;
  }
}

/**
 * Canned service payloads, captured verbatim from the HTTP service for
 * the four-symbol membership instance, plus a scripted fetch stub that
 * replays the documented API contract.
 */

import { FetchLike, SessionPayload } from "../src/api.js";

export const EXAMPLE_DIST = {
  labels: [1, 2, 3, 4],
  probs: [0.1, 0.4, 0.2, 0.3],
};

export const EXAMPLE_QSET = {
  d: 2,
  queries: [
    { id: 0, cells: [[0, 1]] },
    { id: 1, cells: [[1, 2]] },
    { id: 2, cells: [[2, 3]] },
  ],
};

export const SESSION_CREATED: SessionPayload = {
  id: "fixture-session",
  done: false,
  questions_asked: 0,
  candidates: [1, 2, 3, 4],
  posterior: [
    { label: 1, mass: 0.1 },
    { label: 2, mass: 0.4 },
    { label: 3, mass: 0.2 },
    { label: 4, mass: 0.3 },
  ],
  entropy_base_d: 1.8464393446710157,
  query: {
    query_id: 0,
    options: [
      { answer: 0, labels: [1, 2] },
      { answer: 1, labels: [3, 4] },
    ],
  },
  result: null,
};

export const SESSION_AFTER_FIRST: SessionPayload = {
  id: "fixture-session",
  done: false,
  questions_asked: 1,
  candidates: [1, 2],
  posterior: [
    { label: 1, mass: 0.2 },
    { label: 2, mass: 0.8 },
  ],
  entropy_base_d: 1.8464393446710157,
  query: {
    query_id: 1,
    options: [
      { answer: 0, labels: [2] },
      { answer: 1, labels: [1] },
    ],
  },
  result: null,
};

export const SESSION_AFTER_SECOND: SessionPayload = {
  id: "fixture-session",
  done: true,
  questions_asked: 2,
  candidates: [1],
  posterior: [{ label: 1, mass: 1.0 }],
  entropy_base_d: 1.8464393446710157,
  query: null,
  result: { label: 1, questions: 2 },
};

interface Scripted {
  method: string;
  path: RegExp;
  status: number;
  body: unknown;
}

/** fetch stub replaying a fixed request script in order-insensitive form */
export function scriptedFetch(script: Scripted[]): FetchLike {
  const remaining = [...script];
  return async (url: string, init?: RequestInit) => {
    const method = init?.method ?? "GET";
    const index = remaining.findIndex(
      (entry) => entry.method === method && entry.path.test(url),
    );
    if (index < 0) {
      throw new Error(`unexpected request ${method} ${url}`);
    }
    const [entry] = remaining.splice(index, 1);
    return new Response(JSON.stringify(entry!.body), {
      status: entry!.status,
      headers: { "content-type": "application/json" },
    });
  };
}

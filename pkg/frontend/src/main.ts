/** Application entry point: one tab per mode, talking to the service. */

import { BattleshipAnswer, Client } from "./api.js";
import { BattleshipController } from "./battleship.js";
import { renderBoard, renderSession } from "./render.js";
import { SessionController } from "./session.js";

const SERVICE_URL = (window as unknown as { SERVICE_URL?: string }).SERVICE_URL
  ?? "http://127.0.0.1:8080";

const client = new Client(SERVICE_URL);
const sessionController = new SessionController(client);
const boardController = new BattleshipController(client);

const app = document.getElementById("app")!;
const sessionPane = document.createElement("div");
const boardPane = document.createElement("div");
app.append(sessionPane, boardPane);

function repaintSession(): void {
  sessionPane.replaceChildren(
    renderSession(sessionController.view(), (answer) => {
      void sessionController.answer(answer).then(repaintSession);
    }),
  );
}

function repaintBoard(): void {
  const view = boardController.view();
  boardPane.replaceChildren(
    renderBoard(view, (cell) => {
      const answer =
        view.mode === "advisor"
          ? ((document.querySelector(
              "input[name=observed]:checked",
            ) as HTMLInputElement | null)?.value as BattleshipAnswer | undefined)
          : undefined;
      void boardController.fire(cell, answer).then(repaintBoard);
    }),
  );
  if (view.mode === "advisor" && view.phase === "awaiting-answer") {
    const controls = document.createElement("p");
    controls.innerHTML = ["hit_p1", "hit_p2", "miss"]
      .map(
        (name) =>
          `<label><input type="radio" name="observed" value="${name}"` +
          `${name === "miss" ? " checked" : ""}/>${name}</label>`,
      )
      .join(" ");
    boardPane.appendChild(controls);
  }
}

const demoDistribution = {
  labels: [1, 2, 3, 4],
  probs: [0.1, 0.4, 0.2, 0.3],
};
const demoQueries = {
  d: 2,
  queries: [
    { id: 0, cells: [[0, 1]] },
    { id: 1, cells: [[1, 2]] },
    { id: 2, cells: [[2, 3]] },
  ],
};

void sessionController.start(demoDistribution, demoQueries).then(repaintSession);
void boardController
  .start({ rows: 10, cols: 10, layout_count: 3 ** 9, seed: 1 }, "advisor")
  .then(repaintBoard);

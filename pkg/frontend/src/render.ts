/** DOM rendering for the two views. Pure mapping from view models. */

import { BoardView } from "./battleship.js";
import { SessionView } from "./session.js";
import { sparklineSvg } from "./sparkline.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function renderSession(
  view: SessionView,
  onAnswer: (index: number) => void,
): HTMLElement {
  const root = el("div", "session");
  const status = el("p", "status", `phase: ${view.phase}`);
  root.appendChild(status);

  if (view.error) {
    const banner = el("p", "error-banner", `${view.error.code}: ${view.error.message}`);
    root.appendChild(banner);
  }

  const counter = el(
    "p",
    "counter",
    `questions: ${view.questionsAsked} (floor ${view.entropyFloor.toFixed(2)})`,
  );
  root.appendChild(counter);

  if (view.phase === "terminal" && view.resultLabel !== null) {
    root.appendChild(
      el("p", "result", `${view.resultLabel} in ${view.resultQuestions} questions`),
    );
  }

  const buttons = el("div", "answers");
  for (const option of view.options) {
    const button = el("button", "answer", option.labels.join(", "));
    button.disabled = view.phase !== "awaiting-answer";
    button.addEventListener("click", () => onAnswer(option.answer));
    buttons.appendChild(button);
  }
  root.appendChild(buttons);

  const bars = el("div", "posterior");
  for (const entry of view.posterior) {
    const bar = el("div", "bar");
    bar.style.width = `${Math.round(entry.mass * 200)}px`;
    bar.title = `${entry.label}: ${entry.mass.toFixed(3)}`;
    bar.textContent = String(entry.label);
    bars.appendChild(bar);
  }
  root.appendChild(bars);
  return root;
}

export function renderBoard(
  view: BoardView,
  onFire: (cell: [number, number]) => void,
): HTMLElement {
  const root = el("div", "board");
  root.appendChild(el("p", "status", `phase: ${view.phase}, remaining: ${view.remaining}`));
  if (view.error) {
    root.appendChild(el("p", "error-banner", `${view.error.code}: ${view.error.message}`));
  }

  const grid = el("div", "grid");
  grid.style.gridTemplateColumns = `repeat(${view.cols}, 24px)`;
  view.colors.forEach((color, index) => {
    const row = Math.floor(index / view.cols);
    const col = index % view.cols;
    const cell = el("button", "cell");
    cell.style.background = `rgb(${color.red}, ${color.green}, ${color.blue})`;
    if (view.recommended && view.recommended[0] === row && view.recommended[1] === col) {
      cell.classList.add("recommended");
    }
    if (view.firedCells.includes(`${row},${col}`)) {
      cell.disabled = true;
    }
    cell.addEventListener("click", () => onFire([row, col]));
    grid.appendChild(cell);
  });
  root.appendChild(grid);

  const spark = el("div", "trace");
  spark.innerHTML = sparklineSvg(view.entropyTrace);
  root.appendChild(spark);

  const legend = el("p", "legend", "red: player 1, blue: player 2, grey: empty");
  root.appendChild(legend);
  return root;
}

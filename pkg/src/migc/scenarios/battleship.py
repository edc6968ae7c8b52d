"""Three-outcome battleship against a board shared by two passive players.

Both players place their ships on the same board; a third player bombs
cells and learns "hit player 1", "hit player 2", or "miss". The solver
keeps the set of sampled layouts consistent with all answers so far and
always fires the cell whose answer split has maximum entropy. With a
uniform posterior the board uncertainty is log3 of the surviving count,
so every bomb gains at most one trit in expectation.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from typing import Sequence, TextIO

import numpy as np

from ..errors import ContradictoryAnswer, ImpossibleFleet, Solved
from ..rng import rng_for

HIT_P1, HIT_P2, MISS = 0, 1, 2
ANSWER_NAMES = ("hit_p1", "hit_p2", "miss")

STREAM_LAYOUTS = 3
STREAM_TARGETS = 4

_LOG3 = math.log(3.0)
_SAMPLE_CHUNK = 16384  # fixed so the draw sequence is independent of rejects


@dataclass(frozen=True)
class Ship:
    owner: int
    row: int
    col: int
    length: int
    horizontal: bool

    def cells(self, cols: int) -> tuple[int, ...]:
        if self.horizontal:
            return tuple(self.row * cols + self.col + k for k in range(self.length))
        return tuple((self.row + k) * cols + self.col for k in range(self.length))


Layout = tuple[Ship, ...]


@dataclass(frozen=True)
class BattleshipConfig:
    rows: int = 10
    cols: int = 10
    fleets: tuple[tuple[int, ...], ...] = ((5, 3), (5, 3))
    layout_count: int = 3**12
    stop_rule: str = "identify"
    seed: int = 0
    dedup: bool = False

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError("board must have positive dimensions")
        if not 1 <= len(self.fleets) <= 2:
            raise ValueError("one or two players are supported")
        if any(length < 1 for fleet in self.fleets for length in fleet):
            raise ValueError("ship lengths must be positive")
        if self.layout_count < 1:
            raise ValueError("layout_count must be at least 1")
        if self.stop_rule not in ("identify", "sink"):
            raise ValueError("stop_rule must be 'identify' or 'sink'")


def _placements(rows: int, cols: int, length: int) -> list[tuple[int, int, bool]]:
    out: list[tuple[int, int, bool]] = []
    for r in range(rows):
        for c in range(cols - length + 1):
            out.append((r, c, True))
    if length > 1:
        for r in range(rows - length + 1):
            for c in range(cols):
                out.append((r, c, False))
    return out


def _board_key(layout: Layout, cols: int) -> frozenset[tuple[int, int]]:
    return frozenset(
        (cell, ship.owner) for ship in layout for cell in ship.cells(cols)
    )


def battleship_layouts(
    config: BattleshipConfig, *, exhaustive: bool = False
) -> list[Layout]:
    """Legal layouts: ships axis-aligned, fully on board, and no cell is
    occupied twice across the whole fleet set.

    Default mode samples ``layout_count`` layouts uniformly by rejection
    (duplicates allowed unless ``config.dedup``); exhaustive mode
    enumerates every legal layout and suits small boards only.
    """
    ships_spec = [
        (owner, length)
        for owner, fleet in enumerate(config.fleets)
        for length in fleet
    ]
    options = [_placements(config.rows, config.cols, length) for _, length in ships_spec]
    if any(not opts for opts in options):
        raise ImpossibleFleet("some ship does not fit on the board")
    masks: list[list[int]] = []
    for (owner, length), opts in zip(ships_spec, options):
        ship_masks = []
        for r, c, horizontal in opts:
            m = 0
            for cell in Ship(owner, r, c, length, horizontal).cells(config.cols):
                m |= 1 << cell
            ship_masks.append(m)
        masks.append(ship_masks)

    def to_layout(picks: Sequence[int]) -> Layout:
        return tuple(
            Ship(owner, *options[si][pi][:2], length, options[si][pi][2])
            for si, ((owner, length), pi) in enumerate(zip(ships_spec, picks))
        )

    if exhaustive:
        found: list[Layout] = []

        def enumerate_from(si: int, occupied: int, picks: list[int]) -> None:
            if si == len(ships_spec):
                found.append(to_layout(picks))
                return
            for pi, m in enumerate(masks[si]):
                if occupied & m:
                    continue
                picks.append(pi)
                enumerate_from(si + 1, occupied | m, picks)
                picks.pop()

        enumerate_from(0, 0, [])
        if not found:
            raise ImpossibleFleet("no legal layout exists")
        if config.dedup:
            seen: set[frozenset] = set()
            unique: list[Layout] = []
            for lay in found:
                key = _board_key(lay, config.cols)
                if key not in seen:
                    seen.add(key)
                    unique.append(lay)
            found = unique
        return found

    rng = rng_for(config.seed, STREAM_LAYOUTS)
    counts = [len(opts) for opts in options]
    out: list[Layout] = []
    attempts = 0
    max_attempts = max(1_000_000, 2_000 * config.layout_count)
    while len(out) < config.layout_count:
        if attempts >= max_attempts:
            raise ImpossibleFleet(
                "rejection sampling found too few legal layouts; the fleet may not fit"
            )
        draws = rng.integers(0, counts, size=(_SAMPLE_CHUNK, len(counts)))
        for row in draws:
            attempts += 1
            occupied = 0
            ok = True
            for si, pi in enumerate(row):
                m = masks[si][pi]
                if occupied & m:
                    ok = False
                    break
                occupied |= m
            if not ok:
                continue
            out.append(to_layout([int(x) for x in row]))
            if len(out) == config.layout_count:
                break
    if config.dedup:
        seen_boards: set[frozenset] = set()
        unique: list[Layout] = []
        for layout in out:
            key = _board_key(layout, config.cols)
            if key not in seen_boards:
                seen_boards.add(key)
                unique.append(layout)
        out = unique
    return out


@dataclass(eq=False)
class LayoutPool:
    """Sampled layout universe with its per-cell answer matrix.

    ``answers[i, cell]`` is 0/1/2 for hit-P1/hit-P2/miss on layout i.
    ``distinct`` indexes the first occurrence of each distinct board;
    identification plays over that subset because exact duplicates can
    never be told apart.
    """

    config: BattleshipConfig
    layouts: list[Layout]
    answers: np.ndarray
    distinct: np.ndarray
    _root_shot: "ShotRecommendation | None" = field(default=None, repr=False)

    @property
    def n_cells(self) -> int:
        return self.config.rows * self.config.cols


def build_pool(config: BattleshipConfig, *, exhaustive: bool = False) -> LayoutPool:
    layouts = battleship_layouts(config, exhaustive=exhaustive)
    n_cells = config.rows * config.cols
    answers = np.full((len(layouts), n_cells), MISS, dtype=np.uint8)
    for i, layout in enumerate(layouts):
        for ship in layout:
            answers[i, list(ship.cells(config.cols))] = ship.owner
    first_seen: dict[bytes, int] = {}
    for i in range(len(layouts)):
        key = answers[i].tobytes()
        if key not in first_seen:
            first_seen[key] = i
    distinct = np.array(sorted(first_seen.values()), dtype=np.int64)
    return LayoutPool(config, layouts, answers, distinct)


@dataclass
class BattleshipState:
    """Surviving layout indices, the shot log, and the entropy trace (trits)."""

    surviving: np.ndarray
    shots: list[tuple[int, int]] = field(default_factory=list)
    entropy_trace: list[float] = field(default_factory=list)
    gain_trace: list[float] = field(default_factory=list)  # answer entropy per shot

    @property
    def entropy_trits(self) -> float:
        return self.entropy_trace[-1]


def initial_state(pool: LayoutPool) -> BattleshipState:
    surviving = pool.distinct.copy()
    return BattleshipState(surviving, [], [math.log(len(surviving), 3)], [])


@dataclass(frozen=True)
class ShotRecommendation:
    cell: int
    probs: tuple[float, float, float]  # (hit_p1, hit_p2, miss)
    entropy_trits: float


def _answer_probs(state: BattleshipState, pool: LayoutPool) -> np.ndarray:
    sub = pool.answers[state.surviving]
    m = len(state.surviving)
    count1 = (sub == HIT_P1).sum(axis=0)
    count2 = (sub == HIT_P2).sum(axis=0)
    return np.stack([count1, count2, m - count1 - count2]) / m


def battleship_next_shot(state: BattleshipState, pool: LayoutPool) -> ShotRecommendation:
    """The unshot cell whose 3-ary answer split has maximum entropy.

    Ties go to the lowest cell index, i.e. lowest (row, col).
    """
    if len(state.surviving) < 2:
        raise Solved("the board is already identified")
    at_root = not state.shots and len(state.surviving) == len(pool.distinct)
    if at_root and pool._root_shot is not None:
        return pool._root_shot
    probs = _answer_probs(state, pool)
    safe = np.where(probs > 0.0, probs, 1.0)
    entropy = (-(probs * np.log(safe))).sum(axis=0) / _LOG3
    for cell, _ in state.shots:
        entropy[cell] = -1.0
    cell = int(np.argmax(entropy))
    assert entropy[cell] >= 0.0, "no unshot cell left yet the board is ambiguous"
    rec = ShotRecommendation(
        cell, tuple(float(p) for p in probs[:, cell]), float(entropy[cell])
    )
    if at_root:
        pool._root_shot = rec
    return rec


def apply_result(
    state: BattleshipState, pool: LayoutPool, cell: int, answer: int, gain: float = 0.0
) -> None:
    """Filter the surviving layouts by an observed (cell, answer); mutates
    the state. Raises ContradictoryAnswer (state untouched) if nothing
    survives."""
    if not 0 <= cell < pool.n_cells:
        raise ValueError(f"cell {cell} outside the board")
    if answer not in (HIT_P1, HIT_P2, MISS):
        raise ValueError(f"unknown answer {answer}")
    keep = state.surviving[pool.answers[state.surviving, cell] == answer]
    if len(keep) == 0:
        raise ContradictoryAnswer(
            f"answer {ANSWER_NAMES[answer]} at cell {cell} matches no surviving layout"
        )
    state.surviving = keep
    state.shots.append((cell, answer))
    state.entropy_trace.append(math.log(len(keep), 3))
    state.gain_trace.append(gain)


def battleship_play(
    target_index: int, pool: LayoutPool, stop_rule: str | None = None
) -> BattleshipState:
    """Self-play a full game against the given target layout.

    ``identify`` stops once a single board remains; ``sink`` keeps firing
    at known ship cells until every ship cell of the target has been hit,
    each bomb counting as a try.
    """
    rule = stop_rule or pool.config.stop_rule
    state = initial_state(pool)
    target_row = pool.answers[target_index]
    if rule == "identify":
        while len(state.surviving) > 1:
            rec = battleship_next_shot(state, pool)
            apply_result(state, pool, rec.cell, int(target_row[rec.cell]), rec.entropy_trits)
        return state
    ship_cells = {int(c) for c in np.flatnonzero(target_row != MISS)}
    hit: set[int] = set()
    while hit != ship_cells:
        if len(state.surviving) > 1:
            rec = battleship_next_shot(state, pool)
            cell, gain = rec.cell, rec.entropy_trits
        else:
            cell, gain = min(ship_cells - hit), 0.0
        answer = int(target_row[cell])
        apply_result(state, pool, cell, answer, gain)
        if answer != MISS:
            hit.add(cell)
    return state


def heatmap(state: BattleshipState, pool: LayoutPool) -> np.ndarray:
    """Per-cell posterior probabilities (hit-P1, hit-P2, empty); rows sum to 1."""
    return _answer_probs(state, pool).T.copy()


@dataclass(frozen=True)
class BattleshipBenchResult:
    config: BattleshipConfig
    games: int
    tries: tuple[int, ...]
    traces: tuple[tuple[float, ...], ...]
    gain_traces: tuple[tuple[float, ...], ...]

    @property
    def mean_tries(self) -> float:
        return sum(self.tries) / len(self.tries)


def battleship_bench(
    config: BattleshipConfig, games: int, *, pool: LayoutPool | None = None
) -> BattleshipBenchResult:
    """Play ``games`` self-play games against uniformly drawn targets."""
    if games < 1:
        raise ValueError("games must be at least 1")
    if pool is None:
        pool = build_pool(config)
    targets = rng_for(config.seed, STREAM_TARGETS).integers(
        0, len(pool.layouts), size=games
    )
    tries: list[int] = []
    traces: list[tuple[float, ...]] = []
    gains: list[tuple[float, ...]] = []
    for g in range(games):
        state = battleship_play(int(targets[g]), pool)
        tries.append(len(state.shots))
        traces.append(tuple(state.entropy_trace))
        gains.append(tuple(state.gain_trace))
    return BattleshipBenchResult(config, games, tuple(tries), tuple(traces), tuple(gains))


def write_battleship_csv(result: BattleshipBenchResult, out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["game", "tries"])
    for g, t in enumerate(result.tries):
        writer.writerow([g, t])


def write_traces_csv(result: BattleshipBenchResult, out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["game", "t", "entropy_trits"])
    for g, trace in enumerate(result.traces):
        for t, h in enumerate(trace):
            writer.writerow([g, t, h])


def layouts_to_json(layouts: Sequence[Layout]) -> list:
    """Layouts as lists of ship rectangles with owner ids."""
    return [
        [
            {
                "owner": ship.owner,
                "row": ship.row,
                "col": ship.col,
                "length": ship.length,
                "horizontal": ship.horizontal,
            }
            for ship in layout
        ]
        for layout in layouts
    ]


def layouts_from_json(data: Sequence) -> list[Layout]:
    return [
        tuple(
            Ship(s["owner"], s["row"], s["col"], s["length"], s["horizontal"])
            for s in layout
        )
        for layout in data
    ]


def write_layouts_json(layouts: Sequence[Layout], out: TextIO) -> None:
    json.dump(layouts_to_json(layouts), out)
    out.write("\n")

"""Entropy-guided battleship against two passive fleets on one board.

Two players hide a 5-ship and a 3-ship each on a shared 10x10 board; the
bomber learns hit-player-1 / hit-player-2 / miss after every shot and
always fires the cell whose answer split carries the most information.
A smaller sampled universe keeps this demo quick; the benchmark module
runs the full 3^12-layout setup.
"""

import math

from migc.scenarios import (
    BattleshipConfig,
    battleship_bench,
    battleship_play,
    build_pool,
)

config = BattleshipConfig(layout_count=3**9, seed=7)
pool = build_pool(config)
print(f"sampled {len(pool.layouts)} layouts"
      f" ({len(pool.distinct)} distinct boards),"
      f" initial uncertainty {math.log(len(pool.distinct), 3):.2f} trits\n")

state = battleship_play(target_index=0, pool=pool)
print(f"single game against layout 0: identified in {len(state.shots)} shots")
print("entropy trace (trits):",
      " ".join(f"{h:.2f}" for h in state.entropy_trace))
print("expected gain per shot (trits):",
      " ".join(f"{g:.2f}" for g in state.gain_trace))

result = battleship_bench(config, games=10, pool=pool)
print(f"\n10 games: tries {list(result.tries)}, mean {result.mean_tries:.1f}")
print("information floor:", f"{math.log(len(pool.distinct), 3):.1f}",
      "trits at <= 1 trit per shot")

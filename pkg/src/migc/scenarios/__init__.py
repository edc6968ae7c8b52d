"""Benchmark scenarios: random-distribution coding, gene interval probing,
and entropy-guided battleship."""

from .coding import (
    BenchConfig,
    Fig5Result,
    bench_fig5,
    sample_simplex,
    write_fig5_csv,
    write_gaps_csv,
)
from .dna import (
    DnaBenchResult,
    DnaBinaryInstance,
    DnaInstance,
    dna_bench,
    dna_binary_instance,
    dna_instance,
    write_dna_csv,
)
from .battleship import (
    ANSWER_NAMES,
    HIT_P1,
    HIT_P2,
    MISS,
    BattleshipBenchResult,
    BattleshipConfig,
    BattleshipState,
    LayoutPool,
    Ship,
    ShotRecommendation,
    apply_result,
    battleship_bench,
    battleship_layouts,
    battleship_next_shot,
    battleship_play,
    build_pool,
    heatmap,
    initial_state,
    layouts_from_json,
    layouts_to_json,
    write_battleship_csv,
    write_layouts_json,
    write_traces_csv,
)

__all__ = [
    "ANSWER_NAMES",
    "BattleshipBenchResult",
    "BattleshipConfig",
    "BattleshipState",
    "BenchConfig",
    "DnaBenchResult",
    "DnaBinaryInstance",
    "DnaInstance",
    "Fig5Result",
    "HIT_P1",
    "HIT_P2",
    "LayoutPool",
    "MISS",
    "Ship",
    "ShotRecommendation",
    "apply_result",
    "battleship_bench",
    "battleship_layouts",
    "battleship_next_shot",
    "battleship_play",
    "bench_fig5",
    "build_pool",
    "dna_bench",
    "dna_binary_instance",
    "dna_instance",
    "heatmap",
    "initial_state",
    "layouts_from_json",
    "layouts_to_json",
    "sample_simplex",
    "write_battleship_csv",
    "write_dna_csv",
    "write_fig5_csv",
    "write_gaps_csv",
    "write_layouts_json",
    "write_traces_csv",
]

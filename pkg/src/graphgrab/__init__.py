"""Exact-search toolkit for the vertex-grabbing game on {0,1}-weighted graphs.

Two players alternately grab non-cut vertices of a weighted connected graph;
the first player wins with at least half the total weight. This package
provides the bitset graph core, the memoized exact solver, the constructive
strategies, brute-force A2/H2 classification with a conjecture scanner,
graph6 and weighted-doc codecs, a CLI, and an HTTP play service.
"""

from .classify import (
    ClassificationRecord,
    canonical_form,
    classify,
    enumerate_connected_graphs,
    in_a2,
    in_h2,
    scan_conjecture,
)
from .codec import (
    WeightedGraphDoc,
    emit_graph6,
    emit_weighted_doc,
    parse_graph6,
    parse_weighted_doc,
)
from .engine import (
    ALICE,
    BOB,
    GameState,
    IllegalMoveError,
    StrategyError,
    SubsetSolver,
    VerificationResult,
    alice_wins_optimal,
    apply_move,
    game_value,
    legal_moves,
    new_game,
    optimal_line,
    optimal_move,
    verify_strategy,
)
from .families import (
    SpikedCycleWitness,
    cycle,
    find_induced_fully_spiked_cycle,
    fully_spiked_cycle,
    is_cstar_free,
    is_interval_graph,
    is_odd_cstar_free,
    path,
    prop8_weights,
    spiked_cycle_order,
)
from .graph import (
    Graph,
    SubgraphView,
    articulation_points,
    chordless_cycles,
    is_connected,
    is_spike,
    lies_on_cycle,
    make_graph,
    non_cut_vertices,
)
from .strategies import (
    PairingPlan,
    alice_cstar_free_move,
    alice_even_spiked_cycle_move,
    bob_spiked_odd_pairing_move,
    make_pairing_plan,
    spiked_odd_pairing_strategy,
)

__version__ = "0.1.0"

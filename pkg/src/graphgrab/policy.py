"""Engine move policies for interactive play.

"optimal" always consults the exact solver. "paper" dispatches on the current
structure: the pairing defence when defending a canonical odd spiked cycle
under its adversarial weighting, the opening rule on a whole canonical even
spiked cycle, the cycle-aware strategy on even spiked-cycle-free boards, and
the solver otherwise.
"""

from __future__ import annotations

from .engine import BOB, GameState, StrategyError, SubsetSolver, optimal_move
from .families import is_cstar_free, prop8_weights, spiked_cycle_order
from .strategies import (
    alice_cstar_free_move,
    alice_even_spiked_cycle_move,
    bob_spiked_odd_pairing_move,
    make_pairing_plan,
)

POLICIES = ("optimal", "paper")


class EnginePolicy:
    """Per-game move chooser; holds the solver cache and any pairing plan."""

    def __init__(self, kind: str, engine_side: str, solver: SubsetSolver):
        if kind not in POLICIES:
            raise ValueError(f"unknown engine policy {kind!r}")
        self.kind = kind
        self.engine_side = engine_side
        self.solver = solver
        self._plan = None

    def move(self, s: GameState) -> int:
        if self.kind == "paper":
            try:
                v = self._paper_move(s)
                if v is not None:
                    return v
            except StrategyError:
                pass
        return optimal_move(s, self.solver)

    def _paper_move(self, s: GameState) -> int | None:
        g = s.graph
        m = spiked_cycle_order(g)
        if (
            self.engine_side == BOB
            and m is not None
            and m % 2 == 1
            and s.weights == prop8_weights(g)
            and s.transcript
        ):
            if self._plan is None or self._plan.a1 != s.transcript[0][1]:
                try:
                    self._plan = make_pairing_plan(g, s.transcript[0][1])
                except ValueError as e:
                    raise StrategyError(str(e)) from e
            return bob_spiked_odd_pairing_move(s, self._plan)
        if not all(w in (0, 1) for w in s.weights):
            return None
        if m is not None and m % 2 == 0 and s.remaining == g.full_mask() and not s.transcript:
            return alice_even_spiked_cycle_move(s)
        view = s.remaining_view()
        if view.vertex_count() % 2 == 0 and is_cstar_free(view):
            return alice_cstar_free_move(s)
        return None

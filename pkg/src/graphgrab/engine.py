"""Game mechanics and the exact memoized solver for the vertex-grabbing game.

Two players alternately remove a non-cut vertex of the remaining graph and
collect its weight; Alice starts and wins with at least half of the total.
Game values are mover-minus-opponent score differences under perfect play
(negamax), memoized on the remaining-subset bitmask: the side to move is
implied by the parity of removals.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Iterable, Sequence

from .graph import Graph, SubgraphView, _connected, _omega, bits

ALICE = "alice"
BOB = "bob"


def other_side(side: str) -> str:
    return BOB if side == ALICE else ALICE


class IllegalMoveError(ValueError):
    """Raised when a move names a cut vertex or a vertex that is not on the board."""


class StrategyError(RuntimeError):
    """Raised by a strategy whose applicability assumptions do not hold.

    The verifier reports this as failure evidence rather than crashing.
    """


def check_weights(g: Graph, weights: Sequence[int], binary: bool = False) -> tuple[int, ...]:
    w = tuple(int(x) for x in weights)
    if len(w) != g.n:
        raise ValueError(f"expected {g.n} weights, got {len(w)}")
    if binary and any(x not in (0, 1) for x in w):
        raise ValueError("weights must all be 0 or 1")
    return w


def binary_weight_mask(weights: Sequence[int]) -> int:
    """Pack a {0,1} weight vector into a bitmask (bit v = weight of vertex v)."""
    m = 0
    for v, x in enumerate(weights):
        if x == 1:
            m |= 1 << v
        elif x != 0:
            raise ValueError("weights must all be 0 or 1")
    return m


@dataclass(frozen=True)
class GameState:
    graph: Graph
    weights: tuple[int, ...]
    remaining: int
    alice_score: int
    bob_score: int
    to_move: str
    transcript: tuple[tuple[str, int], ...]

    @property
    def game_over(self) -> bool:
        return self.remaining == 0

    def remaining_view(self) -> SubgraphView:
        return SubgraphView(self.graph, self.remaining)

    def score(self, side: str) -> int:
        return self.alice_score if side == ALICE else self.bob_score


def new_game(g: Graph, weights: Sequence[int]) -> GameState:
    w = check_weights(g, weights)
    if not _connected(g.adj, g.full_mask()):
        raise ValueError("the game is played on a connected graph")
    return GameState(
        graph=g,
        weights=w,
        remaining=g.full_mask(),
        alice_score=0,
        bob_score=0,
        to_move=ALICE,
        transcript=(),
    )


def legal_moves(s: GameState) -> int:
    """Bitmask of takeable vertices: the non-cut vertices of the remaining graph."""
    if s.remaining == 0:
        raise ValueError("game is over")
    return _omega(s.graph.adj, s.remaining)


def apply_move(s: GameState, v: int) -> GameState:
    if s.remaining == 0:
        raise IllegalMoveError("game is over")
    if not 0 <= v < s.graph.n or not s.remaining >> v & 1:
        raise IllegalMoveError(f"vertex {v} is not on the board")
    if not legal_moves(s) >> v & 1:
        raise IllegalMoveError(f"vertex {v} is a cut vertex of the current graph")
    return _apply_unchecked(s, v)


def _apply_unchecked(s: GameState, v: int) -> GameState:
    gained = s.weights[v]
    if s.to_move == ALICE:
        scores = {"alice_score": s.alice_score + gained}
    else:
        scores = {"bob_score": s.bob_score + gained}
    return replace(
        s,
        remaining=s.remaining ^ (1 << v),
        to_move=other_side(s.to_move),
        transcript=s.transcript + ((s.to_move, v),),
        **scores,
    )


class SubsetSolver:
    """Per-graph cache of legal-move sets plus the negamax value recursion.

    Legal-move sets depend only on the remaining subset, so one solver can be
    shared across every weighting of the same graph; {0,1} values are memoized
    on (subset, weights restricted to the subset), which makes exhaustive
    weighting sweeps cheap. Worst-case memory grows like 3^n: fine at the
    n <= 14 scales this tool solves exhaustively.
    """

    def __init__(self, g: Graph):
        self.graph = g
        self._adj = g.adj
        self._omega_cache: dict[int, int] = {}
        self._binary_vals: dict[tuple[int, int], int] = {}
        self._int_vals: dict[tuple[int, ...], dict[int, int]] = {}

    def omega(self, mask: int) -> int:
        out = self._omega_cache.get(mask)
        if out is None:
            out = self._omega_cache[mask] = _omega(self._adj, mask)
        return out

    def value_binary(self, wmask: int, mask: int) -> int:
        """Optimal mover-minus-opponent difference; weights given as a bitmask."""
        memo = self._binary_vals
        omega = self.omega

        def rec(mask: int, wm: int) -> int:
            if not mask:
                return 0
            key = (mask, wm)
            got = memo.get(key)
            if got is not None:
                return got
            best = None
            o = omega(mask)
            while o:
                b = o & -o
                o ^= b
                sub = mask ^ b
                val = (1 if wm & b else 0) - rec(sub, wm & sub)
                if best is None or val > best:
                    best = val
            memo[key] = best
            return best

        return rec(mask, wmask & mask)

    def value(self, weights: Sequence[int], mask: int) -> int:
        """Optimal mover-minus-opponent difference for arbitrary integer weights."""
        w = tuple(weights)
        memo = self._int_vals.setdefault(w, {})
        omega = self.omega

        def rec(mask: int) -> int:
            if not mask:
                return 0
            got = memo.get(mask)
            if got is not None:
                return got
            best = None
            o = omega(mask)
            while o:
                b = o & -o
                o ^= b
                val = w[b.bit_length() - 1] - rec(mask ^ b)
                if best is None or val > best:
                    best = val
            memo[mask] = best
            return best

        return rec(mask)


def game_value(g: Graph, weights: Sequence[int], subset: int | None = None) -> int:
    """Optimal score difference (mover minus opponent) on the induced subgame.

    ``subset`` defaults to all vertices; the empty subset has value 0.
    """
    w = check_weights(g, weights)
    mask = g.full_mask() if subset is None else subset
    if mask == 0:
        return 0
    if mask >> g.n:
        raise ValueError("subset has bits outside the graph")
    if not _connected(g.adj, mask):
        raise ValueError("subset does not induce a connected subgraph")
    solver = SubsetSolver(g)
    if all(x in (0, 1) for x in w):
        return solver.value_binary(binary_weight_mask(w), mask)
    return solver.value(w, mask)


def alice_wins_optimal(g: Graph, weights: Sequence[int]) -> bool:
    """True iff Alice gets at least half the total weight under perfect play."""
    return game_value(g, weights) >= 0


def optimal_move(s: GameState, solver: SubsetSolver | None = None) -> int:
    """Lowest-id vertex maximizing grabbed weight minus the opponent's best reply value."""
    if solver is None:
        solver = SubsetSolver(s.graph)
    best_v = -1
    best = None
    binary = all(x in (0, 1) for x in s.weights)
    wmask = binary_weight_mask(s.weights) if binary else 0
    for v in bits(solver.omega(s.remaining)):
        sub = s.remaining ^ (1 << v)
        if binary:
            val = s.weights[v] - solver.value_binary(wmask & sub, sub)
        else:
            val = s.weights[v] - solver.value(s.weights, sub)
        if best is None or val > best:
            best = val
            best_v = v
    if best_v < 0:
        raise ValueError("no legal moves")
    return best_v


def optimal_line(g: Graph, weights: Sequence[int]) -> list[tuple[str, int]]:
    """One full game where both sides play the deterministic optimal strategy."""
    solver = SubsetSolver(g)
    s = new_game(g, weights)
    while not s.game_over:
        s = _apply_unchecked(s, optimal_move(s, solver))
    return list(s.transcript)


Strategy = Callable[[GameState], int]


@dataclass
class VerificationResult:
    """Outcome of playing a strategy against every opponent line."""

    holds: bool
    leaves_checked: int
    worst_margin: int | None
    failing_transcript: tuple[tuple[str, int], ...] | None
    failure_reason: str | None = None


def verify_strategy(
    g: Graph,
    weights: Sequence[int],
    strategy: Strategy,
    side: str,
    predicate: Callable[[GameState], bool],
) -> VerificationResult:
    """Exhaustively play ``strategy`` as ``side`` against all opponent move sequences.

    ``predicate`` is evaluated on every terminal state. A strategy that raises
    StrategyError or returns an illegal move is recorded as a failure with its
    transcript rather than raised. Margins are from ``side``'s perspective.
    """
    w = check_weights(g, weights)
    if side not in (ALICE, BOB):
        raise ValueError(f"unknown side {side!r}")
    solver = SubsetSolver(g)
    root = new_game(g, w)

    leaves = 0
    worst: int | None = None
    failing: tuple[tuple[str, int], ...] | None = None
    reason: str | None = None
    holds = True

    def record_failure(s: GameState, why: str) -> None:
        nonlocal holds, failing, reason
        if holds:
            holds = False
            failing = s.transcript
            reason = why

    def walk(s: GameState) -> None:
        nonlocal leaves, worst
        if s.remaining == 0:
            leaves += 1
            margin = s.score(side) - s.score(other_side(side))
            if worst is None or margin < worst:
                worst = margin
            if not predicate(s):
                record_failure(s, f"predicate failed at margin {margin}")
            return
        legal = solver.omega(s.remaining)
        if s.to_move == side:
            try:
                v = strategy(s)
            except StrategyError as e:
                leaves += 1
                record_failure(s, f"strategy error: {e}")
                return
            if not 0 <= v < g.n or not legal >> v & 1:
                leaves += 1
                record_failure(s, f"strategy returned illegal move {v}")
                return
            walk(_apply_unchecked(s, v))
        else:
            o = legal
            while o:
                b = o & -o
                o ^= b
                walk(_apply_unchecked(s, b.bit_length() - 1))

    walk(root)
    return VerificationResult(
        holds=holds,
        leaves_checked=leaves,
        worst_margin=worst,
        failing_transcript=failing,
        failure_reason=reason,
    )


def connected_subsets(g: Graph, mask: int | None = None) -> Iterable[int]:
    """All nonempty vertex subsets of ``mask`` inducing a connected subgraph."""
    full = g.full_mask() if mask is None else mask
    adj = g.adj
    sub = full
    while sub:
        if _connected(adj, sub):
            yield sub
        sub = (sub - 1) & full

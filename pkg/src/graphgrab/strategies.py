"""The constructive strategies: cycle-aware grabbing for the first player on
spiked-cycle-free boards, the opening rule on even spiked cycles, and the
pairing defence that wins odd spiked cycles for the second player.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import ALICE, BOB, GameState, StrategyError, Strategy, legal_moves, optimal_move
from .families import is_cstar_free, spiked_cycle_order
from .graph import bits, lies_on_cycle

__all__ = [
    "alice_cstar_free_move",
    "alice_even_spiked_cycle_move",
    "PairingPlan",
    "make_pairing_plan",
    "bob_spiked_odd_pairing_move",
    "spiked_odd_pairing_strategy",
]


def alice_cstar_free_move(s: GameState) -> int:
    """Move for the player to act on an even, spiked-cycle-free remaining graph.

    Grab a weight-1 non-cut vertex if one exists; otherwise take a non-cut
    vertex lying on a cycle (never a spike, so the opponent's reply is also
    worth 0); on trees fall back to the exact solver. Ties break to the
    lowest vertex id.
    """
    view = s.remaining_view()
    if view.vertex_count() % 2:
        raise StrategyError("remaining graph has odd size")
    if any(s.weights[v] not in (0, 1) for v in bits(s.remaining)):
        raise StrategyError("weights are not all 0/1")
    if not is_cstar_free(view):
        raise StrategyError("remaining graph contains an induced fully spiked cycle")
    omega = legal_moves(s)
    for v in bits(omega):
        if s.weights[v] == 1:
            return v
    if not view.is_tree():
        for v in bits(omega):
            if lies_on_cycle(view, v):
                return v
        raise StrategyError("no non-cut vertex on a cycle")  # unreachable on cstar-free input
    return optimal_move(s)


def alice_even_spiked_cycle_move(s: GameState) -> int:
    """Opening move on a whole canonical even fully spiked cycle.

    Prefer a weight-1 leaf; else, when the number of weight-1 vertices is odd,
    take the leaf hanging off a weight-0 cycle vertex; else any leaf. The
    residual after the opponent's reply is spiked-cycle-free, so play
    continues with :func:`alice_cstar_free_move`.
    """
    m = spiked_cycle_order(s.graph)
    if m is None or m % 2 or s.remaining != s.graph.full_mask() or s.transcript:
        raise StrategyError("not the first move on a canonical even fully spiked cycle")
    leaves = range(m, 2 * m)
    for y in leaves:
        if s.weights[y] == 1:
            return y
    if sum(s.weights) % 2:
        for x in range(m):
            if s.weights[x] == 0:
                return m + x
        raise StrategyError("no weight-0 cycle vertex")  # impossible: m even, total odd
    return m


@dataclass
class PairingPlan:
    """Fixed second-player answers on an odd spiked cycle after the first exchange.

    ``partner`` pairs up the 4k survivors (consecutive cycle vertices together,
    their pendants together) along the broken cycle; ``relabel`` names each
    survivor x1..x2k / y1..y2k in that path order. Immutable once built.
    """

    a1: int
    b1: int
    partner: dict[int, int]
    relabel: dict[int, str]


def make_pairing_plan(g, a1: int) -> PairingPlan:
    """Plan the pairing defence: answer the opening leaf grab with its neighbor,
    then mirror within consecutive pairs along the broken cycle.

    The path is oriented so that x1 is the removed cycle vertex's neighbor
    with the smaller original id.
    """
    m = spiked_cycle_order(g)
    if m is None or m % 2 == 0:
        raise ValueError("graph is not a canonical odd fully spiked cycle")
    if not m <= a1 < 2 * m:
        raise ValueError(f"vertex {a1} is not a leaf")
    b1 = a1 - m
    left = (b1 - 1) % m
    right = (b1 + 1) % m
    x1 = min(left, right)
    step = 1 if x1 == right else -1
    xs = [(b1 + step * (i + 1)) % m for i in range(m - 1)]
    ys = [x + m for x in xs]
    partner: dict[int, int] = {}
    relabel: dict[int, str] = {}
    for i in range(0, m - 1, 2):
        partner[xs[i]] = xs[i + 1]
        partner[xs[i + 1]] = xs[i]
        partner[ys[i]] = ys[i + 1]
        partner[ys[i + 1]] = ys[i]
    for i, (x, y) in enumerate(zip(xs, ys), start=1):
        relabel[x] = f"x{i}"
        relabel[y] = f"y{i}"
    return PairingPlan(a1=a1, b1=b1, partner=partner, relabel=relabel)


def bob_spiked_odd_pairing_move(s: GameState, plan: PairingPlan) -> int:
    """Second player's reply under ``plan``: the opening neighbor grab, then the
    partner of whatever the opponent just took."""
    if s.to_move != BOB:
        raise StrategyError("not the second player's turn")
    t = s.transcript
    if len(t) % 2 != 1:
        raise StrategyError("transcript is not at a second-player turn")
    if t[0] != (ALICE, plan.a1):
        raise StrategyError("game did not open with the planned leaf")
    for i in range(1, len(t), 2):
        expected = plan.b1 if i == 1 else plan.partner.get(t[i - 1][1])
        if t[i][1] != expected:
            raise StrategyError("earlier replies deviated from the plan")
    if len(t) == 1:
        return plan.b1
    last = t[-1][1]
    reply = plan.partner.get(last)
    if reply is None:
        raise StrategyError(f"no planned partner for move {last}")
    if not s.remaining >> reply & 1:
        raise StrategyError(f"planned partner {reply} already taken")
    return reply


def spiked_odd_pairing_strategy(g) -> Strategy:
    """Strategy closure deriving (and caching) the plan from the opening move."""
    plans: dict[int, PairingPlan] = {}

    def move(s: GameState) -> int:
        if not s.transcript:
            raise StrategyError("pairing defence plays second")
        a1 = s.transcript[0][1]
        plan = plans.get(a1)
        if plan is None:
            try:
                plan = plans[a1] = make_pairing_plan(s.graph, a1)
            except ValueError as e:
                raise StrategyError(str(e)) from e
        return bob_spiked_odd_pairing_move(s, plan)

    return move

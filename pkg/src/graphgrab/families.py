"""Named graph families, their adversarial weightings, and induced spiked-cycle detection.

The fully spiked m-cycle is the cycle on m vertices with one private pendant
leaf attached to every cycle vertex. "cstar-free" means no fully spiked cycle
of any length occurs as an induced subgraph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    Graph,
    SubgraphView,
    bit,
    bits,
    chordless_cycles,
    make_graph,
    mask_of,
)


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least 1 vertex")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def fully_spiked_cycle(n: int) -> Graph:
    """Cycle 0..n-1 in order, with pendant n+i attached to cycle vertex i."""
    if n < 3:
        raise ValueError("a fully spiked cycle needs a cycle of length >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return make_graph(2 * n, edges)


def spiked_cycle_order(g: Graph) -> int | None:
    """Return m if ``g`` is exactly the canonically labeled fully spiked m-cycle."""
    if g.n < 6 or g.n % 2:
        return None
    m = g.n // 2
    if g == fully_spiked_cycle(m):
        return m
    return None


def prop8_weights(g: Graph) -> tuple[int, ...]:
    """Weight 1 on every cycle vertex and 0 on every leaf of a canonical odd spiked cycle.

    This is the weighting on which the second player wins the spiked odd
    cycle by exactly one point.
    """
    m = spiked_cycle_order(g)
    if m is None:
        raise ValueError("graph is not a canonically labeled fully spiked cycle")
    if m % 2 == 0:
        raise ValueError("weighting is defined for odd spiked cycles only")
    return (1,) * m + (0,) * m


@dataclass(frozen=True)
class SpikedCycleWitness:
    """An induced fully spiked cycle: chordless cycle plus matched private pendants."""

    cycle: tuple[int, ...]
    pendants: tuple[int, ...]

    def order(self) -> int:
        return len(self.cycle)

    def vertices(self) -> int:
        return mask_of(self.cycle) | mask_of(self.pendants)


def witness_is_valid(view: SubgraphView, w: SpikedCycleWitness) -> bool:
    """Check a witness against its host view: chordless cycle, private pendants."""
    m = len(w.cycle)
    if m < 3 or len(w.pendants) != m:
        return False
    verts = list(w.cycle) + list(w.pendants)
    if len(set(verts)) != 2 * m:
        return False
    if any(not view.active >> v & 1 for v in verts):
        return False
    adj = view.graph.adj
    all_mask = mask_of(verts)
    for i, x in enumerate(w.cycle):
        want = bit(w.cycle[(i - 1) % m]) | bit(w.cycle[(i + 1) % m]) | bit(w.pendants[i])
        if adj[x] & all_mask != want:
            return False
        if adj[w.pendants[i]] & all_mask != bit(x):
            return False
    return True


def find_induced_fully_spiked_cycle(
    view: SubgraphView, parity: str = "all"
) -> SpikedCycleWitness | None:
    """First induced fully spiked cycle of the requested parity, if any.

    Iterates chordless cycles (the cycle of an induced spiked cycle is
    necessarily chordless in the host) and backtracks over private pendant
    assignments, candidates in ascending vertex id, so the returned witness
    is deterministic.
    """
    if parity not in ("all", "odd", "even"):
        raise ValueError(f"parity must be all, odd or even, not {parity!r}")
    adj = view.graph.adj
    active = view.active
    budget = view.vertex_count() // 2
    for cyc in chordless_cycles(view):
        m = len(cyc)
        if m > budget:
            continue
        if parity == "odd" and m % 2 == 0:
            continue
        if parity == "even" and m % 2 == 1:
            continue
        cyc_mask = mask_of(cyc)
        nb_union = 0
        for x in cyc:
            nb_union |= adj[x]
        # private pendant candidates: adjacent to exactly one cycle vertex
        cands = []
        feasible = True
        for i, x in enumerate(cyc):
            others = 0
            for j, y in enumerate(cyc):
                if j != i:
                    others |= adj[y]
            c = adj[x] & active & ~cyc_mask & ~others
            if not c:
                feasible = False
                break
            cands.append(c)
        if not feasible:
            continue
        pendants = _assign_pendants(adj, cands)
        if pendants is not None:
            return SpikedCycleWitness(cycle=tuple(cyc), pendants=tuple(pendants))
    return None


def _assign_pendants(adj: tuple[int, ...], cands: list[int]) -> list[int] | None:
    """Pick one candidate per slot, pairwise nonadjacent; slots have disjoint pools."""
    m = len(cands)
    chosen: list[int] = []

    def rec(i: int, forbid: int) -> bool:
        if i == m:
            return True
        for y in bits(cands[i] & ~forbid):
            chosen.append(y)
            if rec(i + 1, forbid | adj[y]):
                return True
            chosen.pop()
        return False

    if rec(0, 0):
        return chosen
    return None


def is_cstar_free(view: SubgraphView) -> bool:
    return find_induced_fully_spiked_cycle(view, "all") is None


def is_odd_cstar_free(view: SubgraphView) -> bool:
    return find_induced_fully_spiked_cycle(view, "odd") is None


def _maximal_cliques(adj: tuple[int, ...], mask: int) -> list[int]:
    """Maximal cliques of the induced subgraph, as bitmasks (Bron-Kerbosch, pivoting)."""
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pool = p | x
        pivot = max(bits(pool), key=lambda u: (adj[u] & p).bit_count())
        for v in bits(p & ~adj[pivot]):
            bv = 1 << v
            nb = adj[v] & mask
            bk(r | bv, p & nb, x & nb)
            p ^= bv
            x |= bv

    bk(0, mask, 0)
    return out


def is_interval_graph(g: Graph) -> bool:
    """Brute-force interval recognition: search for a consecutive ordering of
    the maximal cliques (every interval representation induces one and back).
    """
    mask = g.full_mask()
    cliques = _maximal_cliques(g.adj, mask)
    k = len(cliques)
    all_idx = (1 << k) - 1
    dead: set[tuple[int, int]] = set()

    def place(remaining: int, closed: int, last: int) -> bool:
        if not remaining:
            return True
        key = (remaining, closed)
        if key in dead:
            return False
        for i in bits(remaining):
            c = cliques[i]
            if c & closed:
                continue
            new_closed = closed | (last & ~c)
            if place(remaining ^ (1 << i), new_closed, c):
                return True
        dead.add(key)
        return False

    return place(all_idx, 0, 0)

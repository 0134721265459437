"""Brute-force family membership, small-graph enumeration, and the conjecture scan.

A connected graph is "in A2" when the first player wins every {0,1} weighting
under perfect play; it is "in H2" when every even-sized connected induced
subgraph is in A2. The scan compares the computed H2 verdict against induced
odd-spiked-cycle freeness, the conjectured forbidden-subgraph test.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterable, Iterator, Sequence

from .codec import emit_graph6
from .engine import SubsetSolver
from .families import SpikedCycleWitness, find_induced_fully_spiked_cycle
from .graph import Graph, _connected, bits, make_graph, mask_of

A2_MAX_VERTICES = 14
H2_MAX_VERTICES = 12
ENUM_MAX_VERTICES = 6


@dataclass(frozen=True)
class ClassificationRecord:
    """Per-graph verdicts for the conjecture scan."""

    graph6: str
    n: int
    in_a2: bool
    in_h2: bool
    odd_cstar_free: bool
    h2_counterexample: tuple[tuple[int, ...], str] | None
    witness: SpikedCycleWitness | None

    @property
    def conjecture_consistent(self) -> bool:
        return self.in_h2 == self.odd_cstar_free


def _losing_weighting(solver: SubsetSolver, subset: int) -> int | None:
    """First weighting (counting over the subset's sorted vertices) the mover loses.

    Returns the weight bitmask restricted to ``subset``, or None if the mover
    wins them all. Weightings are enumerated in binary counting order from
    all-zeros over the relabeled vertices of the induced subgraph.
    """
    verts = list(bits(subset))
    k = len(verts)
    for w in range(1 << k):
        wmask = 0
        for i in range(k):
            if w >> i & 1:
                wmask |= 1 << verts[i]
        if solver.value_binary(wmask, subset) < 0:
            return wmask
    return None


def in_a2(g: Graph) -> tuple[bool, tuple[int, ...] | None]:
    """Whether the first player wins every {0,1} weighting; else one losing weighting."""
    if g.n > A2_MAX_VERTICES:
        raise ValueError(f"A2 brute force caps at {A2_MAX_VERTICES} vertices")
    full = g.full_mask()
    if not _connected(g.adj, full):
        raise ValueError("A2 membership is defined for connected graphs")
    solver = SubsetSolver(g)
    wmask = _losing_weighting(solver, full)
    if wmask is None:
        return True, None
    return False, tuple(wmask >> v & 1 for v in range(g.n))


def in_h2(g: Graph) -> tuple[bool, tuple[tuple[int, ...], str] | None]:
    """Whether every even-size connected induced subgraph is first-player-winning.

    Subsets are scanned by ascending size so the cheapest counterexamples
    surface first; on failure returns (subset vertices, weight bits over the
    subgraph's relabeled vertices).
    """
    if g.n > H2_MAX_VERTICES:
        raise ValueError(f"H2 brute force caps at {H2_MAX_VERTICES} vertices")
    solver = SubsetSolver(g)
    adj = g.adj
    for size in range(2, g.n + 1, 2):
        for combo in itertools.combinations(range(g.n), size):
            subset = mask_of(combo)
            if not _connected(adj, subset):
                continue
            wmask = _losing_weighting(solver, subset)
            if wmask is not None:
                wbits = "".join(str(wmask >> v & 1) for v in combo)
                return False, (combo, wbits)
    return True, None


def classify(g: Graph) -> ClassificationRecord:
    """Full record: A2 and H2 verdicts plus the induced odd-spiked-cycle test."""
    a2_ok, _ = in_a2(g)
    h2_ok, counter = in_h2(g)
    witness = find_induced_fully_spiked_cycle(g.view(), parity="odd")
    return ClassificationRecord(
        graph6=emit_graph6(g),
        n=g.n,
        in_a2=a2_ok,
        in_h2=h2_ok,
        odd_cstar_free=witness is None,
        h2_counterexample=counter,
        witness=witness,
    )


def _pair_count(n: int) -> int:
    return n * (n - 1) // 2


def _packed_key(g: Graph, perm: Sequence[int]) -> int:
    """Upper-triangle adjacency bits of the relabeled graph packed into an int.

    Bit order matches graph6 (column order, first pair most significant), so
    smaller keys are lexicographically smaller encodings.
    """
    adj = g.adj
    key = 0
    for j in range(1, g.n):
        pj = perm[j]
        for i in range(j):
            key = (key << 1) | (adj[perm[i]] >> pj & 1)
    return key


def _graph_from_key(n: int, key: int) -> Graph:
    edges = []
    pos = _pair_count(n)
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if key >> pos & 1:
                edges.append((i, j))
    return make_graph(n, edges)


def canonical_form(g: Graph) -> Graph:
    """Relabeling that minimizes the packed adjacency bit-string over all n! labelings."""
    if g.n > 8:
        raise ValueError("all-labelings canonicalization caps at 8 vertices")
    best = min(_packed_key(g, p) for p in itertools.permutations(range(g.n)))
    return _graph_from_key(g.n, best)


_ENUM_CACHE: dict[int, list[Graph]] = {}


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """All connected graphs on n vertices, one per isomorphism class.

    Internal enumeration is capped at n <= 6; feed larger inventories in via
    graph6 files.
    """
    if not 1 <= n <= ENUM_MAX_VERTICES:
        raise ValueError(
            f"internal enumeration caps at {ENUM_MAX_VERTICES} vertices; "
            "ingest a graph6 file for larger n"
        )
    yield from _enumerate_cached(n)


def _enumerate_cached(n: int) -> list[Graph]:
    got = _ENUM_CACHE.get(n)
    if got is not None:
        return got
    if n == 1:
        out = [make_graph(1, [])]
    else:
        perms = list(itertools.permutations(range(n)))
        seen: set[int] = set()
        for g in _enumerate_cached(n - 1):
            edges = g.edges()
            # a new vertex wired to any nonempty subset keeps the graph connected,
            # and every connected graph arises this way from G minus a non-cut vertex
            for attach in range(1, 1 << (n - 1)):
                cand = make_graph(n, edges + [(v, n - 1) for v in bits(attach)])
                key = min(_packed_key(cand, p) for p in perms)
                seen.add(key)
        out = [_graph_from_key(n, key) for key in sorted(seen)]
    _ENUM_CACHE[n] = out
    return out


def scan_conjecture(graphs: Iterable[Graph], jobs: int = 1) -> list[ClassificationRecord]:
    """Classify every graph; output order matches input order regardless of jobs."""
    graphs = list(graphs)
    if jobs <= 1:
        return [classify(g) for g in graphs]
    with Pool(processes=jobs) as pool:
        return list(pool.imap(classify, graphs, chunksize=8))

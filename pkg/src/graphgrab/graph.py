"""Immutable bitset graphs and the structural predicates the grabbing game rests on.

Vertices are integers 0..n-1 and every vertex set is a plain int bitmask, so
set algebra is word-parallel and subsets can key memo tables directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 62


def bit(v: int) -> int:
    return 1 << v


def bits(mask: int) -> Iterator[int]:
    """Yield the vertex ids set in ``mask``, ascending."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbor bitmask of vertex ``v``."""

    n: int
    adj: tuple[int, ...]

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def view(self, active: int | None = None) -> "SubgraphView":
        return SubgraphView(self, self.full_mask() if active is None else active)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for k in bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + k))
        return out

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on vertices 0..n-1 from an edge list (duplicates collapse)."""
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count must be in [1, {MAX_VERTICES}], got {n}")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


@dataclass(frozen=True)
class SubgraphView:
    """A graph read as the subgraph induced by the nonempty vertex set ``active``."""

    graph: Graph
    active: int

    def __post_init__(self) -> None:
        if self.active == 0:
            raise ValueError("empty active set")
        if self.active >> self.graph.n:
            raise ValueError("active set has bits outside the graph")

    def vertex_count(self) -> int:
        return self.active.bit_count()

    def neighbors(self, v: int) -> int:
        return self.graph.adj[v] & self.active

    def edge_count(self) -> int:
        return sum((self.graph.adj[v] & self.active).bit_count() for v in bits(self.active)) // 2

    def is_tree(self) -> bool:
        return self.edge_count() == self.vertex_count() - 1


def _component(adj: tuple[int, ...], mask: int, start: int) -> int:
    """Vertices of ``mask`` reachable from the single-bit ``start`` (start in mask)."""
    comp = start
    frontier = start
    while frontier:
        grow = 0
        for v in bits(frontier):
            grow |= adj[v]
        frontier = grow & mask & ~comp
        comp |= frontier
    return comp


def _connected(adj: tuple[int, ...], mask: int) -> bool:
    return _component(adj, mask, mask & -mask) == mask


def _omega(adj: tuple[int, ...], mask: int) -> int:
    """Non-cut vertices of the induced subgraph on connected ``mask``, as a bitmask."""
    if mask & (mask - 1) == 0:
        # A single vertex may always be taken: the empty graph counts as connected.
        return mask
    out = 0
    for v in bits(mask):
        rest = mask ^ (1 << v)
        if _component(adj, rest, rest & -rest) == rest:
            out |= 1 << v
    return out


def is_connected(view: SubgraphView) -> bool:
    """True iff the induced subgraph on the active set is connected."""
    return _connected(view.graph.adj, view.active)


def non_cut_vertices(view: SubgraphView) -> int:
    """Vertices whose removal keeps the view connected, as a bitmask.

    A single-vertex view returns that vertex: taking the last vertex is legal.
    Computed by per-vertex removal plus a connectivity sweep; see
    :func:`articulation_points` for the independent lowpoint route.
    """
    if not _connected(view.graph.adj, view.active):
        raise ValueError("view is disconnected")
    return _omega(view.graph.adj, view.active)


def articulation_points(view: SubgraphView) -> int:
    """Cut vertices of the induced subgraph via lowpoint DFS, as a bitmask.

    Works per component, so the view need not be connected.
    """
    adj = view.graph.adj
    active = view.active
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    aps = 0
    counter = 0
    for root in bits(active):
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        root_children = 0
        stack = [(root, -1, bits(adj[root] & active))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w in index:
                    if index[w] < low[v]:
                        low[v] = index[w]
                else:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, bits(adj[w] & active)))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    if low[v] < low[pv]:
                        low[pv] = low[v]
                    if pv == root:
                        root_children += 1
                    elif low[v] >= index[pv]:
                        aps |= 1 << pv
        if root_children >= 2:
            aps |= 1 << root
    return aps


def _check_member(view: SubgraphView, v: int) -> None:
    if not 0 <= v < view.graph.n or not view.active >> v & 1:
        raise ValueError(f"vertex {v} is not in the active set")


def is_spike(view: SubgraphView, v: int) -> bool:
    """True iff ``v`` is a leaf whose unique neighbor stays non-cut once ``v`` is gone."""
    _check_member(view, v)
    if view.vertex_count() < 3:
        raise ValueError("spikes are defined on views with at least 3 vertices")
    adj = view.graph.adj
    if not _connected(adj, view.active):
        raise ValueError("view is disconnected")
    nb = adj[v] & view.active
    if nb.bit_count() != 1:
        return False
    rest = view.active ^ (1 << v)
    return _connected(adj, rest ^ nb)


def lies_on_cycle(view: SubgraphView, v: int) -> bool:
    """True iff ``v`` lies on some cycle of the view.

    Criterion: two distinct neighbors of ``v`` are connected in the view minus ``v``.
    """
    _check_member(view, v)
    adj = view.graph.adj
    if not _connected(adj, view.active):
        raise ValueError("view is disconnected")
    nb = adj[v] & view.active
    if nb.bit_count() < 2:
        return False
    rest = view.active ^ (1 << v)
    while nb:
        b = nb & -nb
        comp = _component(adj, rest, b)
        if (comp & nb) != b:
            return True
        nb &= ~comp
    return False


def chordless_cycles(view: SubgraphView) -> list[tuple[int, ...]]:
    """All chordless cycles of length >= 3, one per rotation/reflection class.

    Each cycle is reported starting at its minimum vertex and running toward
    the smaller of that vertex's two cycle neighbors, so output order is
    deterministic. Grows paths whose interior is chord-free and only closes
    them back at the start vertex.
    """
    adj = view.graph.adj
    active = view.active
    out: list[tuple[int, ...]] = []

    def grow(path: list[int], used: int, inner_forbid: int, start_adj: int, start_second: int) -> None:
        last = path[-1]
        base = adj[last] & active & ~used & ~inner_forbid
        close = base & start_adj
        for w in bits(close):
            if w > start_second:
                out.append(tuple(path) + (w,))
        ext = base & ~start_adj
        new_forbid = inner_forbid | adj[last]
        for w in bits(ext):
            path.append(w)
            grow(path, used | (1 << w), new_forbid, start_adj, start_second)
            path.pop()

    for m in bits(active):
        bm = 1 << m
        high = active & ~((bm << 1) - 1)
        start_adj = adj[m] & high
        for s in bits(start_adj):
            # exclude smaller vertices and the start itself from the search space
            grow([m, s], bm | (1 << s), active & ~high, start_adj, s)
    return out

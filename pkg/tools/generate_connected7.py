#!/usr/bin/env python3
"""Regenerate the bundled inventory of all connected 7-vertex graphs (graph6).

The in-package enumerator stops at 6 vertices; this script extends each
canonical 6-vertex connected graph by one vertex wired to every nonempty
subset, then dedupes up to isomorphism with a degree-profile-pruned minimum
labeling. Output: src/graphgrab/data/connected_n7.g6 (853 lines, sorted).

Run from the repository root:  python tools/generate_connected7.py
"""

from __future__ import annotations

import itertools
import sys
from pathlib import Path

from graphgrab.classify import _enumerate_cached, _packed_key
from graphgrab.codec import emit_graph6
from graphgrab.graph import Graph, bits, make_graph


def refined_canonical_key(g: Graph) -> int:
    """Min packed adjacency string over labelings that sort a vertex invariant.

    The invariant (degree, sorted neighbor degrees) is isomorphism-invariant,
    so restricting to invariant-sorted labelings still yields a canonical key,
    while cutting the permutation count far below n! for most graphs.
    """
    degs = [g.degree(v) for v in range(g.n)]
    inv = []
    for v in range(g.n):
        nd = tuple(sorted((degs[u] for u in bits(g.adj[v])), reverse=True))
        inv.append((degs[v], nd))
    order = sorted(range(g.n), key=lambda v: inv[v], reverse=True)
    groups: list[list[int]] = []
    for v in order:
        if groups and inv[groups[-1][0]] == inv[v]:
            groups[-1].append(v)
        else:
            groups.append([v])
    best = None
    for parts in itertools.product(*(itertools.permutations(grp) for grp in groups)):
        perm = [v for part in parts for v in part]
        key = _packed_key(g, perm)
        if best is None or key < best:
            best = key
    return best


def main() -> int:
    out_path = Path(__file__).resolve().parent.parent / "src" / "graphgrab" / "data" / "connected_n7.g6"
    seen: dict[int, Graph] = {}
    base6 = _enumerate_cached(6)
    for g in base6:
        edges = g.edges()
        for attach in range(1, 1 << 6):
            cand = make_graph(7, edges + [(v, 6) for v in bits(attach)])
            key = refined_canonical_key(cand)
            if key not in seen:
                seen[key] = cand
    lines = sorted(emit_graph6(g) for g in seen.values())
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to {out_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

import random

import pytest

from graphgrab.classify import enumerate_connected_graphs
from graphgrab.families import cycle, fully_spiked_cycle, path
from graphgrab.graph import (
    SubgraphView,
    articulation_points,
    bits,
    chordless_cycles,
    is_connected,
    is_spike,
    lies_on_cycle,
    make_graph,
    mask_of,
    non_cut_vertices,
)
from oracles import bfs_connected, chordless_cycle_sets, omega_oracle, random_graph


def test_make_graph_path3():
    g = make_graph(3, [(0, 1), (1, 2)])
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.adj == (0b010, 0b101, 0b010)


def test_make_graph_single_vertex():
    g = make_graph(1, [])
    assert g.n == 1 and g.adj == (0,)


def test_make_graph_duplicate_edges_collapse():
    a = make_graph(3, [(0, 1), (0, 1), (1, 2)])
    b = make_graph(3, [(0, 1), (1, 2)])
    assert a == b


@pytest.mark.parametrize(
    "n,edges",
    [(3, [(0, 0)]), (3, [(0, 3)]), (0, []), (63, [])],
)
def test_make_graph_rejects(n, edges):
    with pytest.raises(ValueError):
        make_graph(n, edges)


def test_view_rejects_empty_and_out_of_range():
    g = path(3)
    with pytest.raises(ValueError):
        SubgraphView(g, 0)
    with pytest.raises(ValueError):
        SubgraphView(g, 0b1000)


def test_is_connected_examples():
    g = path(3)
    assert is_connected(g.view())
    assert not is_connected(g.view(0b101))
    assert is_connected(g.view(0b010))


def test_is_connected_matches_bfs_oracle_on_random_views():
    rng = random.Random(4711)
    checked = 0
    while checked < 10_000:
        n = rng.randint(1, 12)
        g = random_graph(rng, n)
        active = rng.getrandbits(n)
        if not active:
            continue
        subset = set(bits(active))
        assert is_connected(g.view(active)) == bfs_connected(g, subset)
        checked += 1


def test_non_cut_vertices_examples():
    assert non_cut_vertices(path(3).view()) == 0b101
    assert non_cut_vertices(cycle(5).view()) == 0b11111
    # the spiked triangle: exactly the three leaves are takeable
    assert non_cut_vertices(fully_spiked_cycle(3).view()) == 0b111000


def test_non_cut_vertices_single_vertex_is_itself():
    g = path(4)
    assert non_cut_vertices(g.view(0b0100)) == 0b0100


def test_non_cut_vertices_rejects_disconnected():
    with pytest.raises(ValueError):
        non_cut_vertices(path(3).view(0b101))


def test_omega_two_routes_agree_small():
    # removal route vs articulation-point route vs set-based oracle
    for n in range(1, 7):
        for g in enumerate_connected_graphs(n):
            view = g.view()
            omega = non_cut_vertices(view)
            assert omega == g.full_mask() & ~articulation_points(view)
            assert set(bits(omega)) == omega_oracle(g, set(range(n)))


def test_omega_two_routes_agree_random_subviews():
    rng = random.Random(99)
    done = 0
    while done < 400:
        g = random_graph(rng, rng.randint(2, 10))
        active = rng.getrandbits(g.n)
        if not active or not is_connected(g.view(active)):
            continue
        view = g.view(active)
        assert non_cut_vertices(view) == active & ~articulation_points(view)
        done += 1


def test_is_spike_examples():
    assert is_spike(path(3).view(), 0)
    star = make_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert not is_spike(star.view(), 1)
    c3s = fully_spiked_cycle(3)
    for leaf in (3, 4, 5):
        assert is_spike(c3s.view(), leaf)


def test_is_spike_rejects():
    g = path(3)
    with pytest.raises(ValueError):
        is_spike(g.view(0b011), 0)  # fewer than 3 vertices
    with pytest.raises(ValueError):
        is_spike(g.view(), 5)


def test_non_leaf_is_never_spike():
    assert not is_spike(cycle(4).view(), 0)


def test_lies_on_cycle_examples():
    c3s = fully_spiked_cycle(3)
    assert lies_on_cycle(c3s.view(), 0)
    assert not lies_on_cycle(c3s.view(), 3)
    tree = make_graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    for v in range(5):
        assert not lies_on_cycle(tree.view(), v)


def test_lies_on_cycle_matches_chordless_cycle_membership():
    # a vertex lies on a cycle iff it lies on a chordless one
    rng = random.Random(7)
    graphs = [g for n in range(2, 7) for g in enumerate_connected_graphs(n)]
    seen = 0
    while seen < 60:
        g = random_graph(rng, 7)
        if is_connected(g.view()):
            graphs.append(g)
            seen += 1
    for g in graphs:
        on_chordless = set()
        for cyc in chordless_cycles(g.view()):
            on_chordless.update(cyc)
        for v in range(g.n):
            assert lies_on_cycle(g.view(), v) == (v in on_chordless)


def test_chordless_cycles_examples():
    assert chordless_cycles(cycle(5).view()) == [(0, 1, 2, 3, 4)]
    k4 = make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    cycles = chordless_cycles(k4.view())
    assert sorted(cycles) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    assert chordless_cycles(path(6).view()) == []


def test_chordless_cycles_canonical_and_unique():
    rng = random.Random(13)
    for _ in range(60):
        g = random_graph(rng, 8)
        cycles = chordless_cycles(g.view())
        assert len({frozenset(c) for c in cycles}) == len(cycles)
        for c in cycles:
            assert c[0] == min(c)
            assert c[1] < c[-1]
            m = mask_of(c)
            for i, v in enumerate(c):
                nb = g.adj[v] & m
                want = mask_of({c[(i - 1) % len(c)], c[(i + 1) % len(c)]})
                assert nb == want  # consecutive neighbors only: chordless


def test_chordless_cycles_match_networkx():
    rng = random.Random(21)
    graphs = [g for n in range(3, 7) for g in enumerate_connected_graphs(n)]
    graphs += [random_graph(rng, 7) for _ in range(40)]
    for g in graphs:
        mine = {frozenset(c) for c in chordless_cycles(g.view())}
        assert mine == chordless_cycle_sets(g)


def test_chordless_cycles_suppress_chorded():
    square_with_chord = make_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert sorted(chordless_cycles(square_with_chord.view())) == [(0, 1, 2), (0, 2, 3)]


def test_cycle_noncut_formulations_agree():
    # "every cycle has a non-cut vertex" and its chordless-only restriction are
    # the same predicate on every graph; checked rather than assumed
    import networkx as nx

    from oracles import nx_graph

    rng = random.Random(55)
    graphs = [g for n in range(3, 7) for g in enumerate_connected_graphs(n)]
    seen = 0
    while seen < 40:
        g = random_graph(rng, 7)
        if is_connected(g.view()):
            graphs.append(g)
            seen += 1
    for g in graphs:
        omega = non_cut_vertices(g.view())
        all_ok = all(
            any(omega >> v & 1 for v in cyc)
            for cyc in nx.simple_cycles(nx_graph(g))
            if len(cyc) >= 3
        )
        chordless_ok = all(
            any(omega >> v & 1 for v in cyc) for cyc in chordless_cycles(g.view())
        )
        assert all_ok == chordless_ok


def test_chordless_cycles_respect_subviews():
    g = make_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (2, 5)])
    full = {frozenset(c) for c in chordless_cycles(g.view())}
    assert frozenset({0, 1, 2, 5}) in full
    sub = chordless_cycles(g.view(0b011111))
    assert sub == [(0, 1, 2, 3, 4)]

import random

import pytest

from graphgrab.classify import enumerate_connected_graphs
from graphgrab.families import (
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
    witness_is_valid,
)
from graphgrab.graph import is_connected, make_graph
from oracles import (
    has_induced_spiked_cycle_bruteforce,
    interval_graph_oracle,
    random_connected_graph,
    random_graph,
    relabel,
)


def test_constructors_shapes():
    p = path(4)
    assert p.edges() == [(0, 1), (1, 2), (2, 3)]
    c = cycle(4)
    assert c.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]
    s = fully_spiked_cycle(3)
    assert s.n == 6
    assert set(s.edges()) == {(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)}


def test_fully_spiked_canonical_labels():
    # pendant n+i hangs off cycle vertex i
    for m in (3, 4, 5):
        g = fully_spiked_cycle(m)
        for i in range(m):
            assert g.adj[m + i] == 1 << i


@pytest.mark.parametrize("fn,bad_n", [(path, 0), (cycle, 2), (fully_spiked_cycle, 2)])
def test_constructors_reject_small(fn, bad_n):
    with pytest.raises(ValueError):
        fn(bad_n)


def test_spiked_cycle_order():
    assert spiked_cycle_order(fully_spiked_cycle(4)) == 4
    assert spiked_cycle_order(cycle(6)) is None
    assert spiked_cycle_order(path(8)) is None
    shuffled = relabel(fully_spiked_cycle(3), [3, 0, 4, 1, 5, 2])
    assert spiked_cycle_order(shuffled) is None  # canonical labeling only


def test_prop8_weights_values():
    assert prop8_weights(fully_spiked_cycle(3)) == (1, 1, 1, 0, 0, 0)
    assert prop8_weights(fully_spiked_cycle(5)) == (1,) * 5 + (0,) * 5
    for k in (1, 2, 3):
        total = sum(prop8_weights(fully_spiked_cycle(2 * k + 1)))
        assert total == 2 * k + 1 and total % 2 == 1


def test_prop8_weights_rejects():
    with pytest.raises(ValueError):
        prop8_weights(fully_spiked_cycle(4))
    with pytest.raises(ValueError):
        prop8_weights(cycle(5))


def test_find_witness_on_whole_spiked_cycle():
    g = fully_spiked_cycle(5)
    w = find_induced_fully_spiked_cycle(g.view())
    assert w is not None and w.order() == 5
    assert witness_is_valid(g.view(), w)


def test_no_witness_in_small_graphs():
    # every graph on at most 5 vertices is cstar-free
    for n in range(1, 6):
        for g in enumerate_connected_graphs(n):
            assert find_induced_fully_spiked_cycle(g.view()) is None
    rng = random.Random(5)
    for _ in range(50):
        g = random_graph(rng, 5)
        assert find_induced_fully_spiked_cycle(g.view()) is None


def test_no_witness_in_paths():
    assert find_induced_fully_spiked_cycle(path(8).view()) is None


def test_parity_filters():
    c4s = fully_spiked_cycle(4)
    assert not is_cstar_free(c4s.view())
    assert is_odd_cstar_free(c4s.view())
    c3s = fully_spiked_cycle(3)
    assert not is_cstar_free(c3s.view())
    assert not is_odd_cstar_free(c3s.view())
    with pytest.raises(ValueError):
        find_induced_fully_spiked_cycle(c3s.view(), parity="prime")


def test_witness_embedded_in_host():
    # spiked square plus a dominating extra vertex: still detectable, still valid
    base = fully_spiked_cycle(4)
    edges = base.edges() + [(8, v) for v in range(4)]
    g = make_graph(9, edges)
    w = find_induced_fully_spiked_cycle(g.view())
    assert w is not None
    assert witness_is_valid(g.view(), w)
    assert not g.full_mask() >> 8 & 1 == 0  # vertex 8 exists but cannot be in the witness
    assert 8 not in set(w.cycle) | set(w.pendants)


def test_witness_pendants_take_lowest_ids():
    # cycle vertex 0 offers two private pendants (3 and 6); the lower one wins
    g = make_graph(7, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5), (0, 6)])
    w = find_induced_fully_spiked_cycle(g.view())
    assert w == SpikedCycleWitness(cycle=(0, 1, 2), pendants=(3, 4, 5))


def test_detection_matches_bruteforce_exhaustive_small():
    for n in range(1, 7):
        for g in enumerate_connected_graphs(n):
            got = find_induced_fully_spiked_cycle(g.view()) is not None
            assert got == has_induced_spiked_cycle_bruteforce(g)


def test_detection_matches_bruteforce_n8_per_parity():
    rng = random.Random(88)
    graphs = [fully_spiked_cycle(4), relabel(fully_spiked_cycle(4), [7, 2, 4, 0, 6, 1, 5, 3])]
    graphs += [random_graph(rng, 8, p=0.3) for _ in range(25)]
    graphs += [random_graph(rng, 8) for _ in range(25)]
    for g in graphs:
        for parity in ("all", "odd", "even"):
            got = find_induced_fully_spiked_cycle(g.view(), parity) is not None
            assert got == has_induced_spiked_cycle_bruteforce(g, parity)


def test_cstar_freeness_is_hereditary():
    rng = random.Random(17)
    done = 0
    while done < 40:
        g = random_connected_graph(rng, rng.randint(6, 10))
        if not is_cstar_free(g.view()):
            continue
        for _ in range(10):
            active = rng.getrandbits(g.n)
            if active and is_connected(g.view(active)):
                assert is_cstar_free(g.view(active))
        done += 1


def test_interval_recognition_matches_characterization():
    for n in range(1, 7):
        for g in enumerate_connected_graphs(n):
            assert is_interval_graph(g) == interval_graph_oracle(g)
    rng = random.Random(3)
    for _ in range(120):
        g = random_graph(rng, 7)
        assert is_interval_graph(g) == interval_graph_oracle(g)


def test_interval_graphs_are_cstar_free_up_to_seven():
    from graphgrab.verify import load_bundled_connected7

    pool = [g for n in range(1, 7) for g in enumerate_connected_graphs(n)]
    pool += load_bundled_connected7()
    checked = 0
    for g in pool:
        if is_interval_graph(g):
            assert is_cstar_free(g.view())
            checked += 1
    # connected interval graph counts by n: 1,1,2,5,15,56,250
    assert checked == 330

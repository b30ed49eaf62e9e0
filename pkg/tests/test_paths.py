import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from golden import PATHS_1_TO_6, TOLERANCE_1_TO_6
from mnet import mnetwork
from mnet.graph import LabeledGraph
from mnet.metrics import hop_matrix
from mnet.paths import (
    BudgetExceeded,
    InvalidDistance,
    complement_failure,
    disjoint_upper_bound,
    enumerate_simple_paths,
    fault_tolerance_report,
    max_node_disjoint_paths,
    survives_failure,
    vertex_connectivity,
)
from oracles import brute_force_min_vertex_cut, brute_force_paths, random_graphs, to_nx


def _check_disjoint(g, result):
    s, t = result.source, result.destination
    seen = set()
    for path in result.paths:
        assert path[0] == s and path[-1] == t
        assert all(g.has_edge(a, b) for a, b in zip(path, path[1:]))
        inner = set(path[1:-1])
        assert len(inner) == len(path) - 2
        assert not inner & seen
        seen |= inner


# -- enumeration -------------------------------------------------------------


def test_path_counts_1_to_6(g12):
    e = enumerate_simple_paths(g12, 1, 6)
    assert e.counts() == {4: 8, 6: 12, 8: 16, 10: 20}
    assert e.total == 56


@pytest.mark.parametrize("hops", sorted(PATHS_1_TO_6))
def test_path_sets_1_to_6(g12, hops):
    e = enumerate_simple_paths(g12, 1, 6)
    assert set(e.paths_by_hops[hops]) == set(PATHS_1_TO_6[hops])


def test_paths_sorted_within_class(g12):
    e = enumerate_simple_paths(g12, 1, 6)
    for ps in e.paths_by_hops.values():
        assert list(ps) == sorted(ps)


def test_single_edge():
    g = LabeledGraph.from_edges(2, [(1, 2)])
    assert enumerate_simple_paths(g, 1, 2).paths_by_hops == {1: ((1, 2),)}


def test_max_hops(g12):
    e = enumerate_simple_paths(g12, 1, 6, max_hops=6)
    assert e.counts() == {4: 8, 6: 12}


def test_cap_raises(g12):
    with pytest.raises(BudgetExceeded):
        enumerate_simple_paths(g12, 1, 6, cap=55)
    assert enumerate_simple_paths(g12, 1, 6, cap=56).total == 56


def test_same_endpoints_rejected(g12):
    with pytest.raises(ValueError):
        enumerate_simple_paths(g12, 1, 1)


def test_parity_of_hop_classes(g12):
    for s, t in [(1, 6), (1, 7), (2, 12)]:
        e = enumerate_simple_paths(g12, s, t)
        parity = 0 if (s <= 6) == (t <= 6) else 1
        assert all(h % 2 == parity for h in e.paths_by_hops)


@settings(max_examples=100, deadline=None)
@given(random_graphs(max_nodes=10), st.data())
def test_enumeration_matches_brute_force(g, data):
    if g.node_count < 2:
        return
    s = data.draw(st.integers(1, g.node_count))
    t = data.draw(st.integers(1, g.node_count).filter(lambda v: v != s))
    e = enumerate_simple_paths(g, s, t)
    assert set(e.all_paths()) == brute_force_paths(g, s, t)
    assert e.total == len(e.all_paths())


# -- disjoint paths ----------------------------------------------------------


def test_disjoint_1_7(g12):
    r = max_node_disjoint_paths(g12, 1, 7)
    assert r.count == 3
    assert r.paths == ((1, 7), (1, 9, 5, 7), (1, 11, 3, 7))
    _check_disjoint(g12, r)


def test_disjoint_1_2(g12):
    r = max_node_disjoint_paths(g12, 1, 2)
    expected = nx.algorithms.connectivity.local_node_connectivity(to_nx(g12), 1, 2)
    assert expected == 3 == brute_force_min_vertex_cut(g12, 1, 2)
    assert r.count == expected
    _check_disjoint(g12, r)


def test_disjoint_path_graph():
    g = LabeledGraph.from_edges(3, [(1, 2), (2, 3)])
    assert max_node_disjoint_paths(g, 1, 3).paths == ((1, 2, 3),)


def test_disjoint_deterministic(g12):
    assert max_node_disjoint_paths(g12, 1, 6) == max_node_disjoint_paths(mnetwork(6), 1, 6)


@pytest.mark.parametrize("n", [4, 6, 10, 12, 16])
def test_adjacent_pairs_give_degree(n):
    g = mnetwork(n)
    for v in g.neighbors(1):
        r = max_node_disjoint_paths(g, 1, v)
        assert r.count == n // 2
        _check_disjoint(g, r)


def test_all_pairs_under_bound(g12):
    m = hop_matrix(g12)
    for s in g12.nodes:
        for t in range(s + 1, 13):
            count = max_node_disjoint_paths(g12, s, t).count
            assert count <= disjoint_upper_bound(12, max(m[s - 1][t - 1], 2))
            assert count <= disjoint_upper_bound(12, 4)


@settings(max_examples=50, deadline=None)
@given(random_graphs(max_nodes=12), st.data())
def test_menger_min_cut(g, data):
    pairs = [(u, v) for u in g.nodes for v in g.nodes if u < v and not g.has_edge(u, v)]
    if not pairs:
        return
    s, t = data.draw(st.sampled_from(pairs))
    r = max_node_disjoint_paths(g, s, t)
    _check_disjoint(g, r)
    assert r.count == brute_force_min_vertex_cut(g, s, t)


@settings(max_examples=50, deadline=None)
@given(random_graphs(max_nodes=9, directed=True), st.data())
def test_directed_disjoint_matches_networkx(g, data):
    if g.node_count < 2:
        return
    s = data.draw(st.integers(1, g.node_count))
    t = data.draw(st.integers(1, g.node_count).filter(lambda v: v != s))
    r = max_node_disjoint_paths(g, s, t)
    h = to_nx(g)
    if h.has_edge(s, t):
        h.remove_edge(s, t)
        expected = nx.algorithms.connectivity.local_node_connectivity(h, s, t) + 1
    else:
        expected = nx.algorithms.connectivity.local_node_connectivity(h, s, t)
    assert r.count == expected
    _check_disjoint(g, r)


@pytest.mark.parametrize("n", [4, 6, 10])
def test_vertex_connectivity_matches_networkx(n):
    g = mnetwork(n)
    assert vertex_connectivity(g) == nx.node_connectivity(to_nx(g)) == n // 2


@settings(max_examples=40, deadline=None)
@given(random_graphs(max_nodes=9))
def test_vertex_connectivity_random(g):
    if g.node_count < 2:
        return
    assert vertex_connectivity(g) == nx.node_connectivity(to_nx(g))


# -- bound -------------------------------------------------------------------


def test_upper_bound_values():
    assert disjoint_upper_bound(12, 4) == 3
    assert disjoint_upper_bound(12, 2) == 10


@pytest.mark.parametrize("d", [0, 1, -3])
def test_upper_bound_invalid(d):
    with pytest.raises(InvalidDistance):
        disjoint_upper_bound(12, d)


# -- fault tolerance ---------------------------------------------------------


def test_fault_tolerance_report(g12):
    rep = fault_tolerance_report(enumerate_simple_paths(g12, 1, 6), g12)
    for hops, (nodes, edges) in TOLERANCE_1_TO_6.items():
        c = rep.by_hops(hops)
        assert (c.node_failures, c.edge_failures) == (nodes, edges)
        assert c.nodes_used == hops + 1
        assert c.edge_failures == g12.edge_count - (c.nodes_used - 1)


def test_survives_complement_of_first_path(g12):
    path = (1, 7, 3, 10, 6)
    nodes, edges = complement_failure(g12, path)
    assert len(nodes) == 7 and len(edges) == 14
    r = survives_failure(g12, nodes, edges, 1, 6)
    assert r.survives and r.path == path


def test_survives_node_7_failure(g12):
    r = survives_failure(g12, {7}, set(), 1, 6)
    assert r.survives
    assert 7 not in r.path and r.path[0] == 1 and r.path[-1] == 6


def test_source_isolated(g12):
    r = survives_failure(g12, set(g12.neighbors(1)), set(), 1, 6)
    assert not r.survives and r.path is None


def test_failed_endpoint_rejected(g12):
    with pytest.raises(ValueError):
        survives_failure(g12, {1}, set(), 1, 6)


def test_every_path_survives_its_complement(g12):
    e = enumerate_simple_paths(g12, 1, 6)
    for path in e.all_paths():
        nodes, edges = complement_failure(g12, path)
        r = survives_failure(g12, nodes, edges, 1, 6)
        assert r.survives and r.path == path

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rotgraph.certify import gomory_hu_tree, is_even_graph, is_r_graph, min_odd_cut, rizzi_split
from rotgraph.errors import InvalidArgument, ResourceLimit
from rotgraph.mgraph import (
    MultiGraph,
    boundary,
    bridged_cubic,
    bundle,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    petersen,
)

from graphgen import glue_odd, random_connected, random_regular


def brute_min_odd_cut(G):
    best = None
    for k in range(1, G.n + 1, 2):
        for S in itertools.combinations(range(G.n), k):
            c = len(boundary(G, S))
            if best is None or c < best:
                best = c
    return best


def brute_min_st_cut(G, s, t):
    others = [v for v in range(G.n) if v not in (s, t)]
    best = None
    for k in range(len(others) + 1):
        for extra in itertools.combinations(others, k):
            c = len(boundary(G, (s,) + extra))
            if best is None or c < best:
                best = c
    return best


@pytest.mark.parametrize("method", ["exhaustive", "gomory-hu"])
def test_known_graphs(method):
    assert min_odd_cut(complete_graph(4), method).value == 3
    assert min_odd_cut(petersen(), method).value == 3
    assert min_odd_cut(bundle(5), method).value == 5
    assert min_odd_cut(bridged_cubic(), method).value == 1
    assert min_odd_cut(complete_graph(6), method).value == 5


def test_exhaustive_witness_is_lexicographic_minimum():
    cert = min_odd_cut(complete_graph(4), "exhaustive")
    assert cert.witness == frozenset({0})
    cert = min_odd_cut(bridged_cubic(), "exhaustive")
    assert cert.witness == frozenset(range(5))


def test_odd_order_gives_zero():
    cert = min_odd_cut(cycle_graph(5))
    assert cert.value == 0 and cert.witness == frozenset(range(5))


def test_disconnected_rejected():
    G = MultiGraph(4, ((0, 1), (2, 3)))
    with pytest.raises(InvalidArgument):
        min_odd_cut(G)
    with pytest.raises(InvalidArgument):
        min_odd_cut(complete_graph(4), "nope")


def test_exhaustive_cap():
    with pytest.raises(ResourceLimit):
        min_odd_cut(cycle_graph(24), "exhaustive")
    # auto switches to the flow route above the cap
    assert min_odd_cut(cycle_graph(24)).value == 2


def test_is_r_graph_examples():
    assert is_r_graph(petersen(), 3)
    assert is_r_graph(complete_graph(4), 3)
    assert is_r_graph(complete_bipartite(3, 3), 3)
    assert is_r_graph(bundle(3), 3)
    assert is_r_graph(complete_graph(6), 5)
    assert not is_r_graph(bridged_cubic(), 3)
    assert not is_r_graph(petersen(), 5)
    assert not is_r_graph(cycle_graph(5), 2)
    # two disjoint copies: each even component is fine
    two = MultiGraph(4, ((0, 1),) * 3 + ((2, 3),) * 3)
    assert is_r_graph(two, 3)
    assert not is_r_graph(MultiGraph(0), 0)


def test_even_graph():
    assert is_even_graph(cycle_graph(6))
    assert not is_even_graph(complete_graph(4))


def test_rizzi_split_contracts_both_sides():
    G, S = glue_odd(petersen(), 0, complete_graph(4), 0)
    a, b = rizzi_split(G, S)
    assert a.n == 4 and a.is_regular(3)
    assert b.n == 10 and b.is_regular(3)
    with pytest.raises(InvalidArgument):
        rizzi_split(G, {0, 1})
    with pytest.raises(InvalidArgument):
        rizzi_split(G, {0, 1, 2})


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 8), st.integers(0, 10), st.randoms(use_true_random=False))
def test_min_odd_cut_matches_brute_force(n, extra, rnd):
    G = random_connected(random.Random(rnd.random()), n, extra)
    expected = brute_min_odd_cut(G)
    cert = min_odd_cut(G, "exhaustive")
    assert cert.value == expected
    assert len(cert.witness) % 2 == 1
    assert len(boundary(G, cert.witness)) == cert.value
    if n % 2 == 0:
        gh = min_odd_cut(G, "gomory-hu")
        assert gh.value == expected
        assert len(gh.witness) % 2 == 1 and len(boundary(G, gh.witness)) == gh.value


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 7), st.integers(0, 9), st.randoms(use_true_random=False))
def test_gomory_hu_tree_encodes_all_pair_cuts(n, extra, rnd):
    G = random_connected(random.Random(rnd.random()), n, extra)
    parent, weight = gomory_hu_tree(G)

    def path_to_root(v):
        out = [v]
        while parent[out[-1]] >= 0:
            out.append(parent[out[-1]])
        return out

    for s, t in itertools.combinations(range(n), 2):
        ps, pt = path_to_root(s), path_to_root(t)
        common = set(ps) & set(pt)
        edges = [v for v in ps if v not in common] + [v for v in pt if v not in common]
        assert min(weight[v] for v in edges) == brute_min_st_cut(G, s, t)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([(4, 3), (6, 3), (8, 3), (6, 5)]), st.randoms(use_true_random=False))
def test_regular_graphs_methods_agree(shape, rnd):
    n, r = shape
    G = random_regular(random.Random(rnd.random()), n, r)
    assert is_r_graph(G, r, "exhaustive") == is_r_graph(G, r, "gomory-hu")
    assert is_r_graph(G, r) == (brute_min_odd_cut(G) >= r)


def test_single_vertex_split():
    a, b = rizzi_split(petersen(), {0})
    assert a.n == 10 and a.is_regular(3) and is_r_graph(a, 3)
    assert b.same_edges(bundle(3))
    a, b = rizzi_split(complete_graph(4), {0})
    assert b.same_edges(bundle(3))


def test_split_after_edge_expansion_r5():
    from rotgraph.mgraph import spanning_tree
    from rotgraph.surgery import edge_expansion

    G = complete_graph(6)
    T = spanning_tree(G)
    e = min(set(range(G.m)) - T.tree_edges)
    s = edge_expansion(G, T, e)
    u = min(G.edges[e])
    S = {s.vertex_map[u], *s.added}
    sides = rizzi_split(s.graph, S)
    assert all(is_r_graph(side, 5) for side in sides)

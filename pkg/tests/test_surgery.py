import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rotgraph.certify import is_r_graph
from rotgraph.errors import InternalContradiction, InvalidArgument, ScriptError
from rotgraph.iso import are_isomorphic
from rotgraph.mgraph import (
    MultiGraph,
    boundary,
    bundle,
    complete_graph,
    cycle_graph,
    petersen,
    spanning_tree,
)
from rotgraph.surgery import (
    ReductionScript,
    apply_script,
    edge_expansion,
    find_two_cuts,
    leaf_expansion,
    reduce_cut,
    two_cut_reduction,
)

from graphgen import glue_even, random_regular, shuffled


def test_edge_expansion_on_k4():
    G = complete_graph(4)
    T = spanning_tree(G)
    s = edge_expansion(G, T, 5)  # non-tree edge 2-3
    H = s.graph
    assert H.n == 6 and H.is_regular(3)
    assert H.multiplicity(4, 5) == 2
    assert H.multiplicity(2, 3) == 0
    assert s.added == (4, 5)
    assert s.edge_map[5] == -1
    assert len(s.tree.tree_edges) == 5
    assert is_r_graph(H, 3)
    # the gadget is undone by reducing its two new vertices
    assert two_cut_reduction(H, s.added).same_edges(G)


def test_edge_expansion_rejects_tree_edge():
    G = complete_graph(4)
    with pytest.raises(InvalidArgument):
        edge_expansion(G, spanning_tree(G), 0)


def test_leaf_expansion_on_bundle():
    G = bundle(3)
    T = spanning_tree(G)
    s = leaf_expansion(G, T, 1)
    H = s.graph
    assert H.same_edges(complete_graph(4))
    assert s.removed == (1,) and s.added == (1, 2, 3)
    assert s.edge_map == (0, 1, 2)
    # the tree edge is redirected to the first K-vertex
    assert H.edges[0] == (0, 1)
    assert s.tree.tree_edges == frozenset({0, 3, 4})
    assert s.tree.depth[2] == 2


def test_leaf_expansion_rejects_internal_vertex():
    G = complete_graph(4)
    with pytest.raises(InvalidArgument):
        leaf_expansion(G, spanning_tree(G), 0)


def test_reduce_cut_example():
    # two K_4 with one edge each cut open and cross-joined
    G, S = glue_even(complete_graph(4), 5, complete_graph(4), 0)
    s = reduce_cut(G, S)
    assert s.graph.n == 4 and s.graph.is_regular(3)
    new = s.new_edges[0]
    assert new == s.graph.m - 1
    assert s.graph.edges[new] == (0, 1)
    assert all(s.vertex_map[v] == -1 for v in S)


def test_reduce_cut_preconditions():
    G = complete_graph(4)
    with pytest.raises(InvalidArgument):
        reduce_cut(G, {0})
    with pytest.raises(InvalidArgument):
        reduce_cut(G, {0, 1})  # four boundary edges
    # both boundary edges at the same outside vertex
    H = MultiGraph(3, ((0, 1), (0, 2), (1, 2), (1, 2), (1, 2)))
    with pytest.raises(InternalContradiction):
        reduce_cut(H, {1, 2})


def test_find_two_cuts_small_examples():
    assert find_two_cuts(cycle_graph(4)) == [frozenset({1, 2}), frozenset({2, 3})]
    assert find_two_cuts(petersen()) == []
    assert find_two_cuts(complete_graph(4)) == []
    G, S = glue_even(complete_graph(4), 5, complete_graph(4), 0)
    # reported from the side avoiding vertex 0
    assert find_two_cuts(G) == [frozenset(range(4, 8))]


def test_apply_script_reports_failing_step():
    G, S = glue_even(complete_graph(4), 5, complete_graph(4), 0)
    script = ReductionScript((S, frozenset({0})))
    with pytest.raises(ScriptError) as info:
        apply_script(G, script)
    assert info.value.index == 1
    assert apply_script(G, ReductionScript()) is G


def test_carry_absorbs_new_vertices():
    G = bundle(3)
    s = leaf_expansion(G, spanning_tree(G), 1)
    assert s.carry({1}) == frozenset({1, 2, 3})
    assert s.carry({0}) == frozenset({0})


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([3, 5]), st.integers(0, 3), st.integers(0, 3), st.randoms(use_true_random=False))
def test_leaf_expansion_keeps_r_graph_and_simplicity_at_k(r, ka, kb, rnd):
    rng = random.Random(rnd.random())
    G = random_regular(rng, 2 + 2 * ka, r)
    T = spanning_tree(G, rng.randrange(G.n))
    l = rng.choice(T.leaves())
    s = leaf_expansion(G, T, l)
    H = s.graph
    assert H.is_regular(r)
    assert is_r_graph(H, r) == is_r_graph(G, r)
    for k in s.added:
        assert all(c == 1 for c in H.adjacency[k].values())
    assert len(s.tree.tree_edges) == H.n - 1


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([3, 5]), st.randoms(use_true_random=False))
def test_edge_expansion_round_trip(r, rnd):
    rng = random.Random(rnd.random())
    G = random_regular(rng, rng.choice([2, 4, 6]), r)
    T = spanning_tree(G)
    free = sorted(set(range(G.m)) - T.tree_edges)
    e = rng.choice(free)
    s = edge_expansion(G, T, e)
    assert s.graph.is_regular(r)
    assert is_r_graph(s.graph, r) == is_r_graph(G, r)
    assert len(boundary(s.graph, s.added)) == 2
    assert two_cut_reduction(s.graph, s.added).same_edges(G)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([3, 5]), st.randoms(use_true_random=False))
def test_reduction_of_glued_graph_recovers_other_side(r, rnd):
    rng = random.Random(rnd.random())
    A = random_regular(rng, rng.choice([2, 4]), r)
    B = random_regular(rng, rng.choice([2, 4, 6]), r)
    eb = rng.randrange(B.m)
    G, S = glue_even(A, rng.randrange(A.m), B, eb)
    reduced = reduce_cut(G, S).graph
    assert are_isomorphic(reduced, B) is not None
    H = shuffled(rng, G)
    cuts = find_two_cuts(H)
    assert cuts
    for T in cuts:
        assert len(T) % 2 == 0 and len(boundary(H, T)) == 2


def test_edge_expansion_r5_gadget():
    G = complete_graph(6)
    T = spanning_tree(G)
    e = min(set(range(G.m)) - T.tree_edges)
    s = edge_expansion(G, T, e)
    a, b = s.added
    assert s.graph.multiplicity(a, b) == 4
    assert s.graph.degree(a) == s.graph.degree(b) == 5


def test_leaf_expansion_on_k4_star():
    G = complete_graph(4)
    s = leaf_expansion(G, spanning_tree(G), 1)
    assert s.graph.n == 6 and s.graph.is_regular(3)
    assert all(c == 1 for k in s.added for c in s.graph.adjacency[k].values())


def test_petersen_edge_expansions():
    G = petersen()
    T = spanning_tree(G)
    originals = list(range(G.n))
    for e in sorted(set(range(G.m)) - T.tree_edges, reverse=True):
        s = edge_expansion(G, T, e)
        originals = [s.vertex_map[v] for v in originals]
        G, T = s.graph, s.tree
    assert G.n == 22
    assert all(T.tree_degree(v) == 3 for v in originals)


def test_two_cuts_of_expanded_k4_contain_gadget():
    G = complete_graph(4)
    s = edge_expansion(G, spanning_tree(G), 5)
    assert frozenset(s.added) in find_two_cuts(s.graph)
    assert apply_script(s.graph, ReductionScript((frozenset(s.added),))).same_edges(G)

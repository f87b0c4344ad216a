import itertools
import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rotgraph.conjecture import (
    FlowAssignment,
    PerfectMatching,
    check_flow,
    chromatic_index_at_most,
    enumerate_perfect_matchings,
    find_pm_cover,
    is_perfect_matching,
    is_snark,
    nowhere_zero_flow,
    transfer_pm,
)
from rotgraph.errors import InternalContradiction, InvalidArgument, ResourceLimit
from rotgraph.mgraph import (
    boundary,
    bridged_cubic,
    bundle,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    petersen,
)
from rotgraph.surgery import find_two_cuts, two_cut_reduction

from graphgen import glue_even, random_connected, random_regular


def brute_matchings(G):
    return {
        frozenset(c)
        for c in itertools.combinations(range(G.m), G.n // 2)
        if is_perfect_matching(G, c)
    }


def brute_colourable(G, k):
    for colours in itertools.product(range(k), repeat=G.m):
        if all(
            len({colours[e] for e in G.incidence[v]}) == len(G.incidence[v]) for v in range(G.n)
        ):
            return True
    return False


def brute_flow_exists(G, k):
    values = [v for v in range(-(k - 1), k) if v]
    for vals in itertools.product(values, repeat=G.m):
        net = [0] * G.n
        for (u, v), x in zip(G.edges, vals):
            net[u] -= x
            net[v] += x
        if not any(net):
            return True
    return False


def test_petersen_known_values():
    G = petersen()
    pms = enumerate_perfect_matchings(G)
    assert len(pms) == 6
    assert {pm.edges for pm in pms} == brute_matchings(G)
    assert chromatic_index_at_most(G, 3) is None
    assert chromatic_index_at_most(G, 4) is not None
    assert is_snark(G)
    assert nowhere_zero_flow(G, 4) is None
    assert nowhere_zero_flow(G, 5) is not None


def test_k4_known_values():
    G = complete_graph(4)
    assert len(enumerate_perfect_matchings(G)) == 3
    assert chromatic_index_at_most(G, 3) is not None
    assert not is_snark(G)
    cover = find_pm_cover(G, 6, "exactly-2")
    assert Counter(pm.edges for pm in cover) == Counter({pm.edges: 2 for pm in enumerate_perfect_matchings(G)})
    assert nowhere_zero_flow(G, 4) is not None
    assert nowhere_zero_flow(G, 3) is None


def test_petersen_covers():
    G = petersen()
    cover = find_pm_cover(G, 6, "exactly-2")
    assert len(cover) == 6
    assert {pm.edges for pm in cover} == {pm.edges for pm in enumerate_perfect_matchings(G)}
    assert find_pm_cover(G, 5, "at-least-1") is not None
    assert find_pm_cover(G, 4, "at-least-1") is None
    assert find_pm_cover(G, 3, "at-most-k", 1) is None
    assert find_pm_cover(G, 3, "at-most-k", 2) is not None


def test_cover_validation():
    with pytest.raises(InvalidArgument):
        find_pm_cover(petersen(), 0, "exactly-2")
    with pytest.raises(InvalidArgument):
        find_pm_cover(petersen(), 3, "sometimes")
    with pytest.raises(InvalidArgument):
        find_pm_cover(petersen(), 3, "at-most-k")


def test_parallel_edges_colour_and_match():
    G = bundle(5)
    assert len(enumerate_perfect_matchings(G)) == 5
    colours = chromatic_index_at_most(G, 5)
    assert sorted(colours) == [0, 1, 2, 3, 4]
    assert chromatic_index_at_most(G, 4) is None


def test_snark_needs_bridgeless_cubic():
    assert not is_snark(bridged_cubic())
    assert not is_snark(complete_graph(6))
    assert not is_snark(complete_bipartite(3, 3))


def test_bridge_blocks_every_flow():
    assert nowhere_zero_flow(bridged_cubic(), 6) is None


def test_check_flow_rejects_bad_assignment():
    G = cycle_graph(3)
    good = FlowAssignment(((0, 1), (1, 2), (2, 0)), (1, 1, 1))
    assert check_flow(G, good, 2)
    bad = FlowAssignment(((0, 1), (1, 2), (0, 2)), (1, 1, 1))
    assert not check_flow(G, bad, 2)
    assert not check_flow(G, good.__class__(good.arcs, (2, 2, 2)), 2)


def test_matching_cap():
    with pytest.raises(ResourceLimit):
        enumerate_perfect_matchings(cycle_graph(32))
    assert enumerate_perfect_matchings(cycle_graph(5)) == []
    assert len(enumerate_perfect_matchings(cycle_graph(8), limit=1)) == 1


def test_transfer_pm_through_two_cut():
    G, S = glue_even(complete_graph(4), 5, petersen(), 0)
    pms = enumerate_perfect_matchings(G)
    assert pms
    for pm in pms:
        out = transfer_pm(G, S, pm)
        assert isinstance(out, PerfectMatching)
    with pytest.raises(InvalidArgument):
        transfer_pm(G, S, PerfectMatching(frozenset({0})))


def test_transfer_pm_rejects_odd_crossing():
    # a 2-cut met once is impossible for a perfect matching of a set of even size;
    # force it with an odd-sized side instead
    G = cycle_graph(6)
    pm = PerfectMatching(frozenset({0, 2, 4}))
    with pytest.raises((InternalContradiction, InvalidArgument)):
        transfer_pm(G, {1, 2, 3}, pm)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(0, 6), st.randoms(use_true_random=False))
def test_matchings_match_brute_force(half, extra, rnd):
    G = random_connected(random.Random(rnd.random()), 2 * half, extra)
    assert {pm.edges for pm in enumerate_perfect_matchings(G)} == brute_matchings(G)


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 5), st.integers(0, 3), st.randoms(use_true_random=False))
def test_colouring_matches_brute_force(n, extra, rnd):
    G = random_connected(random.Random(rnd.random()), n, extra)
    if G.m > 7:
        return
    delta = max(G.degrees())
    for k in (delta, delta + 1):
        found = chromatic_index_at_most(G, k)
        assert (found is not None) == brute_colourable(G, k)
        if found is not None:
            for v in range(G.n):
                cs = [found[e] for e in G.incidence[v]]
                assert len(set(cs)) == len(cs)


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 5), st.integers(0, 4), st.sampled_from([2, 3, 4]), st.randoms(use_true_random=False))
def test_flow_matches_brute_force(n, extra, k, rnd):
    G = random_connected(random.Random(rnd.random()), n, extra)
    if G.m > 7:
        return
    flow = nowhere_zero_flow(G, k)
    assert (flow is not None) == brute_flow_exists(G, k)
    if flow is not None:
        assert check_flow(G, flow, k)


@settings(max_examples=20, deadline=None)
@given(st.randoms(use_true_random=False))
def test_two_cut_reduction_preserves_cover_and_flow(rnd):
    rng = random.Random(rnd.random())
    A = random_regular(rng, 4, 3)
    B = random_regular(rng, rng.choice([2, 4, 6]), 3)
    G, _ = glue_even(A, rng.randrange(A.m), B, rng.randrange(B.m))
    for S in find_two_cuts(G):
        cut = boundary(G, S)
        assert len(cut) == 2
        outside = {v for e in cut for v in G.edges[e] if v not in S}
        if len(outside) < 2:
            continue  # reduction would create a loop
        H = two_cut_reduction(G, S)
        assert (find_pm_cover(G, 6, "exactly-2") is None) == (find_pm_cover(H, 6, "exactly-2") is None)
        assert (nowhere_zero_flow(G, 4) is None) == (nowhere_zero_flow(H, 4) is None)
        for pm in enumerate_perfect_matchings(G):
            transfer_pm(G, S, pm)


def test_triangle_has_no_matching():
    assert enumerate_perfect_matchings(cycle_graph(3)) == []


def test_transfer_parity_cases():
    from rotgraph.mgraph import spanning_tree
    from rotgraph.surgery import edge_expansion

    G = complete_graph(4)
    s = edge_expansion(G, spanning_tree(G), 5)
    H, S = s.graph, frozenset(s.added)
    cut = set(boundary(H, S))
    pms = enumerate_perfect_matchings(H)
    both = [pm for pm in pms if cut <= pm.edges]
    neither = [pm for pm in pms if not cut & pm.edges]
    assert both and neither
    for pm in both:
        out = transfer_pm(H, S, pm)
        red = two_cut_reduction(H, S)
        assert red.edges[red.m - 1] in {red.edges[e] for e in out.edges}
    for pm in neither:
        red = two_cut_reduction(H, S)
        assert red.m - 1 not in transfer_pm(H, S, pm).edges

"""Exhaustive desk-scale checks for matching covers, edge colourings and
nowhere-zero flows.

Every search branches deterministically, lowest index first, and runs to
completion, so a ``None`` answer is a proof for the instance at hand.
Parallel edges are distinct everywhere (EdgeId granularity).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import InternalContradiction, InvalidArgument, ResourceLimit
from .mgraph import MultiGraph, boundary, bridges
from .surgery import reduce_cut

MAX_MATCHING_VERTICES = 30
MAX_MATCHINGS = 10**6

RULES = ("exactly-2", "at-least-1", "at-most-k")


@dataclass(frozen=True)
class PerfectMatching:
    edges: frozenset[int]

    def mask(self) -> int:
        return sum(1 << e for e in self.edges)


@dataclass(frozen=True)
class FlowAssignment:
    """Orientation ``arcs[e] = (tail, head)`` with positive ``values[e]``."""

    arcs: tuple[tuple[int, int], ...]
    values: tuple[int, ...]


def is_perfect_matching(G: MultiGraph, edges: Iterable[int]) -> bool:
    covered = [0] * G.n
    for e in edges:
        u, v = G.edges[e]
        covered[u] += 1
        covered[v] += 1
    return all(c == 1 for c in covered)


def _matching_masks(G: MultiGraph, limit: int | None = None) -> list[int]:
    if G.n > MAX_MATCHING_VERTICES:
        raise ResourceLimit(f"matching enumeration is capped at n={MAX_MATCHING_VERTICES}, got {G.n}")
    if G.n % 2:
        return []
    cap = MAX_MATCHINGS if limit is None else min(limit, MAX_MATCHINGS + 1)
    out: list[int] = []
    used = [False] * G.n

    def rec(mask: int) -> bool:
        v = next((x for x in range(G.n) if not used[x]), -1)
        if v < 0:
            out.append(mask)
            return len(out) >= cap
        used[v] = True
        for e in G.incidence[v]:
            w = G.other(e, v)
            if not used[w]:
                used[w] = True
                stop = rec(mask | (1 << e))
                used[w] = False
                if stop:
                    used[v] = False
                    return True
        used[v] = False
        return False

    rec(0)
    if limit is None and len(out) > MAX_MATCHINGS:
        raise ResourceLimit(f"more than {MAX_MATCHINGS} perfect matchings")
    return out


def _unmask(mask: int) -> frozenset[int]:
    out = []
    e = 0
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return frozenset(out)


def enumerate_perfect_matchings(G: MultiGraph, limit: int | None = None) -> list[PerfectMatching]:
    return [PerfectMatching(_unmask(m)) for m in _matching_masks(G, limit)]


def _exactly_two(masks: list[int], m: int, count: int) -> list[int] | None:
    all_edges = (1 << m) - 1
    failed: set[tuple[int, int, int]] = set()

    def rec(once: int, full: int, left: int) -> list[int] | None:
        if full == all_edges:
            return [] if left == 0 else None
        if left == 0 or (once, full, left) in failed:
            return None
        open_edges = all_edges & ~full
        _best, best_c = None, None
        for e in range(m):
            if not (open_edges >> e) & 1:
                continue
            cands = [x for x in masks if (x >> e) & 1 and not x & full]
            if best_c is None or len(cands) < len(best_c):
                _best, best_c = e, cands
                if not cands:
                    break
        for x in best_c:
            got = rec(once ^ x, full | (once & x), left - 1)
            if got is not None:
                return [x] + got
        failed.add((once, full, left))
        return None

    return rec(0, 0, count)


def _at_least_one(masks: list[int], m: int, count: int) -> list[int] | None:
    failed: set[tuple[int, int]] = set()
    size = bin(masks[0]).count("1") if masks else 0

    def rec(uncovered: int, left: int) -> list[int] | None:
        if not uncovered:
            return [masks[0]] * left
        if left == 0 or bin(uncovered).count("1") > left * size or (uncovered, left) in failed:
            return None
        best_c = None
        e = 0
        rest = uncovered
        while rest:
            if rest & 1:
                cands = [x for x in masks if (x >> e) & 1]
                if best_c is None or len(cands) < len(best_c):
                    best_c = cands
            rest >>= 1
            e += 1
        for x in best_c:
            got = rec(uncovered & ~x, left - 1)
            if got is not None:
                return [x] + got
        failed.add((uncovered, left))
        return None

    return rec((1 << m) - 1, count)


def _at_most(masks: list[int], count: int, k: int) -> list[int] | None:
    # levels[j] holds the edges already used more than j times
    def rec(start: int, levels: tuple[int, ...], left: int) -> list[int] | None:
        if left == 0:
            return []
        for i in range(start, len(masks)):
            x = masks[i]
            if x & levels[k - 1]:
                continue
            carry, new = x, []
            for lv in levels:
                new.append(lv | carry)
                carry &= lv
            got = rec(i, tuple(new), left - 1)
            if got is not None:
                return [x] + got
        return None

    return rec(0, (0,) * k, count)


def find_pm_cover(G: MultiGraph, count: int, rule: str, k: int | None = None) -> list[PerfectMatching] | None:
    """Collection of ``count`` perfect matchings (repeats allowed) in which
    every edge is covered exactly twice, at least once, or at most ``k`` times.

    The usual instances are ``(2r, exactly-2)``, ``(2r-1, at-least-1)`` and
    ``(r, at-most-k)``; the last is only of interest for 2 <= k <= r-1 but
    any ``k >= 1`` is accepted.
    """
    if count <= 0:
        raise InvalidArgument("count must be positive")
    if rule not in RULES:
        raise InvalidArgument(f"unknown rule {rule!r}")
    if rule == "at-most-k" and (k is None or k < 1):
        raise InvalidArgument("at-most-k needs k >= 1")
    if G.m == 0:
        return [PerfectMatching(frozenset())] * count if G.n == 0 else None
    masks = _matching_masks(G)
    if not masks:
        return None
    if rule == "exactly-2":
        if count * (G.n // 2) != 2 * G.m:
            return None
        found = _exactly_two(masks, G.m, count)
    elif rule == "at-least-1":
        found = _at_least_one(masks, G.m, count)
    else:
        found = _at_most(masks, count, k)
    if found is None:
        return None
    return [PerfectMatching(_unmask(x)) for x in found]


def chromatic_index_at_most(G: MultiGraph, k: int) -> tuple[int, ...] | None:
    """Proper edge colouring with colours ``0..k-1`` indexed by EdgeId, or None."""
    if G.m == 0:
        return ()
    if k <= 0 or max(G.degrees()) > k:
        return None
    # edges in breadth-first discovery order keep constraints local
    order: list[int] = []
    seen_e = set()
    seen_v = [False] * G.n
    for s in range(G.n):
        if seen_v[s]:
            continue
        seen_v[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in G.incidence[u]:
                if e not in seen_e:
                    seen_e.add(e)
                    order.append(e)
                w = G.other(e, u)
                if not seen_v[w]:
                    seen_v[w] = True
                    queue.append(w)
    color = [-1] * G.m
    used = [0] * G.n  # bitmask of colours at each vertex

    def rec(i: int, top: int) -> bool:
        if i == len(order):
            return True
        e = order[i]
        u, v = G.edges[e]
        busy = used[u] | used[v]
        # a colour above ``top`` is interchangeable with any other unused one
        for c in range(min(k, top + 2)):
            if (busy >> c) & 1:
                continue
            color[e] = c
            used[u] |= 1 << c
            used[v] |= 1 << c
            if rec(i + 1, max(top, c)):
                return True
            used[u] &= ~(1 << c)
            used[v] &= ~(1 << c)
        color[e] = -1
        return False

    return tuple(color) if rec(0, -1) else None


def is_snark(G: MultiGraph) -> bool:
    if G.n == 0 or not G.is_regular(3):
        return False
    if bridges(G):
        return False
    return chromatic_index_at_most(G, 3) is None


def check_flow(G: MultiGraph, flow: FlowAssignment, k: int) -> bool:
    if len(flow.arcs) != G.m or len(flow.values) != G.m:
        return False
    net = [0] * G.n
    for e, ((t, h), val) in enumerate(zip(flow.arcs, flow.values)):
        if {t, h} != set(G.edges[e]) or not 1 <= val <= k - 1:
            return False
        net[t] -= val
        net[h] += val
    return all(x == 0 for x in net)


def nowhere_zero_flow(G: MultiGraph, k: int) -> FlowAssignment | None:
    """Backtrack over non-tree edge values; tree edges follow by conservation.

    The reference orientation is lower id -> higher id.  Non-tree edges are
    ordered so that every tree edge becomes determined as early as possible
    (post-order of the DFS forest), and each determined tree value is
    checked on the spot.
    """
    if k < 2:
        raise InvalidArgument("k must be at least 2")
    if G.m == 0:
        return FlowAssignment((), ())
    if bridges(G):
        return None
    parent_edge = [-1] * G.n
    parent = [-1] * G.n
    order: list[int] = []
    seen = [False] * G.n
    for s in range(G.n):
        if seen[s]:
            continue
        stack = [(s, -1, -1)]
        while stack:
            u, p, pe = stack.pop()
            if seen[u]:
                continue
            seen[u] = True
            parent[u], parent_edge[u] = p, pe
            order.append(u)
            for e in reversed(G.incidence[u]):
                w = G.other(e, u)
                if not seen[w]:
                    stack.append((w, u, e))
    tree = {e for e in parent_edge if e >= 0}
    post = list(reversed(order))
    free: list[int] = []
    placed = set()
    # tree edge above v is determined once every vertex of v's subtree is done
    checks_at: dict[int, list[int]] = {}
    subtree_last = {}
    for v in post:
        for e in G.incidence[v]:
            if e not in tree and e not in placed:
                placed.add(e)
                free.append(e)
        subtree_last[v] = len(free) - 1
    for v in post:
        if parent[v] >= 0:
            checks_at.setdefault(subtree_last[v], []).append(v)
    children: list[list[int]] = [[] for _ in range(G.n)]
    for v in order:
        if parent[v] >= 0:
            children[parent[v]].append(v)

    value = [0] * G.m
    excess = [0] * G.n  # net outflow through assigned non-tree edges
    sub = [0] * G.n
    choices = [c for a in range(1, k) for c in (a, -a)]

    def tree_value(v: int) -> int:
        # outflow of subtree(v) through non-tree edges, all assigned by now
        total = excess[v] + sum(sub[c] for c in children[v])
        sub[v] = total
        return -total

    def settle(i: int) -> bool:
        for v in checks_at.get(i, ()):
            t = tree_value(v)
            if t == 0 or abs(t) > k - 1:
                return False
        return True

    # vertices whose tree edge has no free edge below are checked up front
    if not settle(-1):
        return None

    def rec(i: int) -> bool:
        if i == len(free):
            return True
        e = free[i]
        u, w = G.edges[e]
        for c in choices:
            value[e] = c
            excess[u] += c
            excess[w] -= c
            if settle(i) and rec(i + 1):
                return True
            excess[u] -= c
            excess[w] += c
        value[e] = 0
        return False

    if not rec(0):
        return None
    for v in order:
        if parent[v] >= 0:
            e = parent_edge[v]
            out = -sub[v]  # flow from v up to its parent
            value[e] = out if v < parent[v] else -out
    arcs, vals = [], []
    for e, (a, b) in enumerate(G.edges):
        if value[e] > 0:
            arcs.append((a, b))
            vals.append(value[e])
        else:
            arcs.append((b, a))
            vals.append(-value[e])
    flow = FlowAssignment(tuple(arcs), tuple(vals))
    if not check_flow(G, flow, k):
        raise AssertionError("flow search returned an invalid flow")
    return flow


def transfer_pm(G: MultiGraph, S: Iterable[int], pm: PerfectMatching) -> PerfectMatching:
    """Image of a perfect matching under the 2-cut reduction of ``S``.

    A perfect matching meets the 2-edge boundary of an even set in 0 or 2
    edges; in the latter case the new edge ``uv`` is used.
    """
    if not is_perfect_matching(G, pm.edges):
        raise InvalidArgument("not a perfect matching")
    S = frozenset(S)
    cut = boundary(G, S)
    hits = len(set(cut) & pm.edges)
    if hits not in (0, 2):
        raise InternalContradiction(f"perfect matching meets the 2-cut in {hits} edge(s)")
    red = reduce_cut(G, S)
    edges = {red.edge_map[e] for e in pm.edges if red.edge_map[e] >= 0}
    if hits == 2:
        edges.add(red.new_edges[0])
    out = PerfectMatching(frozenset(edges))
    if not is_perfect_matching(red.graph, out.edges):
        raise AssertionError("transferred matching is not perfect")
    return out

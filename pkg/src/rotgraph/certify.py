"""The r-graph property: every odd vertex set has at least r boundary edges.

Two independent routes compute the minimum odd cut.  The exhaustive route
scores every odd subset with numpy bit arithmetic (n <= 22).  The
Gomory-Hu route builds a cut tree with n-1 unit-capacity max-flow runs and
takes the best fundamental cut with an odd side (Padberg-Rao); it needs n
even.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import InvalidArgument, ResourceLimit
from .mgraph import MultiGraph, boundary, components, contract, induced, is_connected

EXHAUSTIVE_LIMIT = 22


@dataclass(frozen=True)
class OddCutCertificate:
    value: int
    witness: frozenset[int]


def _exhaustive(G: MultiGraph) -> OddCutCertificate:
    n = G.n
    if n > EXHAUSTIVE_LIMIT:
        raise ResourceLimit(f"exhaustive odd-cut scan is capped at n={EXHAUSTIVE_LIMIT}, got {n}")
    if n % 2 == 1:
        # V itself is odd with an empty boundary; in a connected graph it is
        # the only odd set with cut 0.
        return OddCutCertificate(0, frozenset(range(n)))
    # n even: S and V-S are both odd with the same cut, so only subsets
    # containing vertex 0 are scored.  They hold every lexicographic minimum.
    pairs: dict[tuple[int, int], int] = {}
    for e in G.edges:
        pairs[e] = pairs.get(e, 0) + 1
    best_value = None
    best_masks: list[np.ndarray] = []
    chunk_bits = min(n - 1, 20)
    free = n - 1
    base = np.arange(1 << chunk_bits, dtype=np.int64)
    for hi in range(1 << (free - chunk_bits)):
        masks = ((base | (hi << chunk_bits)) << 1) | 1
        bits = [((masks >> v) & 1).astype(np.int8) for v in range(n)]
        parity = np.zeros(len(masks), dtype=np.int8)
        for b in bits:
            parity ^= b
        cut = np.zeros(len(masks), dtype=np.int32)
        for (u, v), k in pairs.items():
            cut += k * (bits[u] ^ bits[v])
        odd = parity == 1
        if not odd.any():
            continue
        cut_odd = cut[odd]
        value = int(cut_odd.min())
        if best_value is None or value < best_value:
            best_value = value
            best_masks = []
        if value == best_value:
            best_masks.append(masks[odd][cut_odd == value])
    assert best_value is not None
    candidates = np.concatenate(best_masks)
    witness = min(tuple(v for v in range(n) if (int(m) >> v) & 1) for m in candidates)
    return OddCutCertificate(best_value, frozenset(witness))


class _UnitFlow:
    """Augmenting-path max flow on an undirected multigraph.

    Capacities are edge multiplicities, so the flow value is bounded by the
    minimum degree and only a handful of BFS rounds are ever needed.
    """

    def __init__(self, G: MultiGraph):
        self.n = G.n
        self.cap = [dict(a) for a in G.adjacency]

    def min_cut(self, s: int, t: int) -> tuple[int, set[int]]:
        flow: list[dict[int, int]] = [dict() for _ in range(self.n)]
        value = 0
        while True:
            prev = {s: s}
            queue = deque([s])
            while queue and t not in prev:
                u = queue.popleft()
                for w, c in self.cap[u].items():
                    if w not in prev and c - flow[u].get(w, 0) > 0:
                        prev[w] = u
                        queue.append(w)
            if t not in prev:
                return value, set(prev)
            w = t
            while w != s:
                u = prev[w]
                flow[u][w] = flow[u].get(w, 0) + 1
                flow[w][u] = flow[w].get(u, 0) - 1
                w = u
            value += 1


def gomory_hu_tree(G: MultiGraph) -> tuple[list[int], list[int]]:
    """Gusfield's cut tree: ``(parent, weight)`` with pivots in ascending id."""
    n = G.n
    parent = [0] * n
    weight = [0] * n
    parent[0] = -1
    flow = _UnitFlow(G)
    for s in range(1, n):
        t = parent[s]
        value, side = flow.min_cut(s, t)
        weight[s] = value
        for v in range(n):
            if v != s and v in side and parent[v] == t:
                parent[v] = s
        if parent[t] >= 0 and parent[t] in side:
            parent[s] = parent[t]
            parent[t] = s
            weight[s] = weight[t]
            weight[t] = value
    return parent, weight


def _gomory_hu(G: MultiGraph) -> OddCutCertificate:
    n = G.n
    if n % 2 == 1:
        return _exhaustive(G)
    parent, weight = gomory_hu_tree(G)
    children: list[list[int]] = [[] for _ in range(n)]
    for v in range(1, n):
        children[parent[v]].append(v)
    # subtree sizes, children before parents
    order = [0]
    for v in order:
        order.extend(children[v])
    size = [1] * n
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    best = None
    for v in order[1:]:
        if size[v] % 2 == 1 and (best is None or weight[v] < weight[best]):
            best = v
    assert best is not None
    side = [best]
    for v in side:
        side.extend(children[v])
    return OddCutCertificate(weight[best], frozenset(side))


def min_odd_cut(G: MultiGraph, method: str = "auto") -> OddCutCertificate:
    if G.n < 1:
        raise InvalidArgument("min_odd_cut needs at least one vertex")
    if not is_connected(G):
        raise InvalidArgument("min_odd_cut is defined for connected graphs only")
    if method == "auto":
        method = "gomory-hu" if G.n % 2 == 0 and G.n > EXHAUSTIVE_LIMIT else "exhaustive"
    if method == "exhaustive":
        return _exhaustive(G)
    if method == "gomory-hu":
        return _gomory_hu(G)
    raise InvalidArgument(f"unknown method {method!r}")


def is_r_graph(G: MultiGraph, r: int, method: str = "auto") -> bool:
    """True iff G is r-regular and every odd vertex set has >= r boundary edges.

    Disconnected input is handled per component: an odd component is an odd
    set with empty boundary, otherwise each component is checked separately.
    """
    if r < 1 or not G.is_regular(r):
        return False
    if G.n == 0:
        return True
    comps = components(G)
    if len(comps) == 1:
        return min_odd_cut(G, method).value >= r
    for comp in comps:
        if len(comp) % 2 == 1:
            return False
    return all(min_odd_cut(induced(G, comp)[0], method).value >= r for comp in comps)


def rizzi_split(G: MultiGraph, S: Iterable[int]) -> tuple[MultiGraph, MultiGraph]:
    """Contract each side of an odd r-cut: ``(G_S, G_complement)``.

    ``G_S`` has ``S`` contracted and ``G_complement`` has ``V - S`` contracted.
    """
    S = frozenset(S)
    degs = set(G.degrees())
    if len(degs) != 1:
        raise InvalidArgument("graph is not regular")
    (r,) = degs
    if len(S) % 2 == 0:
        raise InvalidArgument(f"|S| = {len(S)} is not odd")
    cut = len(boundary(G, S))
    if cut != r:
        raise InvalidArgument(f"|boundary(S)| = {cut}, expected r = {r}")
    rest = frozenset(range(G.n)) - S
    if not rest:
        raise InvalidArgument("S must be a proper subset")
    return contract(G, S), contract(G, rest)


def is_even_graph(G: MultiGraph) -> bool:
    return all(d % 2 == 0 for d in G.degrees())

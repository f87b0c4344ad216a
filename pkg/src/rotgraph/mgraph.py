"""Loopless undirected multigraphs with addressable parallel edges.

Vertices are the integers ``0..n-1``.  Every edge copy has an EdgeId, its
position in ``MultiGraph.edges``; parallel copies of the same pair are
distinct edges.  All values are immutable: operations return new graphs.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvalidArgument, NoSpanningTree

Edge = tuple[int, int]


@dataclass(frozen=True)
class MultiGraph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise InvalidArgument(f"negative vertex count {self.n}")
        norm = []
        for u, v in self.edges:
            if u == v:
                raise InvalidArgument(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidArgument(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.append((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> MultiGraph:
        return cls(n, tuple((int(u), int(v)) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """EdgeIds incident to each vertex, ascending."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for e, (u, v) in enumerate(self.edges):
            inc[u].append(e)
            inc[v].append(e)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def _pair_count(self) -> Counter:
        return Counter(self.edges)

    @cached_property
    def adjacency(self) -> tuple[dict[int, int], ...]:
        """Per vertex, a map neighbour -> multiplicity."""
        adj: list[dict[int, int]] = [dict() for _ in range(self.n)]
        for (u, v), k in self._pair_count.items():
            adj[u][v] = k
            adj[v][u] = k
        return tuple(adj)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def degrees(self) -> list[int]:
        return [len(x) for x in self.incidence]

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def multiplicity(self, u: int, v: int) -> int:
        return self._pair_count.get((u, v) if u < v else (v, u), 0)

    def is_regular(self, r: int | None = None) -> bool:
        degs = set(self.degrees())
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return r is None or degs == {r}

    def is_simple(self) -> bool:
        return all(k == 1 for k in self._pair_count.values())

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def same_edges(self, other: MultiGraph) -> bool:
        """Equality as labelled multigraphs, ignoring EdgeId order."""
        return self.n == other.n and self._pair_count == other._pair_count

    def relabel(self, mapping: Sequence[int]) -> MultiGraph:
        return MultiGraph(self.n, tuple((mapping[u], mapping[v]) for u, v in self.edges))


@dataclass(frozen=True)
class RootedSpanningTree:
    host: MultiGraph = field(repr=False)
    tree_edges: frozenset[int]
    root: int

    def __post_init__(self):
        object.__setattr__(self, "tree_edges", frozenset(self.tree_edges))
        n = self.host.n
        if n == 0:
            raise InvalidArgument("a spanning tree needs at least one vertex")
        if not 0 <= self.root < n:
            raise InvalidArgument(f"root {self.root} out of range")
        if len(self.tree_edges) != n - 1:
            raise InvalidArgument(f"{len(self.tree_edges)} tree edges for {n} vertices")
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for e in self.tree_edges:
            if not 0 <= e < self.host.m:
                raise InvalidArgument(f"tree edge {e} out of range")
            a, b = (find(x) for x in self.host.edges[e])
            if a == b:
                raise InvalidArgument("tree edges contain a cycle")
            parent[a] = b

    @cached_property
    def tree_adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.host.n)]
        for e in sorted(self.tree_edges):
            u, v = self.host.edges[e]
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(a) for a in adj)

    def tree_degree(self, v: int) -> int:
        return len(self.tree_adjacency[v])

    @cached_property
    def depth(self) -> tuple[int, ...]:
        """Tree distance of every vertex from the root."""
        dist = [-1] * self.host.n
        dist[self.root] = 0
        queue = deque([self.root])
        while queue:
            u = queue.popleft()
            for w in self.tree_adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return tuple(dist)

    @cached_property
    def parent(self) -> tuple[int, ...]:
        """Tree parent of every vertex; the root maps to -1."""
        par = [-1] * self.host.n
        depth = self.depth
        for v in range(self.host.n):
            for w in self.tree_adjacency[v]:
                if depth[w] == depth[v] - 1:
                    par[v] = w
        return tuple(par)

    def leaves(self) -> list[int]:
        if self.host.n == 1:
            return []
        return [v for v in range(self.host.n) if self.tree_degree(v) == 1]

    def as_graph(self) -> MultiGraph:
        return MultiGraph(self.host.n, tuple(self.host.edges[e] for e in sorted(self.tree_edges)))


def _check_vertices(G: MultiGraph, S: Iterable[int]) -> frozenset[int]:
    S = frozenset(S)
    for v in S:
        if not 0 <= v < G.n:
            raise InvalidArgument(f"vertex {v} out of range for n={G.n}")
    return S


def boundary(G: MultiGraph, S: Iterable[int]) -> list[int]:
    """EdgeIds of all edge copies with exactly one end in ``S``."""
    S = _check_vertices(G, S)
    return [e for e, (u, v) in enumerate(G.edges) if (u in S) != (v in S)]


def neighbors(G: MultiGraph, S: Iterable[int]) -> frozenset[int]:
    S = _check_vertices(G, S)
    return frozenset(w for v in S for w in G.adjacency[v] if w not in S)


def components(G: MultiGraph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Connected components (sorted vertex lists), ignoring the given EdgeIds."""
    removed = set(removed)
    comp = [-1] * G.n
    out = []
    for s in range(G.n):
        if comp[s] >= 0:
            continue
        comp[s] = len(out)
        members = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in G.incidence[u]:
                if e in removed:
                    continue
                w = G.other(e, u)
                if comp[w] < 0:
                    comp[w] = comp[s]
                    members.append(w)
                    queue.append(w)
        out.append(sorted(members))
    return out


def is_connected(G: MultiGraph) -> bool:
    return len(components(G)) <= 1


def bridges(G: MultiGraph) -> list[int]:
    """EdgeIds of bridges; a parallel copy is never a bridge."""
    disc = [-1] * G.n
    low = [0] * G.n
    out = []
    timer = 0
    for s in range(G.n):
        if disc[s] >= 0:
            continue
        disc[s] = low[s] = timer
        timer += 1
        # iterative DFS; frames are (vertex, entering edge, incidence cursor)
        stack = [(s, -1, 0)]
        while stack:
            v, pe, i = stack[-1]
            inc = G.incidence[v]
            if i < len(inc):
                stack[-1] = (v, pe, i + 1)
                e = inc[i]
                if e == pe:
                    continue
                w = G.other(e, v)
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, e, 0))
                else:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] > disc[u]:
                        out.append(pe)
    return sorted(out)


def spanning_tree(G: MultiGraph, root: int = 0) -> RootedSpanningTree:
    """Breadth-first spanning tree; ties go to the smallest EdgeId."""
    if not 0 <= root < G.n:
        raise InvalidArgument(f"root {root} out of range")
    seen = [False] * G.n
    seen[root] = True
    chosen = []
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for e in G.incidence[u]:
            w = G.other(e, u)
            if not seen[w]:
                seen[w] = True
                chosen.append(e)
                queue.append(w)
    if not all(seen):
        raise NoSpanningTree("graph is disconnected")
    return RootedSpanningTree(G, frozenset(chosen), root)


def quotient(G: MultiGraph, block_of: Sequence[int], n_blocks: int) -> MultiGraph:
    """Identify vertices by block index; edges inside a block are dropped."""
    edges = []
    for u, v in G.edges:
        a, b = block_of[u], block_of[v]
        if a != b:
            edges.append((a, b))
    return MultiGraph(n_blocks, tuple(edges))


def contract(G: MultiGraph, S: Iterable[int]) -> MultiGraph:
    """Contract ``S`` to one vertex, which receives the highest id.

    Remaining vertices are relabelled densely in ascending order; loops that
    arise inside ``S`` are removed and parallel edges are kept.
    """
    S = _check_vertices(G, S)
    if not S:
        raise InvalidArgument("cannot contract an empty set")
    keep = [v for v in range(G.n) if v not in S]
    block = [0] * G.n
    for i, v in enumerate(keep):
        block[v] = i
    for v in S:
        block[v] = len(keep)
    return quotient(G, block, len(keep) + 1)


def induced(G: MultiGraph, S: Iterable[int]) -> tuple[MultiGraph, list[int]]:
    """Induced subgraph on ``S`` relabelled densely, plus the kept vertex list."""
    keep = sorted(_check_vertices(G, S))
    pos = {v: i for i, v in enumerate(keep)}
    edges = tuple((pos[u], pos[v]) for u, v in G.edges if u in pos and v in pos)
    return MultiGraph(len(keep), edges), keep


def complete_graph(n: int) -> MultiGraph:
    return MultiGraph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> MultiGraph:
    return MultiGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def bundle(r: int) -> MultiGraph:
    """Two vertices joined by ``r`` parallel edges."""
    return MultiGraph(2, ((0, 1),) * r)


def complete_bipartite(a: int, b: int) -> MultiGraph:
    return MultiGraph(a + b, tuple((u, a + v) for u in range(a) for v in range(b)))


def petersen() -> MultiGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return MultiGraph(10, tuple(outer + spokes + inner))


def bridged_cubic() -> MultiGraph:
    """Smallest cubic graph with a bridge.

    Two copies of K_4 with one edge subdivided, joined by an edge between
    the two subdivision vertices.
    """
    half = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)]
    edges = half + [(u + 5, v + 5) for u, v in half] + [(4, 9)]
    return MultiGraph(10, tuple(edges))

"""T_i^r trees, hists and rotational automorphisms."""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidArgument
from .mgraph import MultiGraph, RootedSpanningTree, components
from .refine import balanced, refine, union


def t_i_r_order(r: int, i: int) -> int:
    """Number of vertices of T_i^r: ``1 + sum_{j<i} r (r-1)^j``."""
    if i < 0:
        raise InvalidArgument("depth must be non-negative")
    return 1 + sum(r * (r - 1) ** j for j in range(i))


def build_t_i_r(r: int, i: int) -> RootedSpanningTree:
    """Canonical T_i^r: root 0, children numbered in breadth-first order."""
    if i < 0:
        raise InvalidArgument("depth must be non-negative")
    if r < 1 or r % 2 == 0:
        raise InvalidArgument(f"r must be odd and positive, got {r}")
    if r == 1 and i > 1:
        raise InvalidArgument("T_i^1 exists only for i <= 1")
    edges = []
    frontier = [0]
    nxt = 1
    for level in range(i):
        new = []
        for v in frontier:
            for _ in range(r if level == 0 else r - 1):
                edges.append((v, nxt))
                new.append(nxt)
                nxt += 1
        frontier = new
    G = MultiGraph(nxt, tuple(edges))
    return RootedSpanningTree(G, frozenset(range(len(edges))), 0)


class TirShape(NamedTuple):
    r: int | None
    depth: int
    root: int


def _as_tree(T) -> MultiGraph:
    G = T.as_graph() if isinstance(T, RootedSpanningTree) else T
    if G.n == 0 or G.m != G.n - 1 or len(components(G)) != 1:
        raise InvalidArgument("input is not a tree")
    return G


def _bfs(G: MultiGraph, s: int) -> list[int]:
    dist = [-1] * G.n
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in G.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def recognize_t_i_r(T) -> TirShape | None:
    """Return ``(r, depth, root)`` if the tree is some T_i^r, else None.

    A single vertex reports ``(None, 0, 0)`` and a single edge ``(1, 1, 0)``.
    """
    G = _as_tree(T)
    if G.n == 1:
        return TirShape(None, 0, 0)
    if G.n == 2:
        return TirShape(1, 1, 0)
    degs = G.degrees()
    internal = {d for d in degs if d != 1}
    if len(internal) != 1:
        return None
    (r,) = internal
    if r < 3:
        return None
    # the root is the centre of a longest path
    d0 = _bfs(G, 0)
    a = max(range(G.n), key=lambda v: (d0[v], -v))
    da = _bfs(G, a)
    b = max(range(G.n), key=lambda v: (da[v], -v))
    diameter = da[b]
    if diameter % 2:
        return None
    db = _bfs(G, b)
    half = diameter // 2
    root = next(v for v in range(G.n) if da[v] == half and db[v] == half)
    dist = _bfs(G, root)
    if any(dist[v] != half for v in range(G.n) if degs[v] == 1):
        return None
    return TirShape(r, half, root)


def is_hist(G: MultiGraph, T: RootedSpanningTree) -> bool:
    if not T.host.same_edges(G):
        raise InvalidArgument("tree does not span the given graph")
    return all(T.tree_degree(v) != 2 for v in range(G.n))


def verify_hist_partition(G: MultiGraph, T: RootedSpanningTree) -> bool:
    """Non-tree edges join leaves, and the leaves induce an even subgraph."""
    if not T.host.same_edges(G):
        raise InvalidArgument("tree does not span the given graph")
    if not G.is_regular():
        raise InvalidArgument("graph is not regular")
    if recognize_t_i_r(T) is None:
        raise InvalidArgument("spanning tree is not isomorphic to any T_i^r")
    leaves = set(T.leaves())
    leaf_degree = Counter()
    for e, (u, v) in enumerate(T.host.edges):
        if e in T.tree_edges:
            if u in leaves and v in leaves:
                leaf_degree[u] += 1
                leaf_degree[v] += 1
            continue
        if u not in leaves or v not in leaves:
            return False
        leaf_degree[u] += 1
        leaf_degree[v] += 1
    return all(leaf_degree[v] % 2 == 0 for v in leaves)


@dataclass(frozen=True)
class VertexPermutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(len(images))):
            raise InvalidArgument("map is not a bijection on [0, n)")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> VertexPermutation:
        return cls(tuple(range(n)))

    def __len__(self):
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v]

    def inverse(self) -> VertexPermutation:
        inv = [0] * len(self.images)
        for v, w in enumerate(self.images):
            inv[w] = v
        return VertexPermutation(tuple(inv))

    def then(self, other: VertexPermutation) -> VertexPermutation:
        """Apply ``self`` first, then ``other``."""
        return VertexPermutation(tuple(other.images[w] for w in self.images))

    def orbit_lengths(self) -> list[int]:
        out = [0] * len(self.images)
        for s in range(len(self.images)):
            if out[s]:
                continue
            cyc = [s]
            w = self.images[s]
            while w != s:
                cyc.append(w)
                w = self.images[w]
            for v in cyc:
                out[v] = len(cyc)
        return out


def orbit_length(alpha: VertexPermutation, v: int) -> int:
    k, w = 1, alpha(v)
    while w != v:
        w = alpha(w)
        k += 1
    return k


def is_automorphism(G: MultiGraph, alpha: VertexPermutation) -> bool:
    if len(alpha) != G.n:
        raise InvalidArgument(f"permutation has {len(alpha)} entries for {G.n} vertices")
    mapped = Counter(
        (alpha(u), alpha(v)) if alpha(u) < alpha(v) else (alpha(v), alpha(u)) for u, v in G.edges
    )
    return mapped == Counter(G.edges)


def is_rotational(T: RootedSpanningTree, alpha: VertexPermutation) -> bool:
    """Does ``alpha`` fix the root and move every other vertex in an orbit of
    length equal to the root's tree degree?"""
    if not is_automorphism(T.as_graph(), alpha):
        raise InvalidArgument("permutation is not an automorphism of the tree")
    lengths = alpha.orbit_lengths()
    r = T.tree_degree(T.root)
    return lengths[T.root] == 1 and all(
        lengths[v] == r for v in range(len(lengths)) if v != T.root
    )


def _labelled_adjacency(G: MultiGraph, T: RootedSpanningTree) -> list[list[tuple[int, tuple[int, int]]]]:
    tree_mult: Counter = Counter(G.edges[e] for e in T.tree_edges)
    adj = []
    for v in range(G.n):
        row = []
        for w, k in G.adjacency[v].items():
            t = tree_mult[(v, w) if v < w else (w, v)]
            row.append((w, (t, k - t)))
        adj.append(row)
    return adj


class _RotationSearch:
    """Individualise-and-refine search for a rotational automorphism.

    The left half of a doubled graph carries the individualised sources and
    the right half the chosen images.  Refinement prunes any partial map
    that no tree-preserving automorphism extends; the orbit condition is
    enforced on the partial map, and a chain of r-1 known steps forces the
    image that closes the orbit.
    """

    def __init__(self, G: MultiGraph, T: RootedSpanningTree, r: int):
        self.n = G.n
        self.r = r
        self.root = T.root
        self.adj = union(*([_labelled_adjacency(G, T)] * 2))
        base = list(T.depth)
        self.start = base + base

    def _pairs(self, colors):
        n = self.n
        seen: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            seen.setdefault(c, []).append(v)
        alpha = {}
        for members in seen.values():
            if len(members) == 2:
                alpha[members[0]] = members[1] - n
        return alpha, seen

    def _inverse_walk(self, alpha):
        return {w: v for v, w in alpha.items()}

    def _orbit_state(self, alpha):
        """Return ``(ok, forced)`` for a partial map.

        ``forced`` lists pairs that close a chain of exactly r vertices.
        """
        r = self.r
        pre = self._inverse_walk(alpha)
        forced = []
        done = set()
        for v in alpha:
            if v in done:
                continue
            if v == self.root:
                done.add(v)
                if alpha[v] != v:
                    return False, []
                continue
            s = v
            steps = 0
            while s in pre:
                s = pre[s]
                steps += 1
                if s == v or steps > r:
                    break
            if steps > r:
                return False, []
            chain = [s]
            w = s
            closed = False
            while w in alpha:
                w = alpha[w]
                if w == s:
                    closed = True
                    break
                chain.append(w)
                if len(chain) > r:
                    return False, []
            done.update(chain)
            if closed:
                if len(chain) != r:
                    return False, []
            elif len(chain) == r:
                forced.append((chain[-1], s))
        return True, forced

    def _individualise(self, colors, pairs):
        colors = list(colors)
        top = max(colors) + 1
        for k, (v, w) in enumerate(pairs):
            colors[v] = top + k
            colors[self.n + w] = top + k
        return refine(self.adj, colors)

    def _settle(self, colors):
        """Refine, apply forced orbit closures; None on contradiction."""
        while True:
            if not balanced(colors, self.n):
                return None
            alpha, _ = self._pairs(colors)
            ok, forced = self._orbit_state(alpha)
            if not ok:
                return None
            if not forced:
                return colors
            for v, w in forced:
                if colors[v] != colors[self.n + w]:
                    return None
            colors = self._individualise(colors, forced)

    def _choose(self, colors):
        n = self.n
        alpha, cells = self._pairs(colors)
        open_left = [v for v in range(n) if v not in alpha]
        if not open_left:
            return None, []
        pre = self._inverse_walk(alpha)
        # continue the longest open chain so that closures come early
        best, best_len = None, 0
        for v in open_left:
            if v in pre:
                k, s = 0, v
                while s in pre and k <= self.r:
                    s = pre[s]
                    k += 1
                if k > best_len:
                    best, best_len = v, k
        if best is None:
            best = min(open_left, key=lambda v: (len(cells[colors[v]]), v))
        cands = [u - n for u in cells[colors[best]] if u >= n and (u - n) not in pre]
        if self.r > 1:
            cands = [w for w in cands if w != best]
        return best, sorted(cands)

    def run(self):
        colors = refine(self.adj, self.start)
        colors = self._individualise(colors, [(self.root, self.root)])
        colors = self._settle(colors)
        if colors is None:
            return None
        return self._search(colors)

    def _search(self, colors):
        v, cands = self._choose(colors)
        if v is None:
            alpha, _ = self._pairs(colors)
            return tuple(alpha[u] for u in range(self.n))
        for w in cands:
            nxt = self._settle(self._individualise(colors, [(v, w)]))
            if nxt is None:
                continue
            found = self._search(nxt)
            if found is not None:
                return found
        return None


def find_rotational_automorphism(G: MultiGraph, T: RootedSpanningTree) -> VertexPermutation | None:
    """Exhaustive search; ``None`` proves no rotational automorphism exists."""
    if not T.host.same_edges(G):
        raise InvalidArgument("tree does not span the given graph")
    shape = recognize_t_i_r(T)
    if shape is None:
        raise InvalidArgument("spanning tree is not isomorphic to any T_i^r")
    if shape.depth > 0 and shape.root != T.root:
        raise InvalidArgument("tree is rooted away from its centre")
    if G.n == 1:
        return VertexPermutation.identity(1)
    r = T.tree_degree(T.root)
    T = RootedSpanningTree(G, T.tree_edges, T.root) if T.host is not G else T
    images = _RotationSearch(G, T, r).run()
    if images is None:
        return None
    alpha = VertexPermutation(images)
    if not (is_automorphism(G, alpha) and is_rotational(T, alpha)):
        raise AssertionError("rotation search produced an invalid map")
    return alpha

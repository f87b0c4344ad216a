"""Edge-expansion, leaf-expansion and 2-cut reduction.

Relabelling convention shared by all three: deleted vertices are removed
and the survivors compacted in ascending order; new vertices and new edges
are appended.  Each operation reports how old ids map to new ones so that
trees, scripts and vertex sets can be carried across.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InternalContradiction, InvalidArgument, ScriptError
from .mgraph import MultiGraph, RootedSpanningTree, boundary, bridges, components


@dataclass(frozen=True)
class Surgery:
    graph: MultiGraph
    tree: RootedSpanningTree | None
    vertex_map: tuple[int, ...]  # old vertex -> new vertex, -1 if deleted
    edge_map: tuple[int, ...]  # old EdgeId -> new EdgeId, -1 if deleted
    removed: tuple[int, ...] = ()  # old ids of deleted vertices
    added: tuple[int, ...] = ()  # new ids of created vertices
    new_edges: tuple[int, ...] = ()  # new EdgeIds of created edges

    def carry(self, S: Iterable[int]) -> frozenset[int]:
        """Image of a vertex set; a set containing a replaced vertex
        absorbs everything created in its place."""
        S = frozenset(S)
        out = {self.vertex_map[v] for v in S if self.vertex_map[v] >= 0}
        if S & set(self.removed):
            out.update(self.added)
        return frozenset(out)


@dataclass(frozen=True)
class ReductionScript:
    steps: tuple[frozenset[int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(frozenset(s) for s in self.steps))

    def __len__(self):
        return len(self.steps)

    def __add__(self, other: ReductionScript) -> ReductionScript:
        return ReductionScript(self.steps + other.steps)


def _common_degree(G: MultiGraph) -> int:
    degs = set(G.degrees())
    if len(degs) != 1:
        raise InvalidArgument("graph is not regular")
    return degs.pop()


def edge_expansion(G: MultiGraph, T: RootedSpanningTree, e: int) -> Surgery:
    """Replace non-tree edge ``uv`` by ``u - u' = v' - v`` with r-1 copies of ``u'v'``.

    ``u'`` gets id n and is attached to the lower endpoint.  The edge list
    of the result is the old one without ``e``, then ``uu'``, ``vv'`` and
    the r-1 parallel copies.
    """
    r = _common_degree(G)
    if not 0 <= e < G.m:
        raise InvalidArgument(f"edge {e} out of range")
    if e in T.tree_edges:
        raise InvalidArgument(f"edge {e} belongs to the spanning tree")
    u, v = G.edges[e]
    n = G.n
    up, vp = n, n + 1
    edge_map = [i if i < e else i - 1 for i in range(G.m)]
    edge_map[e] = -1
    edges = G.edges[:e] + G.edges[e + 1 :] + ((u, up), (v, vp)) + ((up, vp),) * (r - 1)
    H = MultiGraph(n + 2, edges)
    base = G.m - 1
    tree_edges = {edge_map[t] for t in T.tree_edges} | {base, base + 1}
    return Surgery(
        graph=H,
        tree=RootedSpanningTree(H, frozenset(tree_edges), T.root),
        vertex_map=tuple(range(n)),
        edge_map=tuple(edge_map),
        added=(up, vp),
        new_edges=tuple(range(base, base + r + 1)),
    )


def leaf_expansion(G: MultiGraph, T: RootedSpanningTree, l: int) -> Surgery:
    """Replace tree leaf ``l`` by a copy of K_r.

    Each of the r edge copies at ``l`` is redirected, keeping its EdgeId,
    to its own vertex of K.  The tree edge goes to ``l_1``; the others go
    to ``l_2..l_r`` in EdgeId order.  K's edges are appended, the star
    ``l_1 l_j`` first; the star joins the tree.
    """
    if not 0 <= l < G.n:
        raise InvalidArgument(f"vertex {l} out of range")
    if G.n < 2 or T.tree_degree(l) != 1:
        raise InvalidArgument(f"vertex {l} is not a leaf of the tree")
    r = G.degree(l)
    if r % 2 == 0:
        raise InvalidArgument(f"leaf-expansion needs odd degree, vertex {l} has {r}")
    n = G.n
    vmap = [v if v < l else v - 1 for v in range(n)]
    vmap[l] = -1
    base = n - 1
    K = list(range(base, base + r))
    tree_edge = next(x for x in G.incidence[l] if x in T.tree_edges)
    order = [tree_edge] + [x for x in G.incidence[l] if x != tree_edge]
    slot = {x: K[j] for j, x in enumerate(order)}
    edges = []
    for x, (a, b) in enumerate(G.edges):
        if x in slot:
            other = b if a == l else a
            edges.append((vmap[other], slot[x]))
        else:
            edges.append((vmap[a], vmap[b]))
    start = len(edges)
    edges += [(K[i], K[j]) for i in range(r) for j in range(i + 1, r)]
    H = MultiGraph(n - 1 + r, tuple(edges))
    tree_edges = set(T.tree_edges) | set(range(start, start + r - 1))
    root = vmap[T.root] if T.root != l else K[0]
    out = Surgery(
        graph=H,
        tree=RootedSpanningTree(H, frozenset(tree_edges), root),
        vertex_map=tuple(vmap),
        edge_map=tuple(range(G.m)),
        removed=(l,),
        added=tuple(K),
        new_edges=tuple(range(start, len(edges))),
    )
    for k in K:
        if any(c > 1 for c in H.adjacency[k].values()):
            raise InternalContradiction(f"expansion vertex {k} has a parallel edge")
    return out


def reduce_cut(G: MultiGraph, S: Iterable[int]) -> Surgery:
    """2-cut reduction of ``S``, with id maps.  The new edge ``uv`` is last."""
    S = frozenset(S)
    for v in S:
        if not 0 <= v < G.n:
            raise InvalidArgument(f"vertex {v} out of range")
    if len(S) % 2:
        raise InvalidArgument(f"|S| = {len(S)} is odd")
    cut = boundary(G, S)
    if len(cut) != 2:
        raise InvalidArgument(f"|boundary(S)| = {len(cut)}, expected 2")
    u, v = (b if a in S else a for a, b in (G.edges[e] for e in cut))
    if u == v:
        raise InternalContradiction(
            f"both boundary edges of S end at vertex {u}; the graph is not an r-graph with r >= 3"
        )
    vmap = []
    k = 0
    for x in range(G.n):
        if x in S:
            vmap.append(-1)
        else:
            vmap.append(k)
            k += 1
    emap = []
    edges = []
    for a, b in G.edges:
        if a in S or b in S:
            emap.append(-1)
        else:
            emap.append(len(edges))
            edges.append((vmap[a], vmap[b]))
    edges.append((vmap[u], vmap[v]))
    H = MultiGraph(k, tuple(edges))
    return Surgery(
        graph=H,
        tree=None,
        vertex_map=tuple(vmap),
        edge_map=tuple(emap),
        removed=tuple(sorted(S)),
        new_edges=(len(edges) - 1,),
    )


def two_cut_reduction(G: MultiGraph, S: Iterable[int]) -> MultiGraph:
    return reduce_cut(G, S).graph


def _bridges_without(G: MultiGraph, skip: int) -> list[int]:
    keep = [x for x in range(G.m) if x != skip]
    H = MultiGraph(G.n, tuple(G.edges[x] for x in keep))
    return [keep[b] for b in bridges(H)]


def find_two_cuts(G: MultiGraph) -> list[frozenset[int]]:
    """Inclusion-minimal even sets with exactly two boundary edges.

    Each set is reported from the side that avoids vertex 0 when that side
    is even.  Candidate edge pairs are (e, bridge of G - e).
    """
    pairs = {tuple(sorted((e, f))) for e in range(G.m) for f in _bridges_without(G, e)}
    found: set[frozenset[int]] = set()
    everything = frozenset(range(G.n))
    for pair in sorted(pairs):
        for comp in components(G, removed=pair):
            for side in (frozenset(comp), everything - frozenset(comp)):
                if not side or len(side) % 2 or len(boundary(G, side)) != 2:
                    continue
                other = everything - side
                if 0 in side and other and len(other) % 2 == 0:
                    side = other
                found.add(side)
    minimal = [s for s in found if not any(t < s for t in found)]
    return sorted(minimal, key=lambda s: (len(s), sorted(s)))


def apply_script(G: MultiGraph, script: ReductionScript) -> MultiGraph:
    for i, S in enumerate(script.steps):
        try:
            G = two_cut_reduction(G, S)
        except Exception as exc:
            raise ScriptError(i, exc) from exc
    return G

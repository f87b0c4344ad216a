"""Blow an r-graph up into a simple rotation r-graph.

Pipeline: ``step1_expand`` turns G into a simple r-graph H whose spanning
tree is a T_i^r; ``base_rotation_graph`` grows a rotation graph R of the
same depth from K_{r+1}; ``assemble`` glues r copies of H and (r-1)^2 - r
copies of R onto a T_2^r hub.  Each stage also returns the 2-cut reductions
that undo it.
"""
from __future__ import annotations

from dataclasses import dataclass

from .certify import EXHAUSTIVE_LIMIT, is_r_graph
from .errors import InvalidArgument
from .mgraph import MultiGraph, RootedSpanningTree, complete_graph, is_connected, quotient, spanning_tree
from .shape import (
    VertexPermutation,
    build_t_i_r,
    is_automorphism,
    is_rotational,
    recognize_t_i_r,
)
from .surgery import ReductionScript, Surgery, edge_expansion, leaf_expansion, reduce_cut


@dataclass(frozen=True)
class HistGraph:
    graph: MultiGraph
    tree: RootedSpanningTree
    r: int
    depth: int


@dataclass(frozen=True)
class AssemblyPlan:
    """Where every piece of the assembled graph lives.

    Vertices are laid out in blocks: the hub tree first, then the copies of
    H (each without its root, in source order), then the copies of R.
    """

    r: int
    hub_size: int
    h_root: int
    h_size: int
    h_offsets: tuple[int, ...]
    r_root: int
    r_size: int
    r_offsets: tuple[int, ...]
    n_lists: tuple[tuple[int, ...], ...]
    l_lists: tuple[tuple[int, ...], ...]
    new_edges: tuple[int, ...]

    def h_vertex(self, i: int, v: int) -> int:
        """Vertex of copy ``i`` (0-based) corresponding to ``v`` in H."""
        if v == self.h_root:
            raise InvalidArgument("the root of H is deleted in every copy")
        return self.h_offsets[i] + (v if v < self.h_root else v - 1)

    def r_vertex(self, j: int, v: int) -> int:
        if v == self.r_root:
            raise InvalidArgument("the root of R is deleted in every copy")
        return self.r_offsets[j] + (v if v < self.r_root else v - 1)

    def blocks(self) -> list[range]:
        return [range(o, o + self.h_size) for o in self.h_offsets] + [
            range(o, o + self.r_size) for o in self.r_offsets
        ]


@dataclass(frozen=True)
class RotationGraph:
    base: HistGraph
    rotation: VertexPermutation
    plan: AssemblyPlan | None = None

    @property
    def graph(self) -> MultiGraph:
        return self.base.graph

    @property
    def tree(self) -> RootedSpanningTree:
        return self.base.tree


def _check_r(r: int) -> None:
    if r < 3 or r % 2 == 0:
        raise InvalidArgument(f"r must be an odd integer >= 3, got {r}")


def step1_expand(G: MultiGraph, r: int, trace: list | None = None) -> tuple[HistGraph, ReductionScript]:
    """Expand G into a simple r-graph H with a T_{d+1}^r spanning tree.

    Every non-tree edge of the BFS tree from vertex 0 is edge-expanded, then
    leaves closer than d+1 to vertex 0 are leaf-expanded, smallest id first.
    The returned script reduces the images of the edge gadgets, last gadget
    first, and turns H back into G with G's own labels.  Pass a list as
    ``trace`` to collect every ``Surgery`` performed.
    """
    _check_r(r)
    if not G.is_regular(r):
        raise InvalidArgument(f"graph is not {r}-regular")
    if G.n <= EXHAUSTIVE_LIMIT and not is_r_graph(G, r):
        raise InvalidArgument(f"input fails the r-graph test for r={r}")
    if not is_connected(G):
        raise InvalidArgument("graph is disconnected")
    T = spanning_tree(G, 0)
    current = list(range(G.m))
    gadgets: list[frozenset[int]] = []

    def record(s: Surgery):
        nonlocal gadgets
        gadgets = [s.carry(g) for g in gadgets]
        if trace is not None:
            trace.append(s)

    for e in sorted(set(range(G.m)) - T.tree_edges):
        s = edge_expansion(G, T, current[e])
        current = [s.edge_map[c] if c >= 0 else -1 for c in current]
        record(s)
        gadgets.append(frozenset(s.added))
        G, T = s.graph, s.tree
    d = max(T.depth[v] for v in T.leaves())
    while True:
        short = [v for v in T.leaves() if T.depth[v] <= d]
        if not short:
            break
        s = leaf_expansion(G, T, short[0])
        record(s)
        G, T = s.graph, s.tree
    shape = recognize_t_i_r(T)
    if shape != (r, d + 1, T.root) or not G.is_simple():
        raise AssertionError("step 1 did not produce a simple T_{d+1}^r graph")
    H = HistGraph(G, T, r, d + 1)

    steps = []
    pending = list(reversed(gadgets))
    graph = G
    while pending:
        S = pending.pop(0)
        steps.append(S)
        red = reduce_cut(graph, S)
        pending = [red.carry(t) for t in pending]
        graph = red.graph
    return H, ReductionScript(tuple(steps))


def base_rotation_graph(r: int, depth: int) -> RotationGraph:
    """A simple rotation r-graph whose tree is T_depth^r.

    Starts from K_{r+1} with the star at vertex 0 and rotation
    ``1 -> 2 -> ... -> r -> 1``; each round leaf-expands every leaf.  The
    rotation is lifted by sending the K-vertex that took over edge ``lw``
    to the one that took over the image edge.
    """
    _check_r(r)
    if depth < 1:
        raise InvalidArgument("depth must be at least 1")
    G = complete_graph(r + 1)
    T = spanning_tree(G, 0)
    alpha = [0] + [v % r + 1 for v in range(1, r + 1)]
    for _ in range(depth - 1):
        G, T, alpha = _expand_round(G, T, alpha)
    alpha_p = VertexPermutation(tuple(alpha))
    if not (is_automorphism(G, alpha_p) and is_rotational(T, alpha_p)):
        raise AssertionError("lifted rotation is not rotational")
    return RotationGraph(HistGraph(G, T, r, depth), alpha_p)


def _expand_round(G: MultiGraph, T: RootedSpanningTree, alpha: list[int]):
    pair_id = {e: i for i, e in enumerate(G.edges)}
    old_leaves = T.leaves()
    pos = list(range(G.n))
    kset: dict[int, list[int]] = {}
    for l in old_leaves:
        s = leaf_expansion(G, T, pos[l])
        pos = [s.vertex_map[p] if p >= 0 else -1 for p in pos]
        kset = {k: [s.vertex_map[x] for x in xs] for k, xs in kset.items()}
        kset[l] = list(s.added)
        G, T = s.graph, s.tree
    new_alpha = [-1] * G.n
    for v, p in enumerate(pos):
        if p >= 0:
            new_alpha[p] = pos[alpha[v]]

    def holder(l: int, e: int) -> int:
        a, b = G.edges[e]
        return a if a in kset[l] else b

    old_edges = list(pair_id)
    for l in old_leaves:
        for e, (a, b) in enumerate(old_edges):
            if l not in (a, b):
                continue
            fa, fb = alpha[a], alpha[b]
            image = pair_id[(fa, fb) if fa < fb else (fb, fa)]
            new_alpha[holder(l, e)] = holder(alpha[l], image)
    return G, T, new_alpha


def assemble(H: HistGraph, R: RotationGraph) -> tuple[RotationGraph, ReductionScript]:
    r = H.r
    _check_r(r)
    if R.base.r != r:
        raise InvalidArgument("H and R have different r")
    if R.base.depth != H.depth:
        raise InvalidArgument(f"depth mismatch: H has {H.depth}, R has {R.base.depth}")
    x = H.tree.root
    ys = sorted(H.graph.adjacency[x])
    if len(ys) != r or H.tree.tree_degree(x) != r:
        raise InvalidArgument("root of H must have r distinct neighbours")
    RG, alpha_r, xr = R.base.graph, R.rotation, R.base.tree.root
    zs = [min(RG.adjacency[xr])]
    for _ in range(r - 1):
        zs.append(alpha_r(zs[-1]))
    if len(set(zs)) != r or alpha_r(zs[-1]) != zs[0]:
        raise InvalidArgument("rotation of R does not cycle the root's neighbours")

    hub = build_t_i_r(r, 2)
    hub_size = hub.host.n
    n_r_copies = (r - 1) ** 2 - r
    h_size, r_size = H.graph.n - 1, RG.n - 1
    h_offsets = tuple(hub_size + i * h_size for i in range(r))
    r_start = hub_size + r * h_size
    r_offsets = tuple(r_start + j * r_size for j in range(n_r_copies))
    n_total = r_start + n_r_copies * r_size

    def hv(i, v):
        return h_offsets[i] + (v if v < x else v - 1)

    def rv(j, v):
        return r_offsets[j] + (v if v < xr else v - 1)

    def hub_rotate(v):
        if v == 0:
            return 0
        if v <= r:
            return v % r + 1
        c, j = divmod(v - r - 1, r - 1)
        return r + 1 + ((c + 1) % r) * (r - 1) + j

    edges = list(hub.host.edges)
    tree = set(range(len(edges)))
    for i in range(r):
        for e, (a, b) in enumerate(H.graph.edges):
            if x in (a, b):
                continue
            if e in H.tree.tree_edges:
                tree.add(len(edges))
            edges.append((hv(i, a), hv(i, b)))
    for j in range(n_r_copies):
        for e, (a, b) in enumerate(RG.edges):
            if xr in (a, b):
                continue
            if e in R.base.tree.tree_edges:
                tree.add(len(edges))
            edges.append((rv(j, a), rv(j, b)))

    n_lists = []
    l_lists = []
    new_edges = []
    for i in range(r):
        N = [hv(i, y) for y in ys] + [rv(j, zs[i]) for j in range(n_r_copies)]
        L = [r + 1 + i * (r - 1) + j for j in range(r - 1)]
        n_lists.append(tuple(N))
        l_lists.append(tuple(L))
        for k, leaf in enumerate(L):
            for t in N[k * (r - 1) : (k + 1) * (r - 1)]:
                new_edges.append(len(edges))
                tree.add(len(edges))
                edges.append((t, leaf))

    alpha = list(range(n_total))
    for v in range(hub_size):
        alpha[v] = hub_rotate(v)
    for i in range(r):
        for v in range(H.graph.n):
            if v != x:
                alpha[hv(i, v)] = hv((i + 1) % r, v)
    for j in range(n_r_copies):
        for v in range(RG.n):
            if v != xr:
                alpha[rv(j, v)] = rv(j, alpha_r(v))

    Gp = MultiGraph(n_total, tuple(edges))
    Tp = RootedSpanningTree(Gp, frozenset(tree), 0)
    plan = AssemblyPlan(
        r=r,
        hub_size=hub_size,
        h_root=x,
        h_size=h_size,
        h_offsets=h_offsets,
        r_root=xr,
        r_size=r_size,
        r_offsets=r_offsets,
        n_lists=tuple(n_lists),
        l_lists=tuple(l_lists),
        new_edges=tuple(new_edges),
    )
    keep = {l_lists[0][0]} | set(range(h_offsets[0], h_offsets[0] + h_size))
    script = ReductionScript((frozenset(range(n_total)) - keep,))
    rotation = RotationGraph(HistGraph(Gp, Tp, r, H.depth + 2), VertexPermutation(tuple(alpha)), plan)
    return rotation, script


def transport_script(G: MultiGraph, script: ReductionScript, phi: list[int], target: MultiGraph) -> ReductionScript:
    """Rewrite a script for ``G`` as one for ``target``, where ``phi`` is an
    isomorphism ``G -> target``."""
    steps = []
    phi = list(phi)
    for S in script.steps:
        image = frozenset(phi[v] for v in S)
        steps.append(image)
        red_a, red_b = reduce_cut(G, S), reduce_cut(target, image)
        nxt = [0] * red_a.graph.n
        for v, p in enumerate(red_a.vertex_map):
            if p >= 0:
                nxt[p] = red_b.vertex_map[phi[v]]
        G, target, phi = red_a.graph, red_b.graph, nxt
    return ReductionScript(tuple(steps))


def construct(G: MultiGraph, r: int) -> tuple[RotationGraph, ReductionScript]:
    """Simple rotation r-graph G' with a script of 2-cut reductions back to G."""
    H, back_to_g = step1_expand(G, r)
    R = base_rotation_graph(r, H.depth)
    Gp, to_h = assemble(H, R)
    plan = Gp.plan
    red = reduce_cut(Gp.graph, to_h.steps[0])
    phi = [0] * H.graph.n
    for v in range(H.graph.n):
        src = plan.l_lists[0][0] if v == plan.h_root else plan.h_vertex(0, v)
        phi[v] = red.vertex_map[src]
    if not H.graph.relabel(phi).same_edges(red.graph):
        raise AssertionError("reducing the assembly did not give back H")
    return Gp, to_h + transport_script(H.graph, back_to_g, phi, red.graph)


def bipartite_contraction(Gp: RotationGraph) -> MultiGraph:
    """Contract every copy of H and R (minus its root) to a single vertex."""
    plan = Gp.plan
    if plan is None:
        raise InvalidArgument("graph carries no assembly annotations")
    block_of = list(range(plan.hub_size)) + [0] * (Gp.graph.n - plan.hub_size)
    for k, block in enumerate(plan.blocks()):
        for v in block:
            block_of[v] = plan.hub_size + k
    return quotient(Gp.graph, block_of, plan.hub_size + len(plan.blocks()))

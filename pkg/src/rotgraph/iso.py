"""Small multigraph isomorphism: colour refinement plus backtracking."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ResourceLimit
from .mgraph import MultiGraph
from .refine import balanced, refine, union

MAX_VERTICES = 64


@dataclass(frozen=True)
class IsoWitness:
    mapping: tuple[int, ...]  # vertex of A -> vertex of B

    def inverse(self) -> IsoWitness:
        inv = [0] * len(self.mapping)
        for a, b in enumerate(self.mapping):
            inv[b] = a
        return IsoWitness(tuple(inv))


def _adjacency(G: MultiGraph):
    return [list(a.items()) for a in G.adjacency]


def is_isomorphism(A: MultiGraph, B: MultiGraph, mapping) -> bool:
    if A.n != B.n or A.m != B.m or sorted(mapping) != list(range(B.n)):
        return False
    return A.relabel(mapping).same_edges(B)


def are_isomorphic(A: MultiGraph, B: MultiGraph) -> IsoWitness | None:
    if max(A.n, B.n) > MAX_VERTICES:
        raise ResourceLimit(f"isomorphism search is capped at n={MAX_VERTICES}")
    if A.n != B.n or A.m != B.m:
        return None
    n = A.n
    if n == 0:
        return IsoWitness(())
    adj = union(_adjacency(A), _adjacency(B))
    colors = refine(adj, [0] * (2 * n))

    def search(colors):
        if not balanced(colors, n):
            return None
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        open_cells = [c for c, vs in cells.items() if len(vs) > 2]
        if not open_cells:
            mapping = [0] * n
            for vs in cells.values():
                mapping[vs[0]] = vs[1] - n
            return mapping if is_isomorphism(A, B, mapping) else None
        c = min(open_cells, key=lambda c: (len(cells[c]), c))
        v = cells[c][0]
        top = max(colors) + 1
        for w in (u for u in cells[c] if u >= n):
            trial = list(colors)
            trial[v] = trial[w] = top
            found = search(refine(adj, trial))
            if found is not None:
                return found
        return None

    found = search(colors)
    return IsoWitness(tuple(found)) if found is not None else None

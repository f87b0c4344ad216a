"""Colour refinement on edge-labelled graphs, used by the isomorphism and
rotation searches.

A graph here is a list ``adj`` where ``adj[v]`` is a list of
``(neighbour, label)`` pairs, one per distinct neighbour.  Labels encode
multiplicities (and tree membership where that matters).
"""
from __future__ import annotations

Adjacency = list[list[tuple[int, object]]]


def refine(adj: Adjacency, colors: list[int]) -> list[int]:
    """Coarsest equitable refinement of ``colors``.

    Colour ids are canonical: they depend only on the isomorphism type of
    the coloured graph, so two graphs refined together in one disjoint
    union get comparable colours.
    """
    n = len(adj)
    current = list(colors)
    classes = len(set(current))
    while True:
        sigs = [
            (current[v], tuple(sorted((current[u], lab) for u, lab in adj[v])))
            for v in range(n)
        ]
        index = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [index[s] for s in sigs]
        if len(index) == classes:
            return new
        current = new
        classes = len(index)


def union(adj_a: Adjacency, adj_b: Adjacency) -> Adjacency:
    shift = len(adj_a)
    return [list(x) for x in adj_a] + [[(u + shift, lab) for u, lab in x] for x in adj_b]


def balanced(colors: list[int], split: int) -> bool:
    """Do both halves of a union carry the same colour histogram?"""
    left: dict[int, int] = {}
    for c in colors[:split]:
        left[c] = left.get(c, 0) + 1
    right: dict[int, int] = {}
    for c in colors[split:]:
        right[c] = right.get(c, 0) + 1
    return left == right

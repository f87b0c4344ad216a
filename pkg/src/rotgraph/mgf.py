"""The ``mgf`` text format.

::

    mgf 1
    <n> <m>
    <u> <v>            # m edge lines, EdgeId = line order
    tree <root> <t>    # optional, then t edge indices
    perm <n>           # optional, then n images
    script <s>         # optional, then s lines "reduce <k> <v1> ... <vk>"

``#`` starts a comment.  Index lists may wrap over several lines.  The
canonical writer sorts edges by endpoints, puts each index list on one
line and emits sections in the order above.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphError
from .mgraph import MultiGraph, RootedSpanningTree
from .shape import VertexPermutation
from .surgery import ReductionScript


class ParseError(GraphError, ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class MgfDocument:
    graph: MultiGraph
    tree: RootedSpanningTree | None = None
    perm: VertexPermutation | None = None
    script: ReductionScript | None = None


class _Lines:
    def __init__(self, text: str):
        self.rows = []
        for no, raw in enumerate(text.splitlines(), start=1):
            body = raw.split("#", 1)[0].split()
            if body:
                self.rows.append((no, body))
        self.i = 0

    def done(self) -> bool:
        return self.i >= len(self.rows)

    @property
    def lineno(self) -> int:
        if self.done():
            return self.rows[-1][0] if self.rows else 0
        return self.rows[self.i][0]

    def next(self, what: str) -> list[str]:
        if self.done():
            raise ParseError(self.lineno, f"unexpected end of document, expected {what}")
        row = self.rows[self.i][1]
        self.i += 1
        return row

    def ints(self, count: int, what: str) -> list[int]:
        out: list[int] = []
        while len(out) < count:
            line = self.lineno
            out.extend(_int(t, line) for t in self.next(what))
        if len(out) != count:
            raise ParseError(self.lineno, f"expected {count} {what}, got {len(out)}")
        return out


def _int(token: str, line: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(line, f"not an integer: {token!r}") from None
    if value < 0:
        raise ParseError(line, f"negative value {value}")
    return value


def read_mgf(text: str) -> MgfDocument:
    src = _Lines(text)
    line = src.lineno
    if src.next("header") != ["mgf", "1"]:
        raise ParseError(line, "expected header 'mgf 1'")
    line = src.lineno
    counts = src.next("vertex and edge counts")
    if len(counts) != 2:
        raise ParseError(line, "expected '<n> <m>'")
    n, m = (_int(t, line) for t in counts)
    edges = []
    for _ in range(m):
        line = src.lineno
        row = src.next("edge line")
        if len(row) != 2:
            raise ParseError(line, "expected '<u> <v>'")
        u, v = (_int(t, line) for t in row)
        if u == v:
            raise ParseError(line, f"loop at vertex {u}")
        if u >= n or v >= n:
            raise ParseError(line, f"vertex id out of range for n={n}")
        edges.append((u, v))
    graph = MultiGraph(n, tuple(edges))
    tree = perm = script = None
    while not src.done():
        line = src.lineno
        head = src.next("section")
        kind = head[0]
        if kind == "tree" and len(head) == 3 and tree is None:
            root, t = (_int(x, line) for x in head[1:])
            idx = src.ints(t, "tree edge indices")
            try:
                tree = RootedSpanningTree(graph, frozenset(idx), root)
            except GraphError as exc:
                raise ParseError(line, f"bad tree section: {exc}") from None
            if len(set(idx)) != len(idx):
                raise ParseError(line, "repeated tree edge index")
        elif kind == "perm" and len(head) == 2 and perm is None:
            size = _int(head[1], line)
            if size != n:
                raise ParseError(line, f"permutation of size {size} for {n} vertices")
            try:
                perm = VertexPermutation(tuple(src.ints(size, "permutation images")))
            except GraphError as exc:
                raise ParseError(line, str(exc)) from None
        elif kind == "script" and len(head) == 2 and script is None:
            steps = []
            for _ in range(_int(head[1], line)):
                line = src.lineno
                row = src.next("reduce line")
                if row[0] != "reduce" or len(row) < 2:
                    raise ParseError(line, "expected 'reduce <k> <v1> ... <vk>'")
                k = _int(row[1], line)
                verts = [_int(t, line) for t in row[2:]]
                if len(verts) != k:
                    raise ParseError(line, f"reduce line announces {k} vertices, lists {len(verts)}")
                steps.append(frozenset(verts))
            script = ReductionScript(tuple(steps))
        else:
            raise ParseError(line, f"unexpected section {' '.join(head)!r}")
    return MgfDocument(graph, tree, perm, script)


def write_mgf(doc: MgfDocument) -> str:
    G = doc.graph
    order = sorted(range(G.m), key=lambda e: G.edges[e])
    new_id = {e: i for i, e in enumerate(order)}
    out = ["mgf 1", f"{G.n} {G.m}"]
    out += [f"{G.edges[e][0]} {G.edges[e][1]}" for e in order]
    if doc.tree is not None:
        idx = sorted(new_id[e] for e in doc.tree.tree_edges)
        out.append(f"tree {doc.tree.root} {len(idx)}")
        if idx:
            out.append(" ".join(map(str, idx)))
    if doc.perm is not None:
        out.append(f"perm {len(doc.perm)}")
        if len(doc.perm):
            out.append(" ".join(map(str, doc.perm.images)))
    if doc.script is not None:
        out.append(f"script {len(doc.script)}")
        for S in doc.script.steps:
            out.append(" ".join(["reduce", str(len(S))] + [str(v) for v in sorted(S)]))
    return "\n".join(out) + "\n"


def canonical_edge_order(G: MultiGraph) -> list[int]:
    """EdgeIds in the order the canonical writer emits them."""
    return sorted(range(G.m), key=lambda e: G.edges[e])

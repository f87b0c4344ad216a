"""Command-line entry point.

Exit codes: 0 when the property holds or the command succeeded, 1 when it
fails or no witness exists, 2 for usage and input errors.  Results go to
stdout in mgf section syntax; diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import sys

from .build import base_rotation_graph, construct
from .certify import is_r_graph, min_odd_cut
from .conjecture import chromatic_index_at_most, find_pm_cover, is_snark, nowhere_zero_flow
from .errors import GraphError
from .iso import are_isomorphic
from .mgf import MgfDocument, read_mgf, write_mgf
from .mgraph import bridges, is_connected
from .shape import build_t_i_r, is_automorphism, is_rotational, recognize_t_i_r
from .surgery import apply_script


class UsageError(Exception):
    pass


def _load(path: str) -> MgfDocument:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return read_mgf(text)


def _out(line: str = "") -> None:
    sys.stdout.write(line + "\n")


def _err(line: str) -> None:
    sys.stderr.write(line + "\n")


def cmd_verify(args) -> int:
    G = _load(args.file).graph
    ok = is_r_graph(G, args.r)
    if G.n and is_connected(G):
        cert = min_odd_cut(G)
        witness = sorted(cert.witness)
        _out(f"oddcut {cert.value} {len(witness)}")
        _out(" ".join(map(str, witness)))
    _err(f"{args.r}-graph: {'yes' if ok else 'no'}")
    return 0 if ok else 1


def cmd_construct(args) -> int:
    G = _load(args.file).graph
    Gp, script = construct(G, args.r)
    sys.stdout.write(write_mgf(MgfDocument(Gp.graph, Gp.tree, Gp.rotation, script)))
    _err(f"n={Gp.graph.n} depth={Gp.base.depth} steps={len(script)}")
    return 0


def cmd_reduce(args) -> int:
    doc = _load(args.file)
    if doc.script is None:
        raise UsageError("document has no script section")
    sys.stdout.write(write_mgf(MgfDocument(apply_script(doc.graph, doc.script))))
    return 0


def cmd_rotation_check(args) -> int:
    doc = _load(args.file)
    if doc.tree is None or doc.perm is None:
        raise UsageError("document needs tree and perm sections")
    shape = recognize_t_i_r(doc.tree)
    if shape is None:
        _err("tree is not a T_i^r")
        return 1
    if not is_automorphism(doc.graph, doc.perm):
        _err("perm is not an automorphism of the graph")
        return 1
    if not is_automorphism(doc.tree.as_graph(), doc.perm):
        _err("perm does not preserve the tree")
        return 1
    ok = is_rotational(doc.tree, doc.perm)
    _err(f"T_{shape.depth}^{shape.r} rotational: {'yes' if ok else 'no'}")
    return 0 if ok else 1


def cmd_cover(args) -> int:
    G = _load(args.file).graph
    r = args.r
    if args.mode == "fulkerson":
        found = find_pm_cover(G, 2 * r, "exactly-2")
    elif args.mode == "berge":
        found = find_pm_cover(G, 2 * r - 1, "at-least-1")
    else:
        if args.k is None:
            raise UsageError("--mode atmost-k needs --k")
        found = find_pm_cover(G, r, "at-most-k", args.k)
    if found is None:
        _err("no cover")
        return 1
    _out(f"matchings {len(found)}")
    for pm in found:
        edges = sorted(pm.edges)
        _out(" ".join(["pm", str(len(edges))] + [str(e) for e in edges]))
    return 0


def cmd_flow(args) -> int:
    G = _load(args.file).graph
    flow = nowhere_zero_flow(G, args.k)
    if flow is None:
        _err(f"no nowhere-zero {args.k}-flow")
        return 1
    _out(f"flow {G.m}")
    for (t, h), val in zip(flow.arcs, flow.values):
        _out(f"{t} {h} {val}")
    return 0


def cmd_snark(args) -> int:
    G = _load(args.file).graph
    ok = is_snark(G)
    if not ok and G.is_regular(3) and not bridges(G):
        coloring = chromatic_index_at_most(G, 3)
        if coloring is not None:
            _out(f"coloring {G.m}")
            _out(" ".join(map(str, coloring)))
    _err(f"snark: {'yes' if ok else 'no'}")
    return 0 if ok else 1


def cmd_gen(args) -> int:
    if args.kind == "tir":
        T = build_t_i_r(args.r, args.depth)
        doc = MgfDocument(T.host, T)
    else:
        R = base_rotation_graph(args.r, args.depth)
        doc = MgfDocument(R.graph, R.tree, R.rotation)
    sys.stdout.write(write_mgf(doc))
    return 0


def cmd_iso(args) -> int:
    A, B = _load(args.first).graph, _load(args.second).graph
    found = are_isomorphic(A, B)
    if found is None:
        _err("not isomorphic")
        return 1
    _out(f"iso {A.n}")
    _out(" ".join(map(str, found.mapping)))
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rotgraph", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("verify", help="decide the r-graph property")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("construct", help="blow up to a simple rotation r-graph")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("file")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("reduce", help="apply the embedded reduction script")
    s.add_argument("file")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("rotation-check", help="check the embedded permutation is rotational")
    s.add_argument("file")
    s.set_defaults(func=cmd_rotation_check)

    s = sub.add_parser("cover", help="search a perfect-matching cover")
    s.add_argument("--mode", choices=["fulkerson", "berge", "atmost-k"], required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--k", type=int)
    s.add_argument("file")
    s.set_defaults(func=cmd_cover)

    s = sub.add_parser("flow", help="search a nowhere-zero k-flow")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("file")
    s.set_defaults(func=cmd_flow)

    s = sub.add_parser("snark", help="bridgeless cubic and not 3-edge-colourable?")
    s.add_argument("file")
    s.set_defaults(func=cmd_snark)

    s = sub.add_parser("gen", help="emit a T_i^r tree or a base rotation graph")
    s.add_argument("--kind", choices=["tir", "base-rotation"], required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--depth", type=int, required=True)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("iso", help="isomorphism test between two documents")
    s.add_argument("first")
    s.add_argument("second")
    s.set_defaults(func=cmd_iso)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        _err(f"rotgraph: {exc}")
        return 2
    except GraphError as exc:
        _err(f"rotgraph: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())

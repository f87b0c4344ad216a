"""Rotation r-graphs: certification, surgery and the blow-up construction."""
from .build import (
    AssemblyPlan,
    HistGraph,
    RotationGraph,
    assemble,
    base_rotation_graph,
    bipartite_contraction,
    construct,
    step1_expand,
)
from .certify import OddCutCertificate, is_r_graph, min_odd_cut, rizzi_split
from .conjecture import (
    FlowAssignment,
    PerfectMatching,
    chromatic_index_at_most,
    enumerate_perfect_matchings,
    find_pm_cover,
    is_snark,
    nowhere_zero_flow,
    transfer_pm,
)
from .errors import (
    GraphError,
    InternalContradiction,
    InvalidArgument,
    NoSpanningTree,
    ResourceLimit,
    ScriptError,
)
from .iso import IsoWitness, are_isomorphic
from .mgf import MgfDocument, ParseError, read_mgf, write_mgf
from .mgraph import MultiGraph, RootedSpanningTree, spanning_tree
from .shape import (
    VertexPermutation,
    build_t_i_r,
    find_rotational_automorphism,
    is_automorphism,
    is_rotational,
    recognize_t_i_r,
    t_i_r_order,
)
from .surgery import ReductionScript, Surgery, apply_script, find_two_cuts, two_cut_reduction

__version__ = "0.1.0"

__all__ = [
    "AssemblyPlan",
    "FlowAssignment",
    "GraphError",
    "HistGraph",
    "InternalContradiction",
    "InvalidArgument",
    "IsoWitness",
    "MgfDocument",
    "MultiGraph",
    "NoSpanningTree",
    "OddCutCertificate",
    "ParseError",
    "PerfectMatching",
    "ReductionScript",
    "ResourceLimit",
    "RootedSpanningTree",
    "RotationGraph",
    "ScriptError",
    "Surgery",
    "VertexPermutation",
    "apply_script",
    "are_isomorphic",
    "assemble",
    "base_rotation_graph",
    "bipartite_contraction",
    "build_t_i_r",
    "chromatic_index_at_most",
    "construct",
    "enumerate_perfect_matchings",
    "find_pm_cover",
    "find_rotational_automorphism",
    "find_two_cuts",
    "is_automorphism",
    "is_r_graph",
    "is_rotational",
    "is_snark",
    "min_odd_cut",
    "nowhere_zero_flow",
    "read_mgf",
    "recognize_t_i_r",
    "rizzi_split",
    "spanning_tree",
    "step1_expand",
    "t_i_r_order",
    "transfer_pm",
    "two_cut_reduction",
    "write_mgf",
]

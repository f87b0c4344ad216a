"""Seed graphs shipped with the package as mgf files."""
from __future__ import annotations

from importlib import resources

from .mgf import read_mgf
from .mgraph import MultiGraph

# name -> r for which the graph is an r-graph (None for negative examples)
CORPUS = {
    "k4": 3,
    "k33": 3,
    "petersen": 3,
    "bundle3": 3,
    "k6": 5,
    "bundle5": 5,
    "bridged_cubic": None,
}


def corpus_text(name: str) -> str:
    if name not in CORPUS:
        raise KeyError(f"unknown corpus graph {name!r}")
    return resources.files(__package__).joinpath("corpus", f"{name}.mgf").read_text(encoding="utf-8")


def load(name: str) -> MultiGraph:
    return read_mgf(corpus_text(name)).graph

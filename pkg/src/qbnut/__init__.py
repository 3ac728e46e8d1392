"""Nut-graph classification and enumeration for quartic bicirculant graphs."""

from .classify import Verdict, classify
from .cyclo import nut_via_divisors, nut_via_finite_sets, residue_search, zero_multiplicity
from .graphs import BicirculantSpec, QuartGraph, build_graph, make_spec, normalize_spec, parse_spec
from .kernel import adjacency_matrix, kernel_basis, nut_oracle

__all__ = [
    "BicirculantSpec",
    "QuartGraph",
    "Verdict",
    "adjacency_matrix",
    "build_graph",
    "classify",
    "kernel_basis",
    "make_spec",
    "normalize_spec",
    "nut_oracle",
    "nut_via_divisors",
    "nut_via_finite_sets",
    "parse_spec",
    "residue_search",
    "zero_multiplicity",
]

__version__ = "0.1.0"

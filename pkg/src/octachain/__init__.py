"""Exact Kirchhoff index, Wiener index and spanning-tree counts for Mobius and
cylinder octagonal-quadrilateral chains."""

from .graphs import ChainGraph, Variant, VertexId, build_chain, canonical_edge_list, degree
from .invariants import (
    InvariantReport,
    complexity_closed,
    kirchhoff_closed,
    kirchhoff_cycle,
    kirchhoff_spectral,
    ratio,
    report,
    sum_reciprocal_ls,
    wiener_closed,
    wiener_index,
)
from .decomposition import BlockDecomposition, decompose, laplacian, spectrum_factorization_check
from .matrix import RationalMatrix
from .sequences import QuadFieldElement, det_ls, lucas, minor_sum, q_value

__version__ = "0.1.0"

__all__ = [
    "BlockDecomposition",
    "ChainGraph",
    "InvariantReport",
    "QuadFieldElement",
    "RationalMatrix",
    "Variant",
    "VertexId",
    "build_chain",
    "canonical_edge_list",
    "complexity_closed",
    "decompose",
    "degree",
    "det_ls",
    "kirchhoff_closed",
    "kirchhoff_cycle",
    "kirchhoff_spectral",
    "laplacian",
    "lucas",
    "minor_sum",
    "q_value",
    "ratio",
    "report",
    "spectrum_factorization_check",
    "sum_reciprocal_ls",
    "wiener_closed",
    "wiener_index",
]

"""Semigraphs: edges of two or more vertices, overlapping in at most one.

The package models semigraphs exactly (quarter-integer rational adjacency),
recognizes whether a matrix belongs to one, and analyzes spectra: eigenvalues,
exact characteristic polynomials, closed-form star families, and bounds on
the largest eigenvalue.
"""

from .core import (
    Edge,
    EdgeClass,
    EdgeCounts,
    Semigraph,
    VertexClass,
    build_semigraph,
    canonical_edge,
    random_semigraph,
    star_type1,
    star_type2,
)
from .errors import (
    AsymmetricInput,
    DuplicateEdge,
    DuplicateVertexInEdge,
    EdgeNotInGraph,
    EdgeTooShort,
    EmptyEdgeSet,
    IllegalEntry,
    IndexOutOfRange,
    InvalidFamily,
    NoConvergence,
    NonzeroDiagonal,
    PairInTwoEdges,
    ParseError,
    SemigraphError,
    VertexOutOfRange,
)
from .formats import emit_qmat, emit_smg, parse_qmat, parse_smg
from .matrix import (
    DegreeSplit,
    IdentityReport,
    SymMatrix,
    adjacency,
    degree,
    edge_submatrix,
    excess,
    is_quarter_unit,
    skeleton_adjacency,
    sum_identities,
)
from .recognition import (
    Accepted,
    Rejected,
    RejectionReason,
    detect_classes,
    is_semigraphical,
    reconstruct,
)
from .report import write_report
from .spectra import (
    BoundsReport,
    RationalPoly,
    Spectrum,
    StarFamily,
    bounds,
    char_poly,
    eigenvalues,
    spectrum,
    star1_charpoly,
    star2_charpoly,
    star_semigraph,
    star_spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "Accepted",
    "AsymmetricInput",
    "BoundsReport",
    "DegreeSplit",
    "DuplicateEdge",
    "DuplicateVertexInEdge",
    "Edge",
    "EdgeClass",
    "EdgeCounts",
    "EdgeNotInGraph",
    "EdgeTooShort",
    "EmptyEdgeSet",
    "IdentityReport",
    "IllegalEntry",
    "IndexOutOfRange",
    "InvalidFamily",
    "NoConvergence",
    "NonzeroDiagonal",
    "PairInTwoEdges",
    "ParseError",
    "RationalPoly",
    "Rejected",
    "RejectionReason",
    "Semigraph",
    "SemigraphError",
    "Spectrum",
    "StarFamily",
    "SymMatrix",
    "VertexClass",
    "VertexOutOfRange",
    "adjacency",
    "bounds",
    "build_semigraph",
    "canonical_edge",
    "char_poly",
    "degree",
    "detect_classes",
    "edge_submatrix",
    "eigenvalues",
    "emit_qmat",
    "emit_smg",
    "excess",
    "is_quarter_unit",
    "is_semigraphical",
    "parse_qmat",
    "parse_smg",
    "random_semigraph",
    "reconstruct",
    "skeleton_adjacency",
    "spectrum",
    "star1_charpoly",
    "star2_charpoly",
    "star_semigraph",
    "star_spectrum",
    "star_type1",
    "star_type2",
    "sum_identities",
    "write_report",
]

"""Exact independence polynomials and the root-interval order on graphs."""

from ._version import __version__
from .canon import canonical_form, is_isomorphic
from .errors import (
    IndOrderError,
    InvalidFamilyParameters,
    LengthMismatch,
    NoRealRoot,
    NotAForest,
    NotAnEdge,
    NotATree,
    NotConvertible,
    NotStarlike,
    ParseError,
    PreconditionViolated,
    TooLarge,
    VertexOutOfRange,
    ZeroPolynomial,
)
from .families import (
    Complete,
    CompleteBipartite,
    Copies,
    Cycle,
    DisjointUnion,
    Gn,
    Hnk,
    Path,
    Spider,
    Star,
    Tnk,
    build,
    graph_from_arg,
    parse_family,
)
from .graph import Graph, components, degree_sequence, star_op
from .indpoly import brute_force_polynomial, independence_polynomial, independence_polynomial_tree
from .order import OrderVerdict, Verdict, compare, dominates
from .poly import IntPolynomial
from .roots import AlgebraicRoot, compare_roots, largest_real_root, sign_at_root, xi
from .sequences import ConversionStep, convert, dominance_compare, lex_compare
from .trees import all_starlike, all_trees

__all__ = [
    "AlgebraicRoot", "Complete", "CompleteBipartite", "ConversionStep", "Copies", "Cycle",
    "DisjointUnion", "Gn", "Graph", "Hnk", "IndOrderError", "IntPolynomial", "InvalidFamilyParameters",
    "LengthMismatch", "NoRealRoot", "NotAForest", "NotATree", "NotAnEdge", "NotConvertible",
    "NotStarlike", "OrderVerdict", "ParseError", "Path", "PreconditionViolated", "Spider", "Star",
    "Tnk", "TooLarge", "Verdict", "VertexOutOfRange", "ZeroPolynomial", "__version__", "all_starlike",
    "all_trees", "brute_force_polynomial", "build", "canonical_form", "compare", "compare_roots",
    "components", "convert", "degree_sequence", "dominance_compare", "dominates", "graph_from_arg",
    "independence_polynomial", "independence_polynomial_tree", "is_isomorphic", "largest_real_root",
    "lex_compare", "parse_family", "sign_at_root", "star_op", "xi",
]

"""Signed ribbon graphs, partial duality, and the Bollobas-Riordan and homfly state sums."""

from .arrows import ArrowPresentation, from_arrow_presentation, to_arrow_presentation
from .brpoly import br_polynomial, br_potts, tutte_oracle, verify_duality
from .duality import geometric_dual, partial_dual
from .errors import DomainError, EvaluationError, InputError, ParseError, RibbonError, StructuralError
from .formats import parse_ap, parse_rg, serialize_ap, serialize_rg
from .gen import GenParams, enumerate_graphs, named, random_graph, random_plane_graph, realize_polynomial
from .graph import Edge, GraphStats, RibbonGraph, boundary_count, is_orientable, spanning_subgraph, stats
from .homfly import homfly_resolution, homfly_state_sum, verify_link_duality, verify_transfer
from .iso import is_isomorphic
from .laurent import LaurentPoly, QuadValue, eval_quad, format_poly, parse_poly, substitute

__all__ = [
    "ArrowPresentation", "DomainError", "Edge", "EvaluationError", "GenParams", "GraphStats",
    "InputError", "LaurentPoly", "ParseError", "QuadValue", "RibbonError", "RibbonGraph",
    "StructuralError", "boundary_count", "br_polynomial", "br_potts", "enumerate_graphs",
    "eval_quad", "format_poly", "from_arrow_presentation", "geometric_dual", "homfly_resolution",
    "homfly_state_sum", "is_isomorphic", "is_orientable", "named", "parse_ap", "parse_poly",
    "parse_rg", "partial_dual", "random_graph", "random_plane_graph", "realize_polynomial",
    "serialize_ap", "serialize_rg", "spanning_subgraph", "stats", "substitute",
    "to_arrow_presentation", "tutte_oracle", "verify_duality", "verify_link_duality",
    "verify_transfer",
]

"""Homological shift ideals: linear quotients, Betti numbers, chordal graphs
and polymatroidal ideals."""
from .errors import DimensionError, InputError, ParseError, ResourceCapError
from .graphs import SimpleGraph, complement, edge_ideal, hs_edge_ideal, is_chordal, parse_graph
from .linquot import find_admissible_order, has_linear_quotients, hs_linquot, is_admissible, lex_admissible
from .monomial import MonomialIdeal, format_ideal, parse_ideal
from .polymatroid import hs_degree2, is_lq_all_lex_orders, is_polymatroidal
from .resolution import all_hs, has_linear_resolution, hs_betti, multigraded_betti

__all__ = [
    "DimensionError",
    "InputError",
    "MonomialIdeal",
    "ParseError",
    "ResourceCapError",
    "SimpleGraph",
    "all_hs",
    "complement",
    "edge_ideal",
    "find_admissible_order",
    "format_ideal",
    "has_linear_quotients",
    "has_linear_resolution",
    "hs_betti",
    "hs_degree2",
    "hs_edge_ideal",
    "hs_linquot",
    "is_admissible",
    "is_chordal",
    "is_lq_all_lex_orders",
    "is_polymatroidal",
    "lex_admissible",
    "multigraded_betti",
    "parse_graph",
    "parse_ideal",
]

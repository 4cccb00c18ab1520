"""Cover ideals of graphs, their symbolic powers, and Castelnuovo-Mumford regularity."""

from .betti import BettiTable, betti_numbers, betti_via_lcm_order_complex, regularity
from .graph import Graph
from .linalg import GF2, QQ, Field
from .monomial import MonomialIdeal, cover_ideal, minimalize, power, symbolic_power

__all__ = [
    "BettiTable",
    "Field",
    "GF2",
    "Graph",
    "MonomialIdeal",
    "QQ",
    "betti_numbers",
    "betti_via_lcm_order_complex",
    "cover_ideal",
    "minimalize",
    "power",
    "regularity",
    "symbolic_power",
]

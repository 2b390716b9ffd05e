"""Acyclic quasigraphs with skeletal partitions in 3-hypergraphs."""

from .errors import CapacityError, ContractError, DomainError, ParseError
from .hypergraph import Edge, Hypergraph, Partition
from .quasigraph import Quasigraph, find_quasicycle
from .connectivity import anticomponents_on, components_on
from .sequence import build_plane_sequence, compare
from .engine import improve_step, is_skeletal, solve
from .badleaf import bad_leaves, solve_no_bad, switch

__all__ = [
    "CapacityError", "ContractError", "DomainError", "ParseError",
    "Edge", "Hypergraph", "Partition", "Quasigraph", "find_quasicycle",
    "anticomponents_on", "components_on", "build_plane_sequence", "compare",
    "improve_step", "is_skeletal", "solve", "bad_leaves", "solve_no_bad", "switch",
]

"""Exact solver and verifier for leaky zero forcing on graphs."""

from .families import (
    complete_bipartite,
    cycle,
    generalized_petersen,
    half_cube_set,
    hypercube,
    path,
    random_tree,
    wheel,
)
from .forcing import (
    ForcingTrace,
    LeakCertificate,
    LeakCheck,
    closure,
    is_leaky_forcing_set,
    is_zero_forcing_set,
    mandatory_vertices,
)
from .graph import Graph, complement_set, degree, members, parse_edge_list, vset
from .solver import (
    BudgetExceeded,
    containment_question,
    enumerate_minimum_sets,
    min_leaky_forcing,
    nested_chain,
)

__all__ = [
    "BudgetExceeded",
    "ForcingTrace",
    "Graph",
    "LeakCertificate",
    "LeakCheck",
    "closure",
    "complement_set",
    "complete_bipartite",
    "containment_question",
    "cycle",
    "degree",
    "enumerate_minimum_sets",
    "generalized_petersen",
    "half_cube_set",
    "hypercube",
    "is_leaky_forcing_set",
    "is_zero_forcing_set",
    "mandatory_vertices",
    "members",
    "min_leaky_forcing",
    "nested_chain",
    "parse_edge_list",
    "path",
    "random_tree",
    "vset",
    "wheel",
]

"""Demand edge coloring of multigraphs and supermodular coloring of set
families, with hypothesis checkers and brute-force oracles.

The package is organized around three solvers sharing one augmentation
idiom (extend a partial coloring one item at a time, recoloring along fans
and two-color chains when blocked):

* :mod:`supercolor.demand` -- per-vertex demand edge coloring; wrappers
  recover the classical proper-coloring bound and the stable-set guarantee.
* :mod:`supercolor.orientation` -- edge-orientation pipeline meeting the
  two degree-case guarantees for any palette size.
* :mod:`supercolor.supermodular` -- element coloring of explicit set
  families under triple-wise closure hypotheses.

:mod:`supercolor.families` holds the set-system checkers,
:mod:`supercolor.oracle` the exhaustive oracles and seeded generators, and
:mod:`supercolor.cli` a batch front door over shared JSON formats.
"""

from .demand import (DemandInstance, PartialEdgeColoring, gupta_stable_color,
                     is_proper, overloaded_vertices, vizing_bound, vizing_color)
from .errors import (BudgetExceeded, GenerationFailure, HypothesisViolation,
                     InternalAssertionError)
from .families import FamilyInstance, from_graph_stars
from .multigraph import EdgeSubgraph, Multigraph, induced_undirected_subgraph
from .orientation import OrientationState, gupta_general_color, orient_edges, verify_gupta
from .supermodular import PartialAssignment

__all__ = [
    "BudgetExceeded",
    "DemandInstance",
    "EdgeSubgraph",
    "FamilyInstance",
    "GenerationFailure",
    "HypothesisViolation",
    "InternalAssertionError",
    "Multigraph",
    "OrientationState",
    "PartialAssignment",
    "PartialEdgeColoring",
    "from_graph_stars",
    "gupta_general_color",
    "gupta_stable_color",
    "induced_undirected_subgraph",
    "is_proper",
    "orient_edges",
    "overloaded_vertices",
    "verify_gupta",
    "vizing_bound",
    "vizing_color",
]

__version__ = "0.1.0"

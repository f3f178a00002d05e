# --------------------------------------------------------------------------------------
# This code is part of graphck.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.
# --------------------------------------------------------------------------------------
"""
The `graph` module provides finite directed graphs with infinite-emitter flags, their paths and cycles, and the combinatorics of path sets used throughout the algebraic layer.

    - :mod:`graphck.graph.graph`, define the classes `Graph`, `Edge`, `Path` and `Cycle`, the JSON graph-file parser `parse_graph` and the error classes `GraphFormatError` and `GraphValidationError`.


    - :mod:`graphck.graph.paths`, define path enumeration (`paths_from`, `iter_paths`), extension edges, the Condition (L) checker, aperiodic tails and the Thue–Morse boundary witness `witness_prefix`.


    - :mod:`graphck.graph.exhaustive`, define the class `PathSet`, path comparability and the exhaustiveness decision with its witness.


The utility functions used in this module are defined in :mod:`graphck.graph.utils`.
"""

from .exhaustive import (
    ExhaustVerdict,
    PathSet,
    comparable,
    exhaustive_oracle,
    is_exhaustive,
)
from .graph import (
    Cycle,
    Edge,
    Graph,
    GraphFormatError,
    GraphValidationError,
    Path,
    load_graph,
    parse_graph,
)
from .paths import (
    ConditionLVerdict,
    Extensions,
    aperiodic_tail,
    check_condition_L,
    edge_path,
    extension_edges,
    is_aperiodic_tail,
    iter_paths,
    paths_from,
    paths_up_to,
    witness_prefix,
)
from .utils import thue_morse

__all__ = [
    "ConditionLVerdict",
    "Cycle",
    "Edge",
    "ExhaustVerdict",
    "Extensions",
    "Graph",
    "GraphFormatError",
    "GraphValidationError",
    "Path",
    "PathSet",
    "aperiodic_tail",
    "check_condition_L",
    "comparable",
    "edge_path",
    "exhaustive_oracle",
    "extension_edges",
    "is_aperiodic_tail",
    "is_exhaustive",
    "iter_paths",
    "load_graph",
    "parse_graph",
    "paths_from",
    "paths_up_to",
    "thue_morse",
    "witness_prefix",
]

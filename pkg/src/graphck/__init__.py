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
:mod:`graphck` is an open-source python package for exact symbolic and truncated numerical computation in Toeplitz-Cuntz-Krieger algebras of directed graphs.

Modules
----------------
:mod:`graphck.graph`
    The `graph` module provides directed graphs with infinite-emitter flags, paths, cycles, Condition (L) and exhaustive path sets.

:mod:`graphck.algebra`
    The `algebra` module provides exact scalars, path projections and their atoms, the symbolic span of :math:`t_\\mu t_\\nu^*` and the conditional expectation.

:mod:`graphck.representation`
    The `representation` module provides truncated matrix models of the boundary and Toeplitz families.

:mod:`graphck.verification`
    The `verification` module provides the seeded property suite and its replay.

"""

from .algebra import DiagElement, Scalar, TckElement
from .graph import Graph, Path, PathSet, load_graph, parse_graph
from .representation import Family, build_basis, op_norm, represent
from .verification import SuiteConfig, run_suite

__all__ = [
    "DiagElement",
    "Family",
    "Graph",
    "Path",
    "PathSet",
    "Scalar",
    "SuiteConfig",
    "TckElement",
    "build_basis",
    "load_graph",
    "op_norm",
    "parse_graph",
    "represent",
    "run_suite",
]

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
The `representation` module provides finite-matrix models of two concrete TCK families: the aperiodic boundary family and the path-space Toeplitz family.

    - :mod:`graphck.representation.basis`, define the enumeration `Family`, the class `TruncationBasis` and the boundary paths denoted by its labels.


    - :mod:`graphck.representation.operator`, define the class `OperatorMatrix`, the evaluation `represent` of symbolic elements, the operator norm and the numeric expectation.
"""

from .basis import (
    MAX_BASIS_SIZE,
    Family,
    TruncationBasis,
    boundary_points,
    build_basis,
    comparison_horizon,
)
from .operator import OperatorMatrix, expectation_numeric, op_norm, represent

__all__ = [
    "MAX_BASIS_SIZE",
    "Family",
    "OperatorMatrix",
    "TruncationBasis",
    "boundary_points",
    "build_basis",
    "comparison_horizon",
    "expectation_numeric",
    "op_norm",
    "represent",
]

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
The `algebra` module provides the exact symbolic layer: Gaussian-rational scalars, the commutative calculus of path projections, the span of :math:`t_\\mu t_\\nu^*` in the Toeplitz algebra of a graph, and the conditional expectation.

    - :mod:`graphck.algebra.scalar`, define the class `Scalar` of exact Gaussian rationals.


    - :mod:`graphck.algebra.diagonal`, define the class `DiagElement` of finite combinations of path projections, their boolean-representation product, the orthogonalization into atoms :math:`q^F_\\mu` and the exact diagonal norms.


    - :mod:`graphck.algebra.tck`, define the classes `TckTerm` and `TckElement`, their product and adjoint, the conditional expectation and the cycle-lemma certificate.


    - :mod:`graphck.algebra.expectation`, define the projections :math:`\\phi^F_\\lambda` and the check of their compression identity.
"""

from .diagonal import (
    Atom,
    AtomDecomposition,
    AtomValue,
    DiagElement,
    atom,
    atom_nonzero_ap,
    atom_values,
    atom_witness_ap,
    ck4_product,
    diag_norm_ap,
    diag_norm_free,
    diag_product,
    orthogonalize,
)
from .expectation import (
    CompressionReport,
    TripleRecord,
    TripleStatus,
    compression_identity_check,
    default_bound,
    phi_F,
)
from .scalar import ONE, ZERO, Scalar
from .tck import (
    CycleLemmaResult,
    TckElement,
    TckTerm,
    ck_element,
    cycle_lemma_check,
    expectation,
    tck_adjoint,
    tck_product,
    term_product,
)

__all__ = [
    "ONE",
    "ZERO",
    "Atom",
    "AtomDecomposition",
    "AtomValue",
    "CompressionReport",
    "CycleLemmaResult",
    "DiagElement",
    "Scalar",
    "TckElement",
    "TckTerm",
    "TripleRecord",
    "TripleStatus",
    "atom",
    "atom_nonzero_ap",
    "atom_values",
    "atom_witness_ap",
    "ck4_product",
    "ck_element",
    "compression_identity_check",
    "cycle_lemma_check",
    "default_bound",
    "diag_norm_ap",
    "diag_norm_free",
    "diag_product",
    "expectation",
    "orthogonalize",
    "phi_F",
    "tck_adjoint",
    "tck_product",
    "term_product",
]

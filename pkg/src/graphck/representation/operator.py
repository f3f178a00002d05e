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
"""Matrices of symbolic elements in the truncated models, their norms and the numeric expectation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from ..algebra import TckElement
from ..graph import Graph, Path
from .basis import Family, TruncationBasis, boundary_points, comparison_horizon


@dataclass(frozen=True)
class OperatorMatrix:
    """Dense compression of an operator to the span of a truncation basis.

    Attributes:
        - basis (TruncationBasis): Row and column basis.
        - entries (np.ndarray): Square complex array of size ``len(basis)``.

    """

    basis: TruncationBasis
    entries: np.ndarray

    def __post_init__(self):
        n = len(self.basis)
        if self.entries.shape != (n, n):
            raise ValueError(
                f"Matrix of shape {self.entries.shape} does not match a basis of size {n}"
            )

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self, tol: float = 1e-10) -> bool:
        """True when every entry has modulus at most ``tol``."""
        return self.dim == 0 or float(np.max(np.abs(self.entries))) <= tol

    def adjoint(self) -> OperatorMatrix:
        return OperatorMatrix(self.basis, self.entries.conj().T)

    def __matmul__(self, other: OperatorMatrix) -> OperatorMatrix:
        if other.basis != self.basis:
            raise ValueError("Matrices act on different truncation bases")
        return OperatorMatrix(self.basis, self.entries @ other.entries)

    def __sub__(self, other: OperatorMatrix) -> OperatorMatrix:
        if other.basis != self.basis:
            raise ValueError("Matrices act on different truncation bases")
        return OperatorMatrix(self.basis, self.entries - other.entries)


def _point_key(graph: Graph, point: Path, horizon: int) -> tuple:
    if graph.is_terminal(point.source) or graph.is_infinite_emitter(point.source):
        return (True, point.range, point.edges)
    if len(point) < horizon:
        raise ValueError(f"Boundary path {point} is shorter than the horizon {horizon}")
    return (False, point.range, point.edges[:horizon])


def _represent_toeplitz(x: TckElement, basis: TruncationBasis) -> np.ndarray:
    index = basis.index()
    entries = np.zeros((len(basis), len(basis)), dtype=complex)
    for term, coeff in x.terms.items():
        value = complex(coeff)
        for col, beta in enumerate(basis.labels):
            if not term.nu.is_prefix_of(beta):
                continue
            target = term.mu.concat(beta.residual(term.nu))
            row = index.get(target)
            if row is not None:
                entries[row, col] += value
    return entries


def _represent_boundary(
    graph: Graph, x: TckElement, basis: TruncationBasis
) -> np.ndarray:
    term_length = x.max_length
    horizon = comparison_horizon(graph, basis.depth, term_length)
    points = boundary_points(graph, basis, horizon + term_length)
    rows = {_point_key(graph, p, horizon): i for i, p in enumerate(points)}
    entries = np.zeros((len(basis), len(basis)), dtype=complex)
    for term, coeff in x.terms.items():
        value = complex(coeff)
        for col, point in enumerate(points):
            if not term.nu.is_prefix_of(point):
                continue
            image = term.mu.concat(point.residual(term.nu))
            row = rows.get(_point_key(graph, image, horizon))
            if row is not None:
                entries[row, col] += value
    return entries


def represent(graph: Graph, x: TckElement, basis: TruncationBasis) -> OperatorMatrix:
    r"""Compress the image of ``x`` in a concrete TCK family to ``basis``.

    In the Toeplitz model :math:`t_\mu t_\nu^* \xi_\beta = \xi_{\mu\beta'}` when
    :math:`\beta = \nu\beta'` and :math:`|\mu\beta'| \leq D`, and 0 otherwise.
    In the boundary model the entry at labels :math:`(\alpha, \beta)` is the
    sum of the coefficients of the terms :math:`(\mu, \nu)` with
    :math:`x(\alpha) = \mu y` and :math:`x(\beta) = \nu y` for a common
    :math:`y`, decided on a finite comparison horizon.

    Parameters:
        graph (Graph): Ambient graph.
        x (TckElement): Element of the symbolic span.
        basis (TruncationBasis): Basis of the compression.

    Returns:
        OperatorMatrix: The compressed matrix.

    Raises:
        ValueError: If a term path is longer than the basis depth.

    """
    if x.max_length > basis.depth:
        raise ValueError(
            f"Element has a path of length {x.max_length}, longer than depth {basis.depth}"
        )
    match basis.family:
        case Family.TOEPLITZ:
            entries = _represent_toeplitz(x, basis)
        case Family.BOUNDARY:
            entries = _represent_boundary(graph, x, basis)
    return OperatorMatrix(basis, entries)


def op_norm(matrix: OperatorMatrix) -> float:
    """Largest singular value, exact for diagonal matrices and 0 for an empty basis."""
    if matrix.dim == 0:
        return 0.0
    entries = matrix.entries
    diagonal = np.diag(entries)
    if np.array_equal(entries, np.diag(diagonal)):
        return float(np.max(np.abs(diagonal)))
    return float(scipy.linalg.svdvals(entries)[0])


def expectation_numeric(matrix: OperatorMatrix) -> OperatorMatrix:
    """Keep the diagonal matrix units, the compression of the numeric expectation."""
    return OperatorMatrix(matrix.basis, np.diag(np.diag(matrix.entries)))

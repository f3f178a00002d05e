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
"""Ordered bases of the truncated path-space and boundary-path models."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum

from ..graph import Graph, Path, check_condition_L, iter_paths, witness_prefix

MAX_BASIS_SIZE = 20_000


class Family(Enum):
    """Enumeration of the concrete TCK families with a truncated model."""

    BOUNDARY = "boundary"
    r"""Aperiodic boundary family :math:`(S^{ap}, P^{ap})` on :math:`\ell^2(\partial E^{ap})`."""

    TOEPLITZ = "toeplitz"
    """Path-space family acting on the Hilbert space with basis indexed by finite paths."""


@dataclass(frozen=True)
class TruncationBasis:
    r"""Ordered basis of a depth-:math:`D` compression.

    For the Toeplitz family the labels are all of :math:`E^{\leq D}`. For the
    boundary family a label :math:`\mu` stands for the boundary path
    :math:`x(\mu)`, a genuine element of :math:`\partial E^{ap}` extending
    :math:`\mu`; the labels are the paths of length :math:`D` together with the
    shorter paths ending at a terminal vertex or an infinite emitter.

    Attributes:
        - family (Family): Represented family.
        - depth (int): Truncation depth :math:`D`.
        - labels (tuple[Path, ...]): Basis labels, ordered by length, range
          vertex, then edge ids.
        - total (bool): For the boundary family, False when Condition (L)
          fails and labels without a finite boundary continuation were dropped.

    """

    family: Family
    depth: int
    labels: tuple[Path, ...]
    total: bool = True

    def __len__(self) -> int:
        return len(self.labels)

    def index(self) -> dict[Path, int]:
        """Map each label to its position."""
        return {label: i for i, label in enumerate(self.labels)}


def _ends_boundary(graph: Graph, path: Path) -> bool:
    return graph.is_terminal(path.source) or graph.is_infinite_emitter(path.source)


def _capped(labels: list[Path]):
    if len(labels) > MAX_BASIS_SIZE:
        raise ValueError(
            f"Basis size {len(labels)} exceeds the limit of {MAX_BASIS_SIZE} labels"
        )


def _toeplitz_labels(graph: Graph, depth: int) -> list[Path]:
    labels: list[Path] = []
    for n in range(depth + 1):
        for v in graph.vertices:
            for path in iter_paths(graph, v, n):
                labels.append(path)
                _capped(labels)
    return labels


def _boundary_labels(graph: Graph, depth: int) -> list[Path]:
    labels: list[Path] = []
    for n in range(depth + 1):
        for v in graph.vertices:
            for path in iter_paths(graph, v, n):
                if n == depth or _ends_boundary(graph, path):
                    labels.append(path)
                    _capped(labels)
    return labels


def build_basis(graph: Graph, family: Family, depth: int) -> TruncationBasis:
    """Build the ordered basis of the depth-``depth`` compression.

    Parameters:
        graph (Graph): Ambient graph.
        family (Family): Boundary or Toeplitz model.
        depth (int): Truncation depth, nonnegative.

    Returns:
        TruncationBasis: The deterministic ordered basis.

    Raises:
        ValueError: If ``depth`` is negative or the basis would exceed
            ``MAX_BASIS_SIZE`` labels.

    """
    if depth < 0:
        raise ValueError(f"depth must be nonnegative, got {depth}")
    match family:
        case Family.TOEPLITZ:
            return TruncationBasis(family, depth, tuple(_toeplitz_labels(graph, depth)))
        case Family.BOUNDARY:
            labels = _boundary_labels(graph, depth)
            verdict = check_condition_L(graph)
            if verdict.holds:
                return TruncationBasis(family, depth, tuple(labels))
            warnings.warn(
                f"Cycle {verdict.witness} has no entrance: vertex projections of the "
                "boundary family may vanish and only labels with a finite boundary "
                "continuation are kept."
            )
            kept = tuple(
                label
                for label in labels
                if _finite_continuation(graph, label.source) is not None
            )
            return TruncationBasis(family, depth, kept, total=False)
        case _:
            raise ValueError(f"Unknown family {family!r}")


def _finite_continuation(graph: Graph, v: str) -> Path | None:
    """Shortest path from ``v`` to a terminal vertex or an infinite emitter."""
    for n in range(len(graph.vertices)):
        for path in iter_paths(graph, v, n):
            if _ends_boundary(graph, path):
                return path
    return None


def comparison_horizon(graph: Graph, depth: int, term_length: int) -> int:
    """Number of edges on which infinite boundary paths are compared.

    Two distinct boundary paths built by :func:`boundary_points`, shifted by
    at most ``term_length`` edges, disagree within this horizon.
    """
    return (depth + term_length + 2) * (len(graph.vertices) + 2) + 4 * len(graph.edges) + 32


def boundary_points(graph: Graph, basis: TruncationBasis, length: int) -> list[Path]:
    r"""Boundary paths :math:`x(\mu)` of the basis labels, cut at ``length`` edges.

    :math:`x(\mu)` is :math:`x(\mu_{[0,|\mu|-1]})` when that path extends
    :math:`\mu`, and :math:`\mu` followed by the witness path at
    :math:`s(\mu)` otherwise, so that the points of a depth-:math:`D` basis
    are also points of the depth-:math:`(D+1)` basis. A returned path whose
    source is a terminal vertex or an infinite emitter is a complete finite
    boundary path; any other is the prefix of an infinite one.

    Raises:
        ValueError: If ``basis`` is not a boundary basis.

    """
    if basis.family is not Family.BOUNDARY:
        raise ValueError("Boundary points are only defined for the boundary family")
    cache: dict[Path, Path] = {}

    def continuation(v: str, remaining: int) -> Path:
        if basis.total:
            return witness_prefix(graph, v, remaining)
        tail = _finite_continuation(graph, v)
        if tail is None:
            raise ValueError(f"No finite boundary continuation at {v}")
        return tail

    def point(label: Path) -> Path:
        if label in cache:
            return cache[label]
        if len(label) == 0:
            result = continuation(label.range, length)
        else:
            parent = point(label.prefix(len(label) - 1))
            if label.is_prefix_of(parent):
                result = parent
            else:
                result = label.concat(continuation(label.source, length - len(label)))
        cache[label] = result
        return result

    return [point(label) for label in basis.labels]

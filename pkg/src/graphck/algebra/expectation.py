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
"""The projections :math:`\\phi^F_\\lambda` behind the conditional expectation and their compression identity."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from ..graph import (
    Graph,
    Path,
    PathSet,
    aperiodic_tail,
    check_condition_L,
    edge_path,
    is_exhaustive,
)
from .diagonal import DiagElement, atom
from .tck import TckElement, TckTerm

TOLERANCE = 1e-10


def _check_prefix_closed(graph: Graph, path_set: PathSet, lam: Path):
    if lam not in path_set:
        raise ValueError(f"{lam} is not a member of the path set")
    if not path_set.is_prefix_closed():
        raise ValueError("The path set must be closed under initial segments")
    verdict = check_condition_L(graph)
    if not verdict.holds:
        raise ValueError(
            f"Cycle {verdict.witness} has no entrance: phi_F requires Condition (L)"
        )


def default_bound(graph: Graph, path_set: PathSet) -> int:
    r"""Return :math:`\max\{|\kappa| : \kappa \in F,\ T^F_\kappa \text{ not exhaustive}\}`, 0 if none."""
    return max(
        (
            len(kappa)
            for kappa in path_set.members
            if not is_exhaustive(graph, path_set.tail_set(kappa)).exhaustive
        ),
        default=0,
    )


def phi_F(
    graph: Graph, lam: Path, path_set: PathSet, bound: int | None = None
) -> DiagElement:
    r"""Return the projection :math:`\phi^F_\lambda`.

    If :math:`T^F_\lambda` is not exhaustive, :math:`\phi^F_\lambda = p_{\lambda\alpha\tau}`
    where :math:`\alpha` is the lexicographically first witness of
    non-exhaustiveness and :math:`\tau` the aperiodic tail at :math:`s(\alpha)`.
    Otherwise :math:`\phi^F_\lambda = q^F_\lambda`.

    When :math:`\lambda\alpha\tau` ends at an infinite emitter, the explicit
    one-edge extensions are removed: :math:`\phi^F_\lambda = p_{\lambda\alpha\tau} -
    \sum_e p_{\lambda\alpha\tau e}`, the projection onto the finite boundary path
    :math:`\lambda\alpha\tau`. When only a phantom edge escapes :math:`T^F_\lambda`,
    :math:`\alpha` is the explicit path it is attached to and :math:`\tau` is empty.

    Parameters:
        graph (Graph): Ambient graph satisfying Condition (L).
        lam (Path): Member :math:`\lambda` of ``path_set``.
        path_set (PathSet): Finite set :math:`F` closed under initial segments.
        bound (int, optional): Length the tail must exceed. Defaults to
            :func:`default_bound`; callers may raise it.

    Returns:
        DiagElement: The projection :math:`\phi^F_\lambda`.

    Raises:
        ValueError: If ``lam`` is not in ``path_set``, ``path_set`` is not
            prefix-closed, or Condition (L) fails.

    """
    _check_prefix_closed(graph, path_set, lam)
    if bound is None:
        bound = default_bound(graph, path_set)
    verdict = is_exhaustive(graph, path_set.tail_set(lam))
    if verdict.exhaustive:
        return atom(path_set, lam)
    point = lam.concat(verdict.witness)
    if not verdict.through_phantom:
        point = point.concat(aperiodic_tail(graph, point.source, bound))
    phi = DiagElement.projection(point)
    if graph.is_infinite_emitter(point.source):
        for edge in graph.range_edges(point.source):
            phi = phi - DiagElement.projection(point.concat(edge_path(edge)))
    return phi


class TripleStatus(Enum):
    """Classification of one compression identity."""

    SYMBOLIC = "symbolically-verified"
    """The identity holds in the universal Toeplitz algebra."""

    NUMERIC = "verified-numerically"
    """The identity holds in the boundary compression at the recorded depth."""

    FAILED = "failed"
    """The identity fails in the boundary compression."""


@dataclass(frozen=True)
class TripleRecord:
    r"""Check of :math:`\phi^F_\lambda t_\mu t_\nu^* \phi^F_\lambda` against its expected value.

    Attributes:
        - lam, mu, nu (Path): The triple.
        - status (TripleStatus): Outcome.
        - depth (int | None): Boundary depth used by the numeric fallback.

    """

    lam: Path
    mu: Path
    nu: Path
    status: TripleStatus
    depth: int | None = None


@dataclass
class CompressionReport:
    """Records of :func:`compression_identity_check`, in iteration order."""

    records: list[TripleRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status is not TripleStatus.FAILED for r in self.records)

    def to_dict(self, graph: Graph) -> dict:
        return {
            "passed": self.passed,
            "triples": [
                {
                    "lambda": graph.format_path(r.lam),
                    "mu": graph.format_path(r.mu),
                    "nu": graph.format_path(r.nu),
                    "status": r.status.value,
                    **({"depth": r.depth} if r.depth is not None else {}),
                }
                for r in self.records
            ],
        }


def compression_identity_check(
    graph: Graph,
    path_set: PathSet,
    x: TckElement | None = None,
    bound: int | None = None,
    depth: int | None = None,
) -> CompressionReport:
    r"""Check :math:`\phi^F_\lambda t_\mu t_\nu^* \phi^F_\lambda` for :math:`\lambda, \mu, \nu \in F`.

    The product equals :math:`\phi^F_\lambda` when :math:`\mu = \nu` and
    :math:`\lambda = \mu\lambda'`, and 0 otherwise. Each triple is first
    reduced symbolically; when the symbolic difference is nonzero it is
    evaluated in the boundary representation, where the identity is expected
    to hold in the exhaustive branch.

    Parameters:
        graph (Graph): Ambient graph satisfying Condition (L).
        path_set (PathSet): Prefix-closed finite set :math:`F`.
        x (TckElement, optional): When given, the pairs :math:`(\mu, \nu)` are
            read from its support, which must lie in :math:`F \times F`.
            Otherwise every pair of members with a common source is checked.
        bound (int, optional): Passed to :func:`phi_F`.
        depth (int, optional): Boundary depth of the numeric fallback.
            Defaults to the longest path of the difference plus one.

    Returns:
        CompressionReport: One record per triple.

    Raises:
        ValueError: If ``x`` has a term outside :math:`F \times F`, or on the
            conditions of :func:`phi_F`.

    """
    from ..representation import Family, build_basis, represent

    members = path_set.sorted()
    if x is None:
        pairs = [TckTerm(mu, nu) for mu in members for nu in members if mu.source == nu.source]
    else:
        pairs = x.support()
        for term in pairs:
            if term.mu not in path_set or term.nu not in path_set:
                raise ValueError(f"Term {term} does not lie in F x F")

    report = CompressionReport()
    for lam in members:
        phi = TckElement.from_diagonal(phi_F(graph, lam, path_set, bound))
        for term in pairs:
            product = phi * TckElement.term(term.mu, term.nu) * phi
            expected = phi if term.mu == term.nu and term.mu.is_prefix_of(lam) else TckElement()
            difference = product - expected
            if difference.is_zero():
                report.records.append(
                    TripleRecord(lam, term.mu, term.nu, TripleStatus.SYMBOLIC)
                )
                continue
            used = depth if depth is not None else difference.max_length + 1
            basis = build_basis(graph, Family.BOUNDARY, used)
            status = (
                TripleStatus.NUMERIC
                if represent(graph, difference, basis).is_zero(TOLERANCE)
                else TripleStatus.FAILED
            )
            report.records.append(TripleRecord(lam, term.mu, term.nu, status, used))
    return report

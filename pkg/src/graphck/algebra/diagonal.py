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
"""Boolean-representation calculus of path projections :math:`p_\\lambda`."""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from ..graph import Graph, Path, PathSet, check_condition_L, is_exhaustive
from .scalar import ONE, Scalar


class DiagElement:
    r"""Finite linear combination :math:`\sum_{\lambda \in F} a_\lambda p_\lambda`.

    Elements are kept in canonical form: zero coefficients are dropped, so
    two elements are equal iff they have the same coefficient map.

    Attributes:
        - terms (dict[Path, Scalar]): Nonzero coefficients keyed by path.

    """

    def __init__(self, terms: Mapping[Path, Scalar | Fraction | int] | None = None):
        self.terms: dict[Path, Scalar] = {}
        for path, coeff in (terms or {}).items():
            self._accumulate(path, Scalar.coerce(coeff))

    def _accumulate(self, path: Path, coeff: Scalar):
        total = self.terms.get(path, Scalar()) + coeff
        if total:
            self.terms[path] = total
        else:
            self.terms.pop(path, None)

    @classmethod
    def projection(cls, path: Path) -> DiagElement:
        r"""The projection :math:`p_\lambda`."""
        return cls({path: ONE})

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Path, Scalar]]) -> DiagElement:
        """Sum of ``coeff * p_path`` over the pairs, repeated paths added up."""
        element = cls()
        for path, coeff in pairs:
            element._accumulate(path, Scalar.coerce(coeff))
        return element

    @classmethod
    def parse(cls, graph: Graph, text: str) -> DiagElement:
        """Parse the CLI term syntax ``"@v:2,e:-1"`` (path, colon, scalar)."""
        pairs = []
        for item in text.split(","):
            if not item.strip():
                continue
            path_text, sep, coeff_text = item.rpartition(":")
            if not sep:
                raise ValueError(f"Term {item!r} must read path:scalar")
            pairs.append((graph.parse_path(path_text), Scalar.parse(coeff_text)))
        return cls.from_pairs(pairs)

    def to_dict(self, graph: Graph) -> list[dict[str, str]]:
        """JSON-ready list of ``{"path", "re", "im"}`` records, in support order."""
        return [
            {
                "path": graph.format_path(path),
                "re": str(self.terms[path].re),
                "im": str(self.terms[path].im),
            }
            for path in self.support()
        ]

    def support(self) -> list[Path]:
        """Paths with nonzero coefficient, sorted by range, length, then edge ids."""
        return sorted(self.terms, key=lambda p: (p.range, len(p), p.edges))

    def coefficient(self, path: Path) -> Scalar:
        """Coefficient of :math:`p_\\lambda` (zero when absent)."""
        return self.terms.get(path, Scalar())

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiagElement):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: DiagElement) -> DiagElement:
        result = DiagElement(self.terms)
        for path, coeff in other.terms.items():
            result._accumulate(path, coeff)
        return result

    def __neg__(self) -> DiagElement:
        return DiagElement({path: -coeff for path, coeff in self.terms.items()})

    def __sub__(self, other: DiagElement) -> DiagElement:
        return self + (-other)

    def __mul__(self, other) -> DiagElement:
        if isinstance(other, DiagElement):
            return diag_product(self, other)
        if isinstance(other, Scalar | int | Fraction):
            factor = Scalar.coerce(other)
            return DiagElement({p: factor * c for p, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other) -> DiagElement:
        if isinstance(other, Scalar | int | Fraction):
            return self * other
        return NotImplemented

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({self.terms[p]})p[{p}]" for p in self.support())

    def __repr__(self) -> str:
        return f"DiagElement({self})"


def _project(mu: Path, nu: Path) -> Path | None:
    if mu.is_prefix_of(nu):
        return nu
    if nu.is_prefix_of(mu):
        return mu
    return None


def diag_product(a: DiagElement, b: DiagElement) -> DiagElement:
    r"""Product in a boolean representation.

    Bilinear extension of :math:`p_\mu p_\nu = p_\nu` if :math:`\nu = \mu\nu'`,
    :math:`p_\mu` if :math:`\mu = \nu\mu'`, and 0 otherwise.
    """
    pairs = []
    for mu, a_mu in a.terms.items():
        for nu, b_nu in b.terms.items():
            path = _project(mu, nu)
            if path is not None:
                pairs.append((path, a_mu * b_nu))
    return DiagElement.from_pairs(pairs)


def atom(path_set: PathSet, mu: Path) -> DiagElement:
    r"""Return :math:`q_\mu^F = p_\mu \prod_{\mu\mu' \in F \setminus \{\mu\}} (p_\mu - p_{\mu\mu'})`.

    Raises:
        ValueError: If ``mu`` is not a member of ``path_set``.

    """
    if mu not in path_set:
        raise ValueError(f"{mu} is not a member of the path set")
    p_mu = DiagElement.projection(mu)
    result = p_mu
    for member in path_set.sorted():
        if member != mu and mu.is_prefix_of(member):
            result = result * (p_mu - DiagElement.projection(member))
    return result


@dataclass(frozen=True)
class Atom:
    r"""One atom :math:`q_\alpha^F` of an orthogonalization.

    Attributes:
        - path (Path): The index :math:`\alpha \in F`.
        - element (DiagElement): Expansion of :math:`q_\alpha^F`.
        - nonzero_in_ap (bool): True when :math:`Q_\alpha^F \neq 0` in the
          aperiodic boundary representation.

    """

    path: Path
    element: DiagElement
    nonzero_in_ap: bool


@dataclass(frozen=True)
class AtomDecomposition:
    """Atoms :math:`q_\\alpha^F` of a finite path set, keyed by :math:`\\alpha`."""

    base_set: PathSet
    atoms: dict[Path, Atom]

    def __iter__(self):
        return (self.atoms[path] for path in self.base_set.sorted())


def _check_decomposition(path_set: PathSet, atoms: dict[Path, Atom]):
    for mu in path_set.members:
        total = DiagElement()
        for member in path_set.members:
            if mu.is_prefix_of(member):
                total = total + atoms[member].element
        if total != DiagElement.projection(mu):
            raise RuntimeError(
                f"Atoms below {mu} sum to {total} instead of p[{mu}]"
            )
    for alpha, atom_alpha in atoms.items():
        if atom_alpha.element * atom_alpha.element != atom_alpha.element:
            raise RuntimeError(f"Atom q[{alpha}] is not idempotent")
    for (alpha, a1), (beta, a2) in combinations(atoms.items(), 2):
        if not (a1.element * a2.element).is_zero():
            raise RuntimeError(f"Atoms q[{alpha}] and q[{beta}] are not orthogonal")


def orthogonalize(graph: Graph, path_set: PathSet) -> AtomDecomposition:
    r"""Expand the mutually orthogonal atoms :math:`q_\mu^F` of a finite path set.

    The decomposition is verified before it is returned: for every
    :math:`\mu \in F` the atoms :math:`q_{\mu\mu'}^F` with
    :math:`\mu\mu' \in F` add up to :math:`p_\mu`, every atom is idempotent
    and distinct atoms multiply to zero.

    Parameters:
        graph (Graph): Ambient graph, used to decide which atoms survive in
            the aperiodic boundary representation.
        path_set (PathSet): Nonempty finite set :math:`F`.

    Returns:
        AtomDecomposition: One atom per member of ``path_set``.

    Raises:
        ValueError: If ``path_set`` is empty.
        RuntimeError: If the expanded atoms fail the decomposition identities.

    """
    if not path_set.members:
        raise ValueError("Cannot orthogonalize an empty path set")
    atoms = {
        mu: Atom(mu, atom(path_set, mu), atom_nonzero_ap(graph, mu, path_set))
        for mu in path_set.sorted()
    }
    _check_decomposition(path_set, atoms)
    return AtomDecomposition(path_set, atoms)


def atom_nonzero_ap(graph: Graph, alpha: Path, path_set: PathSet) -> bool:
    r"""Decide whether :math:`Q_\alpha^F \neq 0` in the aperiodic boundary representation.

    The atom survives iff :math:`T_\alpha^F = \{\alpha' : \alpha\alpha' \in F, |\alpha'| > 0\}`
    is not exhaustive at :math:`s(\alpha)`.

    Raises:
        ValueError: If ``alpha`` is not a member of ``path_set``.

    """
    if alpha not in path_set:
        raise ValueError(f"{alpha} is not a member of the path set")
    return not is_exhaustive(graph, path_set.tail_set(alpha)).exhaustive


def atom_witness_ap(graph: Graph, alpha: Path, path_set: PathSet) -> Path | None:
    r"""Return a path :math:`\alpha\tau` lying under the atom :math:`q_\alpha^F`.

    :math:`\tau` is the witness of non-exhaustiveness of :math:`T_\alpha^F`,
    so that :math:`q_\alpha^F p_{\alpha\tau} = p_{\alpha\tau} \neq 0`. When
    only a phantom edge escapes :math:`T_\alpha^F`, :math:`\alpha\tau` ends at
    an infinite emitter and the identity holds on the boundary point
    :math:`\alpha\tau` itself rather than on :math:`p_{\alpha\tau}`.

    Returns:
        Path | None: :math:`\alpha\tau`, or None when the atom vanishes.

    Raises:
        ValueError: If ``alpha`` is not a member of ``path_set``.

    """
    if alpha not in path_set:
        raise ValueError(f"{alpha} is not a member of the path set")
    verdict = is_exhaustive(graph, path_set.tail_set(alpha))
    if verdict.exhaustive:
        return None
    return alpha.concat(verdict.witness)


@dataclass(frozen=True)
class AtomValue:
    r"""Value of a diagonal element on one atom.

    Attributes:
        - path (Path): Atom index :math:`\alpha`.
        - value (Scalar): :math:`\sum_{\mu \in F, \alpha = \mu\mu'} a_\mu`.
        - nonzero_in_ap (bool): Whether the atom survives in the aperiodic
          boundary representation.

    """

    path: Path
    value: Scalar
    nonzero_in_ap: bool


def atom_values(graph: Graph, element: DiagElement) -> list[AtomValue]:
    """Values of ``element`` on the atoms of its support.

    Paths with different ranges have orthogonal projections, so the support
    is split by range vertex and each part is orthogonalized separately.
    """
    by_range: dict[str, list[Path]] = {}
    for path in element.support():
        by_range.setdefault(path.range, []).append(path)
    values = []
    for base, paths in by_range.items():
        path_set = PathSet.of(base, paths)
        for alpha in path_set.sorted():
            value = sum(
                (element.terms[mu] for mu in paths if mu.is_prefix_of(alpha)),
                Scalar(),
            )
            values.append(
                AtomValue(alpha, value, atom_nonzero_ap(graph, alpha, path_set))
            )
    return values


def diag_norm_ap(graph: Graph, element: DiagElement) -> tuple[Fraction, float]:
    r"""Exact norm of :math:`\sum a_\lambda P^{ap}_\lambda` in the aperiodic boundary representation.

    The norm is the largest modulus of the prefix coefficient sums over the
    atoms of the support that do not vanish on the boundary.

    Parameters:
        graph (Graph): Ambient graph; every cycle must have an entrance.
        element (DiagElement): Finite combination of path projections.

    Returns:
        tuple[Fraction, float]: The squared norm, exact, and the norm.

    Raises:
        ValueError: If Condition (L) fails. Path projections may then vanish
            on the boundary and the abstract norm is needed instead.

    """
    verdict = check_condition_L(graph)
    if not verdict.holds:
        raise ValueError(
            f"Cycle {verdict.witness} has no entrance: the aperiodic diagonal norm "
            "requires Condition (L)"
        )
    norm2 = max(
        (v.value.abs2() for v in atom_values(graph, element) if v.nonzero_in_ap),
        default=Fraction(0),
    )
    return norm2, math.sqrt(norm2)


def diag_norm_free(graph: Graph, element: DiagElement) -> tuple[Fraction, float]:
    """Norm of a diagonal element in the universal boolean representation.

    Every atom of the support is nonzero there, so the norm is the largest
    modulus of the prefix coefficient sums over all atoms.
    """
    norm2 = max(
        (v.value.abs2() for v in atom_values(graph, element)), default=Fraction(0)
    )
    return norm2, math.sqrt(norm2)


def ck4_product(graph: Graph, lam: Path, path_set: PathSet) -> DiagElement:
    r"""Expand :math:`\prod_{\mu \in M} (p_\lambda - p_{\lambda\mu})`.

    The empty product is :math:`p_\lambda`. The result vanishes in the
    aperiodic boundary representation iff ``path_set`` is exhaustive.

    Raises:
        ValueError: If the members of ``path_set`` do not start at :math:`s(\lambda)`.

    """
    graph.check_vertex(lam.source)
    if path_set.base != lam.source:
        raise ValueError(
            f"Path set is based at {path_set.base}, expected s({lam}) = {lam.source}"
        )
    p_lam = DiagElement.projection(lam)
    result = p_lam
    for mu in path_set.sorted():
        result = result * (p_lam - DiagElement.projection(lam.concat(mu)))
    return result

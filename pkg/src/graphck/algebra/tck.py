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
"""Symbolic span of :math:`t_\\mu t_\\nu^*` in the Toeplitz algebra of a graph."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction

from ..graph import Cycle, Graph, GraphFormatError, Path, edge_path
from .diagonal import DiagElement
from .scalar import ONE, Scalar


@dataclass(frozen=True)
class TckTerm:
    r"""Spanning element :math:`t_\mu t_\nu^*` with :math:`s(\mu) = s(\nu)`.

    Attributes:
        - mu (Path): Left path :math:`\mu`.
        - nu (Path): Right path :math:`\nu`.

    """

    mu: Path
    nu: Path

    def __post_init__(self):
        if self.mu.source != self.nu.source:
            raise ValueError(
                f"t[{self.mu}] t[{self.nu}]* vanishes: sources {self.mu.source} "
                f"and {self.nu.source} differ"
            )

    def __str__(self) -> str:
        return f"t[{self.mu}]t[{self.nu}]*"

    @property
    def sort_key(self):
        return (
            self.mu.range,
            len(self.mu),
            self.mu.edges,
            self.nu.range,
            len(self.nu),
            self.nu.edges,
        )

    @property
    def max_length(self) -> int:
        return max(len(self.mu), len(self.nu))

    def adjoint(self) -> TckTerm:
        return TckTerm(self.nu, self.mu)


def term_product(left: TckTerm, right: TckTerm) -> TckTerm | None:
    r"""Reduce :math:`t_\mu t_\nu^* \cdot t_\alpha t_\beta^*` to a spanning term.

    :math:`t_\nu^* t_\alpha` is :math:`t_{\alpha'}` when :math:`\alpha = \nu\alpha'`,
    :math:`t_{\nu'}^*` when :math:`\nu = \alpha\nu'`, and 0 otherwise.

    Returns:
        TckTerm | None: The reduced term, or None when the product vanishes.

    """
    nu, alpha = left.nu, right.mu
    if nu.is_prefix_of(alpha):
        return TckTerm(left.mu.concat(alpha.residual(nu)), right.nu)
    if alpha.is_prefix_of(nu):
        return TckTerm(left.mu, right.nu.concat(nu.residual(alpha)))
    return None


class TckElement:
    r"""Finite combination :math:`\sum a_{\mu,\nu} t_\mu t_\nu^*` in canonical form.

    The spanning terms are linearly independent in the universal Toeplitz
    algebra, so canonical-form equality is equality there. A symbolically
    nonzero element may still vanish in the aperiodic boundary
    representation; evaluate it with :func:`graphck.representation.represent`
    for such questions.

    Attributes:
        - terms (dict[TckTerm, Scalar]): Nonzero coefficients keyed by term.

    """

    def __init__(self, terms: Mapping[TckTerm, Scalar | Fraction | int] | None = None):
        self.terms: dict[TckTerm, Scalar] = {}
        for term, coeff in (terms or {}).items():
            self._accumulate(term, Scalar.coerce(coeff))

    def _accumulate(self, term: TckTerm, coeff: Scalar):
        total = self.terms.get(term, Scalar()) + coeff
        if total:
            self.terms[term] = total
        else:
            self.terms.pop(term, None)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[TckTerm, Scalar]]) -> TckElement:
        element = cls()
        for term, coeff in pairs:
            element._accumulate(term, Scalar.coerce(coeff))
        return element

    @classmethod
    def term(cls, mu: Path, nu: Path, coeff: Scalar | Fraction | int = ONE) -> TckElement:
        r"""The element ``coeff`` :math:`\cdot t_\mu t_\nu^*`."""
        return cls({TckTerm(mu, nu): coeff})

    @classmethod
    def vertex(cls, graph: Graph, v: str) -> TckElement:
        """The vertex projection :math:`q_v`."""
        path = graph.vertex_path(v)
        return cls.term(path, path)

    @classmethod
    def partial_isometry(cls, path: Path) -> TckElement:
        r""":math:`t_\lambda = t_\lambda t_{s(\lambda)}^*`."""
        return cls.term(path, Path((), (path.source,)))

    @classmethod
    def range_projection(cls, path: Path) -> TckElement:
        r""":math:`t_\lambda t_\lambda^*`."""
        return cls.term(path, path)

    @classmethod
    def from_diagonal(cls, element: DiagElement) -> TckElement:
        r"""Embed a diagonal element through :math:`p_\beta \mapsto t_\beta t_\beta^*`."""
        return cls({TckTerm(p, p): c for p, c in element.terms.items()})

    @classmethod
    def from_dict(cls, graph: Graph, data: dict) -> TckElement:
        """Decode the element file format ``{"terms": [{"mu", "nu", "re", "im"}]}``.

        Raises:
            GraphFormatError: If a field is missing or malformed.
            ValueError: If a path is invalid or a term has mismatched sources.

        """
        if not isinstance(data, dict) or not isinstance(data.get("terms"), list):
            raise GraphFormatError("Element file must contain a 'terms' list")
        pairs = []
        for i, record in enumerate(data["terms"]):
            if not isinstance(record, dict):
                raise GraphFormatError(f"Field 'terms[{i}]' must be an object")
            for key in ("mu", "nu"):
                if not isinstance(record.get(key), str):
                    raise GraphFormatError(f"Field 'terms[{i}].{key}' must be a string")
            re_part = Scalar.parse(str(record.get("re", "0")))
            im_part = Scalar.parse(str(record.get("im", "0")))
            if re_part.im or im_part.im:
                raise GraphFormatError(
                    f"Fields 'terms[{i}].re' and 'terms[{i}].im' must be rationals"
                )
            term = TckTerm(graph.parse_path(record["mu"]), graph.parse_path(record["nu"]))
            pairs.append((term, Scalar(re_part.re, im_part.re)))
        return cls.from_pairs(pairs)

    def to_dict(self, graph: Graph) -> dict:
        """Encode in the element file format, terms in canonical order."""
        return {
            "terms": [
                {
                    "mu": graph.format_path(term.mu),
                    "nu": graph.format_path(term.nu),
                    "re": str(self.terms[term].re),
                    "im": str(self.terms[term].im),
                }
                for term in self.support()
            ]
        }

    def support(self) -> list[TckTerm]:
        """Terms with nonzero coefficient, in canonical order."""
        return sorted(self.terms, key=lambda t: t.sort_key)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def max_length(self) -> int:
        """Length of the longest path in a term, 0 for the zero element."""
        return max((term.max_length for term in self.terms), default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TckElement):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: TckElement) -> TckElement:
        result = TckElement(self.terms)
        for term, coeff in other.terms.items():
            result._accumulate(term, coeff)
        return result

    def __neg__(self) -> TckElement:
        return TckElement({t: -c for t, c in self.terms.items()})

    def __sub__(self, other: TckElement) -> TckElement:
        return self + (-other)

    def __mul__(self, other) -> TckElement:
        if isinstance(other, TckElement):
            return tck_product(self, other)
        if isinstance(other, Scalar | int | Fraction):
            factor = Scalar.coerce(other)
            return TckElement({t: factor * c for t, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other) -> TckElement:
        if isinstance(other, Scalar | int | Fraction):
            return self * other
        return NotImplemented

    def adjoint(self) -> TckElement:
        return tck_adjoint(self)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({self.terms[t]}){t}" for t in self.support())

    def __repr__(self) -> str:
        return f"TckElement({self})"


def tck_product(x: TckElement, y: TckElement) -> TckElement:
    """Bilinear product of two elements, reduced term by term."""
    pairs = []
    for left, a in x.terms.items():
        for right, b in y.terms.items():
            term = term_product(left, right)
            if term is not None:
                pairs.append((term, a * b))
    return TckElement.from_pairs(pairs)


def tck_adjoint(x: TckElement) -> TckElement:
    r"""Adjoint: :math:`(a\, t_\mu t_\nu^*)^* = \bar{a}\, t_\nu t_\mu^*`."""
    return TckElement({t.adjoint(): c.conj() for t, c in x.terms.items()})


def expectation(x: TckElement) -> DiagElement:
    r"""Conditional expectation :math:`\Phi(t_\mu t_\nu^*) = \delta_{\mu,\nu} p_\mu`."""
    return DiagElement.from_pairs(
        (term.mu, coeff) for term, coeff in x.terms.items() if term.mu == term.nu
    )


def ck_element(graph: Graph, v: str) -> TckElement:
    r"""Cuntz–Krieger gap :math:`q_v - \sum_{e \in vE^1} t_e t_e^*`.

    It is nonzero in the Toeplitz algebra and vanishes in the boundary
    representation when :math:`v` emits finitely many edges, at least one.
    """
    result = TckElement.vertex(graph, v)
    for edge in graph.range_edges(v):
        result = result - TckElement.range_projection(edge_path(edge))
    return result


@dataclass(frozen=True)
class CycleLemmaResult:
    r"""Outcome of :func:`cycle_lemma_check`.

    Attributes:
        - sandwich (TckElement): :math:`t_\lambda t_\lambda^* t_\mu t_\nu^* t_\lambda t_\lambda^*`.
        - rho (Cycle | None): Certified cycle with :math:`\mu'\nu' = \nu'\rho`.
        - mu_prime (Path | None): :math:`\mu'` with :math:`\nu = \mu\mu'`.
        - nu_prime (Path | None): :math:`\nu'` with :math:`\lambda = \nu\nu'`.

    """

    sandwich: TckElement
    rho: Cycle | None = None
    mu_prime: Path | None = None
    nu_prime: Path | None = None

    @property
    def zero(self) -> bool:
        return self.sandwich.is_zero()


def cycle_lemma_check(graph: Graph, lam: Path, mu: Path, nu: Path) -> CycleLemmaResult:
    r"""Certify the cycle structure of a nonzero sandwich.

    When :math:`|\lambda| \geq |\nu| > |\mu|` and
    :math:`t_\lambda t_\lambda^* t_\mu t_\nu^* t_\lambda t_\lambda^* \neq 0`,
    then :math:`\lambda = \nu\nu' = \mu\mu'\nu'`, the path :math:`\rho` solving
    :math:`\mu'\nu' = \nu'\rho` is a cycle and the sandwich equals
    :math:`t_\lambda t_{\lambda\rho}^*`.

    Parameters:
        graph (Graph): Ambient graph.
        lam (Path): :math:`\lambda`.
        mu (Path): :math:`\mu`.
        nu (Path): :math:`\nu`.

    Returns:
        CycleLemmaResult: The sandwich, and the certificate when it is nonzero.

    Raises:
        ValueError: If the lengths violate :math:`|\lambda| \geq |\nu| > |\mu|`.
        RuntimeError: If a nonzero sandwich does not have the certified form.

    """
    for path in (lam, mu, nu):
        graph.check_vertex(path.range)
    if not len(lam) >= len(nu) > len(mu):
        raise ValueError(
            f"Lengths must satisfy |lambda| >= |nu| > |mu|, got "
            f"{len(lam)}, {len(nu)}, {len(mu)}"
        )
    if mu.source != nu.source:
        return CycleLemmaResult(TckElement())
    projection = TckElement.range_projection(lam)
    sandwich = projection * TckElement.term(mu, nu) * projection
    if sandwich.is_zero():
        return CycleLemmaResult(sandwich)
    if not (nu.is_prefix_of(lam) and mu.is_prefix_of(nu)):
        raise RuntimeError(
            f"Nonzero sandwich {sandwich} but {lam} does not factor as nu nu' = mu mu' nu'"
        )
    nu_prime = lam.residual(nu)
    mu_prime = nu.residual(mu)
    product = mu_prime.concat(nu_prime)
    if not nu_prime.is_prefix_of(product):
        raise RuntimeError(f"{nu_prime} is not an initial segment of {product}")
    try:
        rho = Cycle(product.residual(nu_prime))
    except ValueError as err:
        raise RuntimeError(f"Residual of {product} after {nu_prime} is not a cycle") from err
    expected = TckElement.term(lam, lam.concat(rho.path))
    if sandwich != expected:
        raise RuntimeError(f"Sandwich {sandwich} differs from {expected}")
    return CycleLemmaResult(sandwich, rho, mu_prime, nu_prime)

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
"""Comparability of paths and exhaustiveness of finite path sets."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .graph import Graph, Path
from .paths import edge_path, paths_up_to


@dataclass(frozen=True)
class PathSet:
    r"""Finite set :math:`X \subset vE^*` of paths sharing the range vertex ``base``.

    Attributes:
        - base (str): Common range vertex :math:`v`.
        - members (frozenset[Path]): The paths; duplicates are removed.

    """

    base: str
    members: frozenset[Path]

    def __post_init__(self):
        for member in self.members:
            if member.range != self.base:
                raise ValueError(
                    f"Path {member} has range {member.range}, not {self.base}"
                )

    @classmethod
    def of(cls, base: str, paths: Iterable[Path]) -> PathSet:
        """Build a path set from any iterable of paths with range ``base``."""
        return cls(base, frozenset(paths))

    @classmethod
    def parse(cls, graph: Graph, base: str, text: str) -> PathSet:
        """Parse a comma-separated list of paths (``""`` is the empty set)."""
        graph.check_vertex(base)
        items = [item for item in text.split(",") if item.strip()]
        return cls.of(base, (graph.parse_path(item) for item in items))

    def __iter__(self):
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, path: object) -> bool:
        return path in self.members

    def sorted(self) -> list[Path]:
        """Members ordered by length, then lexicographically."""
        return sorted(self.members, key=lambda p: (len(p), p.edges))

    @property
    def max_length(self) -> int:
        """Length of the longest member, 0 for the empty set."""
        return max((len(p) for p in self.members), default=0)

    def is_prefix_closed(self) -> bool:
        r"""True if :math:`\mu\nu \in X` implies :math:`\mu \in X`."""
        return all(
            member.prefix(n) in self.members
            for member in self.members
            for n in range(len(member))
        )

    def tail_set(self, path: Path) -> PathSet:
        r"""Return :math:`T^X_\lambda = \{\lambda' : \lambda\lambda' \in X, |\lambda'| > 0\}`."""
        return PathSet.of(
            path.source,
            (
                member.residual(path)
                for member in self.members
                if len(member) > len(path) and path.is_prefix_of(member)
            ),
        )


@dataclass(frozen=True)
class ExhaustVerdict:
    """Outcome of :func:`is_exhaustive`.

    Attributes:
        - exhaustive (bool): True when every path from the base vertex is
          comparable with some member.
        - witness (Path | None): Present iff not exhaustive. Incomparable with
          every member unless ``through_phantom`` is set, in which case the
          incomparable path is the witness followed by a phantom edge.
        - through_phantom (bool): True when only a phantom edge at an infinite
          emitter escapes the set.

    """

    exhaustive: bool
    witness: Path | None = None
    through_phantom: bool = False


def comparable(lam: Path, alpha: Path) -> bool:
    r"""Return True if :math:`\lambda = \alpha\lambda'` or :math:`\alpha = \lambda\alpha'`.

    Raises:
        ValueError: If the paths do not share their range vertex.

    """
    if lam.range != alpha.range:
        raise ValueError(
            f"Paths {lam} and {alpha} have different ranges {lam.range}, {alpha.range}"
        )
    return lam.is_prefix_of(alpha) or alpha.is_prefix_of(lam)


def _search(graph: Graph, members: frozenset[Path], node: Path) -> ExhaustVerdict:
    if any(member.is_prefix_of(node) for member in members):
        return ExhaustVerdict(True)
    if not any(node.is_prefix_of(member) for member in members):
        return ExhaustVerdict(False, node)
    for edge in graph.range_edges(node.source):
        verdict = _search(graph, members, node.concat(edge_path(edge)))
        if not verdict.exhaustive:
            return verdict
    if graph.is_infinite_emitter(node.source):
        return ExhaustVerdict(False, node, through_phantom=True)
    return ExhaustVerdict(True)


def is_exhaustive(graph: Graph, path_set: PathSet) -> ExhaustVerdict:
    r"""Decide whether ``path_set`` is exhaustive at its base vertex.

    Depth-first search from the base vertex in lexicographic order: a node
    extending a member is covered and pruned; a node that is neither an
    extension nor an initial segment of a member is the witness. The search
    never goes deeper than the longest member. A node that is not covered
    and sits at an infinite emitter escapes through a phantom edge, since a
    finite set of explicit paths cannot cover infinitely many edges.

    For the empty set the witness is the first explicit edge at the base
    vertex when there is one, else the base vertex itself.

    Parameters:
        graph (Graph): Ambient graph.
        path_set (PathSet): Finite set of paths with a common range.

    Returns:
        ExhaustVerdict: The verdict and, when not exhaustive, its witness.

    """
    root = graph.vertex_path(path_set.base)
    if not path_set.members:
        edges = graph.range_edges(path_set.base)
        return ExhaustVerdict(False, root.concat(edge_path(edges[0])) if edges else root)
    return _search(graph, path_set.members, root)


def exhaustive_oracle(graph: Graph, path_set: PathSet, depth: int) -> bool:
    r"""Brute-force exhaustiveness test over :math:`vE^{\leq \text{depth}}`.

    Every explicit path up to ``depth`` must be comparable with a member,
    and every path ending at an infinite emitter must extend a member (its
    phantom continuations are comparable with nothing else).

    Raises:
        ValueError: If ``depth`` is shorter than the longest member.

    """
    if depth < path_set.max_length:
        raise ValueError(
            f"depth {depth} is shorter than the longest member ({path_set.max_length})"
        )
    members = path_set.members
    for lam in paths_up_to(graph, path_set.base, depth):
        if not any(comparable(lam, alpha) for alpha in members):
            return False
        if graph.is_infinite_emitter(lam.source) and not any(
            alpha.is_prefix_of(lam) for alpha in members
        ):
            return False
    return True

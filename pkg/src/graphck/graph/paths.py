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
"""Path enumeration, Condition (L) and the constructive path choices used in proofs."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import networkx as nx

from .graph import Cycle, Edge, Graph, Path
from .utils import thue_morse


def edge_path(edge: Edge) -> Path:
    """Length-1 path consisting of ``edge``."""
    return Path((edge.id,), (edge.range, edge.source))


def _extend(graph: Graph, path: Path, remaining: int) -> Iterator[Path]:
    if remaining == 0:
        yield path
        return
    for edge in graph.range_edges(path.source):
        yield from _extend(graph, path.concat(edge_path(edge)), remaining - 1)


def iter_paths(graph: Graph, v: str, n: int) -> Iterator[Path]:
    r"""Lazily enumerate :math:`vE^n` in lexicographic order of edge ids.

    Phantom edges at infinite emitters are never enumerated.

    Parameters:
        graph (Graph): Ambient graph.
        v (str): Range vertex.
        n (int): Path length.

    Raises:
        ValueError: If ``n`` is negative or ``v`` is unknown.

    """
    if n < 0:
        raise ValueError(f"Path length must be nonnegative, got {n}")
    return _extend(graph, graph.vertex_path(v), n)


def paths_from(graph: Graph, v: str, n: int) -> list[Path]:
    r"""Return :math:`vE^n`, the explicit paths of length ``n`` with range ``v``.

    Parameters:
        graph (Graph): Ambient graph.
        v (str): Range vertex.
        n (int): Path length.

    Returns:
        list[Path]: Paths in lexicographic order of edge ids.

    """
    return list(iter_paths(graph, v, n))


def paths_up_to(graph: Graph, v: str, n: int) -> list[Path]:
    r"""Return :math:`vE^{\leq n}` ordered by length, then lexicographically."""
    return [path for k in range(n + 1) for path in iter_paths(graph, v, k)]


class Extensions(NamedTuple):
    r"""Edges that extend a path at its source.

    Attributes:
        - edges (tuple[Edge, ...]): Explicit edges of :math:`s(\lambda)E^1`.
        - infinite (bool): True when :math:`s(\lambda)` is an infinite emitter.

    """

    edges: tuple[Edge, ...]
    infinite: bool


def extension_edges(graph: Graph, path: Path) -> Extensions:
    r"""Return :math:`s(\lambda)E^1` together with the infinite-emitter flag."""
    return Extensions(
        graph.range_edges(path.source), graph.is_infinite_emitter(path.source)
    )


@dataclass(frozen=True)
class ConditionLVerdict:
    """Outcome of :func:`check_condition_L`.

    Attributes:
        - holds (bool): True when every cycle has an entrance.
        - witness (Cycle | None): An entrance-less simple cycle when ``holds``
          is False.

    """

    holds: bool
    witness: Cycle | None = None


def _has_entrance(graph: Graph, cycle_vertices: list[str]) -> bool:
    # On a simple cycle each vertex receives exactly one cycle edge, so any
    # further edge (explicit or phantom) at one of its vertices is an entrance.
    return any(
        len(graph.range_edges(v)) > 1 or graph.is_infinite_emitter(v)
        for v in cycle_vertices
    )


def _rotate(cycle_vertices: list[str]) -> tuple[str, ...]:
    i = cycle_vertices.index(min(cycle_vertices))
    return tuple(cycle_vertices[i:] + cycle_vertices[:i])


@lru_cache(maxsize=128)
def check_condition_L(graph: Graph) -> ConditionLVerdict:
    """Decide whether every cycle of the graph has an entrance.

    Simple cycles are enumerated with :func:`networkx.simple_cycles` on the
    vertex digraph with an arc :math:`r(e) \\to s(e)` per edge; a cycle has
    an entrance iff one of its vertices receives a second edge, phantom
    edges at infinite emitters included.

    Parameters:
        graph (Graph): Graph to examine.

    Returns:
        ConditionLVerdict: ``holds`` together with an entrance-less simple
        cycle (the first one in sorted order) when Condition (L) fails.

    """
    digraph = nx.DiGraph()
    digraph.add_nodes_from(graph.vertices)
    digraph.add_edges_from((e.range, e.source) for e in graph.edges.values())
    cycles = sorted(_rotate(list(c)) for c in nx.simple_cycles(digraph))
    for cycle_vertices in cycles:
        if _has_entrance(graph, list(cycle_vertices)):
            continue
        edge_ids = [graph.range_edges(v)[0].id for v in cycle_vertices]
        return ConditionLVerdict(False, Cycle(graph.path(edge_ids)))
    return ConditionLVerdict(True)


def is_aperiodic_tail(graph: Graph, tau: Path, bound: int) -> bool:
    r"""Check the defining disjunction of an aperiodic tail :math:`\tau`.

    Either :math:`s(\tau)` is singular (a terminal vertex, or an infinite
    emitter whose phantom edges continue every path freshly), or
    :math:`|\tau| > \text{bound}` and the last edge of :math:`\tau` differs
    from every earlier edge.
    """
    if graph.is_terminal(tau.source) or graph.is_infinite_emitter(tau.source):
        return True
    return len(tau) > bound and tau.edges[-1] not in tau.edges[:-1]


def aperiodic_tail(graph: Graph, v: str, bound: int) -> Path:
    r"""Return the shortest aperiodic tail :math:`\tau^v \in vE^*`.

    The search runs over :math:`vE^n` for increasing ``n`` in lexicographic
    order and returns the first path satisfying :func:`is_aperiodic_tail`.
    When every cycle has an entrance such a path exists within length
    ``bound + 2|E^0| + 2``.

    Parameters:
        graph (Graph): Ambient graph.
        v (str): Range vertex of the tail.
        bound (int): Length that the tail must exceed unless it ends at a
            terminal vertex or an infinite emitter.

    Returns:
        Path: The tail :math:`\tau^v`.

    Raises:
        ValueError: If ``bound`` is negative or Condition (L) fails.

    """
    if bound < 0:
        raise ValueError(f"bound must be nonnegative, got {bound}")
    limit = bound + 2 * len(graph.vertices) + 2
    for n in range(limit + 1):
        for tau in iter_paths(graph, v, n):
            if is_aperiodic_tail(graph, tau, bound):
                return tau
    verdict = check_condition_L(graph)
    if verdict.holds:
        raise RuntimeError(
            f"No aperiodic tail at {v} within length {limit} although every cycle "
            "has an entrance"
        )
    raise ValueError(
        f"No aperiodic tail at {v} longer than {bound} within length {limit}: "
        f"cycle {verdict.witness} has no entrance"
    )


def witness_prefix(graph: Graph, v: str, length: int) -> Path:
    r"""Prefix of the canonical aperiodic boundary path :math:`x(v)`.

    :math:`x(v)` is built edge by edge from ``v``: a vertex with a single
    explicit edge is followed through it; at a vertex with several edges the
    ``k``-th such branch point picks the first or second edge (by id) according
    to the ``k``-th Thue–Morse term; the walk stops at terminal vertices and
    at infinite emitters, where the finite path already is a boundary path.
    Since the Thue–Morse sequence is not eventually periodic and every cycle
    has an entrance, :math:`x(v)` is not eventually periodic.

    Parameters:
        graph (Graph): Ambient graph.
        v (str): Range vertex.
        length (int): Requested prefix length.

    Returns:
        Path: The prefix of length ``min(length, |x(v)|)``.

    Raises:
        ValueError: If Condition (L) fails, since aperiodicity can then no
            longer be guaranteed.

    """
    verdict = check_condition_L(graph)
    if not verdict.holds:
        raise ValueError(
            f"Cannot build an aperiodic boundary path: cycle {verdict.witness} "
            "has no entrance"
        )
    path = graph.vertex_path(v)
    branch = 0
    while len(path) < length:
        u = path.source
        edges = graph.range_edges(u)
        if not edges or graph.is_infinite_emitter(u):
            break
        if len(edges) == 1:
            edge = edges[0]
        else:
            edge = edges[thue_morse(branch)]
            branch += 1
        path = path.concat(edge_path(edge))
    return path

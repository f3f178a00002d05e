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
"""Seeded generators of paths, path sets and elements."""

from collections.abc import Iterator
from fractions import Fraction
from itertools import combinations

import numpy as np

from ..algebra import DiagElement, Scalar, TckElement, TckTerm
from ..graph import Graph, Path, PathSet, edge_path, paths_up_to

LATTICE_RADIUS = 8
LATTICE_DENOMINATOR = 4


def random_scalar(rng: np.random.Generator) -> Scalar:
    r"""Draw :math:`a/4 + (b/4)i` with :math:`|a|, |b| \leq 8`, never zero."""
    while True:
        a, b = rng.integers(-LATTICE_RADIUS, LATTICE_RADIUS + 1, size=2)
        if a or b:
            return Scalar(
                Fraction(int(a), LATTICE_DENOMINATOR), Fraction(int(b), LATTICE_DENOMINATOR)
            )


def random_path(
    graph: Graph, rng: np.random.Generator, max_length: int, base: str | None = None
) -> Path:
    """Random walk of uniform target length from a uniform (or given) range vertex.

    The walk stops early at vertices without explicit edges.
    """
    v = base if base is not None else graph.vertices[rng.integers(len(graph.vertices))]
    path = graph.vertex_path(v)
    length = int(rng.integers(max_length + 1))
    while len(path) < length:
        edges = graph.range_edges(path.source)
        if not edges:
            break
        path = path.concat(edge_path(edges[rng.integers(len(edges))]))
    return path


def random_cotail(graph: Graph, rng: np.random.Generator, source: str, max_length: int) -> Path:
    """Random path with source ``source``, grown backwards."""
    incoming: dict[str, list] = {v: [] for v in graph.vertices}
    for edge in graph.edges.values():
        incoming[edge.source].append(edge)
    path = graph.vertex_path(source)
    length = int(rng.integers(max_length + 1))
    while len(path) < length:
        edges = incoming[path.range]
        if not edges:
            break
        path = edge_path(edges[rng.integers(len(edges))]).concat(path)
    return path


def random_term(graph: Graph, rng: np.random.Generator, max_length: int) -> TckTerm:
    r"""Random spanning term :math:`t_\mu t_\nu^*` with paths of length at most ``max_length``."""
    mu = random_path(graph, rng, max_length)
    return TckTerm(mu, random_cotail(graph, rng, mu.source, max_length))


def random_tck_element(
    graph: Graph, rng: np.random.Generator, max_length: int, max_terms: int = 3
) -> TckElement:
    """Random nonzero element with 1 to ``max_terms`` terms."""
    while True:
        n_terms = int(rng.integers(1, max_terms + 1))
        element = TckElement.from_pairs(
            (random_term(graph, rng, max_length), random_scalar(rng))
            for _ in range(n_terms)
        )
        if not element.is_zero():
            return element


def random_diag_element(
    graph: Graph, rng: np.random.Generator, max_length: int, max_terms: int = 4
) -> DiagElement:
    """Random nonzero diagonal element with 1 to ``max_terms`` projections."""
    while True:
        n_terms = int(rng.integers(1, max_terms + 1))
        element = DiagElement.from_pairs(
            (random_path(graph, rng, max_length), random_scalar(rng))
            for _ in range(n_terms)
        )
        if not element.is_zero():
            return element


def random_path_set(
    graph: Graph,
    rng: np.random.Generator,
    max_length: int,
    max_size: int = 4,
    base: str | None = None,
) -> PathSet:
    """Random nonempty set of paths sharing a uniform (or given) range vertex."""
    v = base if base is not None else graph.vertices[rng.integers(len(graph.vertices))]
    candidates = paths_up_to(graph, v, max_length)
    size = int(rng.integers(1, min(max_size, len(candidates)) + 1))
    chosen = rng.choice(len(candidates), size=size, replace=False)
    return PathSet.of(v, (candidates[i] for i in sorted(chosen)))


def all_path_sets(
    graph: Graph, v: str, max_length: int, max_size: int
) -> Iterator[PathSet]:
    r"""Every nonempty :math:`F \subset vE^{\leq \text{max\_length}}` with at most ``max_size`` members."""
    candidates = paths_up_to(graph, v, max_length)
    for size in range(1, max_size + 1):
        for members in combinations(candidates, size):
            yield PathSet.of(v, members)


def prefix_closure(path_set: PathSet) -> PathSet:
    """Smallest prefix-closed set containing ``path_set``."""
    return PathSet.of(
        path_set.base,
        (m.prefix(n) for m in path_set.members for n in range(len(m) + 1)),
    )


def encode_path_set(graph: Graph, path_set: PathSet) -> dict:
    return {
        "base": path_set.base,
        "members": [graph.format_path(p) for p in path_set.sorted()],
    }


def decode_path_set(graph: Graph, data: dict) -> PathSet:
    return PathSet.of(data["base"], (graph.parse_path(m) for m in data["members"]))

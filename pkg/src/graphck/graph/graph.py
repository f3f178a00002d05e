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
"""Directed graphs, finite paths and cycles, and the graph file format."""

from __future__ import annotations

import json
from collections.abc import Iterable
from dataclasses import dataclass
from pathlib import Path as FilePath


class GraphFormatError(ValueError):
    """Raised when a graph file is not well-formed JSON or misses a field."""


class GraphValidationError(ValueError):
    """Raised when a graph refers to undeclared vertices or repeats an edge id."""


@dataclass(frozen=True)
class Edge:
    """Edge record of a directed graph.

    Attributes:
        - id (str): Unique, nonempty edge identifier.
        - range (str): Range vertex :math:`r(e)`.
        - source (str): Source vertex :math:`s(e)`.

    """

    id: str
    range: str
    source: str


@dataclass(frozen=True)
class Path:
    r"""Finite path :math:`\lambda = \lambda_1 \dots \lambda_n` in a directed graph.

    Paths follow the composition convention :math:`s(\lambda_i) = r(\lambda_{i+1})`.
    Together with the edge ids, a path stores the vertices it visits, so that
    ``vertices[0]`` is the range :math:`r(\lambda)` and ``vertices[-1]`` the
    source :math:`s(\lambda)`. A path of length 0 is a vertex.

    Paths are built through :meth:`Graph.path` or :meth:`Graph.vertex_path`,
    which check composability against the graph.

    Attributes:
        - edges (tuple[str, ...]): Edge ids :math:`\lambda_1, \dots, \lambda_n`.
        - vertices (tuple[str, ...]): Visited vertices, of length ``n + 1``.

    """

    edges: tuple[str, ...]
    vertices: tuple[str, ...]

    def __post_init__(self):
        if len(self.vertices) != len(self.edges) + 1:
            raise ValueError(
                f"A path with {len(self.edges)} edges visits {len(self.edges) + 1} "
                f"vertices, got {len(self.vertices)}"
            )

    def __len__(self) -> int:
        return len(self.edges)

    def __str__(self) -> str:
        if not self.edges:
            return f"@{self.range}"
        return ".".join(self.edges)

    @property
    def range(self) -> str:
        """Range vertex :math:`r(\\lambda)`."""
        return self.vertices[0]

    @property
    def source(self) -> str:
        """Source vertex :math:`s(\\lambda)`."""
        return self.vertices[-1]

    @property
    def sort_key(self) -> tuple[str, tuple[str, ...]]:
        """Key ordering paths lexicographically by range, then edge ids."""
        return (self.range, self.edges)

    def concat(self, other: Path) -> Path:
        r"""Return the concatenation :math:`\lambda\mu`.

        Parameters:
            other (Path): Path :math:`\mu` with :math:`r(\mu) = s(\lambda)`.

        Returns:
            Path: The composed path.

        Raises:
            ValueError: If the two paths are not composable.

        """
        if other.range != self.source:
            raise ValueError(
                f"Cannot compose {self} (source {self.source}) with {other} "
                f"(range {other.range})"
            )
        return Path(self.edges + other.edges, self.vertices + other.vertices[1:])

    def is_prefix_of(self, other: Path) -> bool:
        r"""Return True if ``other`` = :math:`\lambda\lambda'` for some :math:`\lambda'`."""
        n = len(self.edges)
        return (
            self.range == other.range
            and n <= len(other.edges)
            and other.edges[:n] == self.edges
        )

    def residual(self, prefix: Path) -> Path:
        r"""Return :math:`\lambda'` such that ``self`` = ``prefix`` :math:`\lambda'`.

        Raises:
            ValueError: If ``prefix`` is not an initial segment of the path.

        """
        if not prefix.is_prefix_of(self):
            raise ValueError(f"{prefix} is not an initial segment of {self}")
        n = len(prefix)
        return Path(self.edges[n:], self.vertices[n:])

    def segment(self, p: int, q: int) -> Path:
        r"""Return the segment :math:`\lambda_{[p,q]} = \lambda_{p+1} \dots \lambda_q`.

        Parameters:
            p (int): Number of leading edges dropped.
            q (int): Index of the last edge kept.

        Raises:
            ValueError: If ``0 <= p <= q <= len(self)`` does not hold.

        """
        if not 0 <= p <= q <= len(self.edges):
            raise ValueError(f"Invalid segment [{p},{q}] of a path of length {len(self)}")
        return Path(self.edges[p:q], self.vertices[p : q + 1])

    def prefix(self, n: int) -> Path:
        """Initial segment of length ``min(n, len(self))``."""
        return self.segment(0, min(n, len(self.edges)))


@dataclass(frozen=True)
class Cycle:
    r"""Cycle :math:`\rho`, a path with :math:`|\rho| \geq 1` and :math:`r(\rho) = s(\rho)`."""

    path: Path

    def __post_init__(self):
        if len(self.path) < 1:
            raise ValueError("A cycle has nonzero length")
        if self.path.range != self.path.source:
            raise ValueError(
                f"{self.path} is not a cycle: range {self.path.range} differs "
                f"from source {self.path.source}"
            )

    def __len__(self) -> int:
        return len(self.path)

    def __str__(self) -> str:
        return str(self.path)

    @property
    def vertices(self) -> tuple[str, ...]:
        """Vertices :math:`r(\\rho_i)` visited by the cycle."""
        return self.path.vertices[:-1]


class Graph:
    """Finite directed graph :math:`E = (E^0, E^1, r, s)` with infinite-emitter flags.

    A vertex flagged as infinite emitter behaves as if it received infinitely
    many phantom edges besides its explicit ones. Phantom edges are never
    enumerated; they only matter for boundary paths, exhaustiveness and
    Condition (L). The graph is immutable once built.

    Attributes:
        - vertices (tuple[str, ...]): Sorted vertex identifiers.
        - edges (dict[str, Edge]): Edge records keyed by id, sorted by id.
        - infinite_emitters (frozenset[str]): Vertices flagged as infinite emitters.

    """

    def __init__(
        self,
        vertices: Iterable[str],
        edges: Iterable[Edge],
        infinite_emitters: Iterable[str] = (),
    ):
        """Initialize and validate a graph.

        Parameters:
            vertices (Iterable[str]): Vertex identifiers.
            edges (Iterable[Edge]): Edge records.
            infinite_emitters (Iterable[str]): Vertices flagged as infinite emitters.

        Raises:
            GraphValidationError: If an edge endpoint or flagged vertex is
                undeclared, or an edge id is empty or repeated.

        """
        vertex_list = list(vertices)
        if len(set(vertex_list)) != len(vertex_list):
            raise GraphValidationError("Vertex identifiers must be unique")
        self.vertices: tuple[str, ...] = tuple(sorted(vertex_list))
        declared = set(self.vertices)

        edge_map: dict[str, Edge] = {}
        for edge in edges:
            if not edge.id:
                raise GraphValidationError("Edge ids must be nonempty strings")
            if edge.id in edge_map:
                raise GraphValidationError(f"Duplicate edge id {edge.id!r}")
            for role, vertex in (("range", edge.range), ("source", edge.source)):
                if vertex not in declared:
                    raise GraphValidationError(
                        f"Edge {edge.id!r} has undeclared {role} vertex {vertex!r}"
                    )
            edge_map[edge.id] = edge
        self.edges: dict[str, Edge] = dict(sorted(edge_map.items()))

        emitters = frozenset(infinite_emitters)
        unknown = emitters - declared
        if unknown:
            raise GraphValidationError(
                f"Undeclared infinite-emitter vertices {sorted(unknown)}"
            )
        self.infinite_emitters: frozenset[str] = emitters

        range_edges: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for edge in self.edges.values():
            range_edges[edge.range].append(edge)
        self._range_edges = {v: tuple(es) for v, es in range_edges.items()}

    @classmethod
    def from_dict(cls, data: dict) -> Graph:
        """Build a graph from the decoded JSON graph-file object.

        Raises:
            GraphFormatError: If a field is missing or has the wrong type.

        """
        if not isinstance(data, dict):
            raise GraphFormatError("Graph file must contain a JSON object")
        for key in ("vertices", "edges"):
            if key not in data:
                raise GraphFormatError(f"Graph file is missing the field {key!r}")
        vertices = data["vertices"]
        if not isinstance(vertices, list) or not all(
            isinstance(v, str) for v in vertices
        ):
            raise GraphFormatError("Field 'vertices' must be a list of strings")
        if not isinstance(data["edges"], list):
            raise GraphFormatError("Field 'edges' must be a list of edge objects")
        edges = []
        for i, record in enumerate(data["edges"]):
            if not isinstance(record, dict):
                raise GraphFormatError(f"Field 'edges[{i}]' must be an object")
            for key in ("id", "range", "source"):
                if not isinstance(record.get(key), str):
                    raise GraphFormatError(
                        f"Field 'edges[{i}].{key}' must be a string"
                    )
            if not record["id"].isascii():
                raise GraphFormatError(f"Field 'edges[{i}].id' must be ASCII")
            edges.append(Edge(record["id"], record["range"], record["source"]))
        emitters = data.get("infinite_emitters", [])
        if not isinstance(emitters, list) or not all(
            isinstance(v, str) for v in emitters
        ):
            raise GraphFormatError("Field 'infinite_emitters' must be a list of strings")
        return cls(vertices, edges, emitters)

    def to_dict(self) -> dict:
        """Return the JSON graph-file object describing the graph."""
        return {
            "vertices": list(self.vertices),
            "edges": [
                {"id": e.id, "range": e.range, "source": e.source}
                for e in self.edges.values()
            ],
            "infinite_emitters": sorted(self.infinite_emitters),
        }

    def check_vertex(self, v: str):
        """Raise GraphValidationError if ``v`` is not a vertex of the graph."""
        if v not in self._range_edges:
            raise GraphValidationError(f"Unknown vertex {v!r}")

    def range_edges(self, v: str) -> tuple[Edge, ...]:
        r"""Explicit edges with range ``v`` (the set :math:`vE^1`), sorted by id."""
        self.check_vertex(v)
        return self._range_edges[v]

    def is_infinite_emitter(self, v: str) -> bool:
        """Return True if ``v`` is flagged as an infinite emitter."""
        return v in self.infinite_emitters

    def is_terminal(self, v: str) -> bool:
        r"""Return True if :math:`vE^1 = \emptyset`, phantom edges included."""
        return not self.range_edges(v) and v not in self.infinite_emitters

    def vertex_path(self, v: str) -> Path:
        """Length-0 path at vertex ``v``."""
        self.check_vertex(v)
        return Path((), (v,))

    def path(self, edge_ids: Iterable[str], base: str | None = None) -> Path:
        """Build a path from edge ids, checking composability.

        Parameters:
            edge_ids (Iterable[str]): Edge ids in path order.
            base (str | None): Range vertex; required for the empty path and
                checked against the first edge otherwise.

        Returns:
            Path: The validated path.

        Raises:
            GraphValidationError: If an edge id is unknown, consecutive edges
                do not compose, or ``base`` disagrees with the first edge.

        """
        ids = tuple(edge_ids)
        if not ids:
            if base is None:
                raise GraphValidationError("The empty path needs a base vertex")
            return self.vertex_path(base)
        for edge_id in ids:
            if edge_id not in self.edges:
                raise GraphValidationError(f"Unknown edge id {edge_id!r}")
        vertices = [self.edges[ids[0]].range]
        if base is not None and base != vertices[0]:
            raise GraphValidationError(
                f"Path {'.'.join(ids)} has range {vertices[0]}, expected {base}"
            )
        for i, edge_id in enumerate(ids):
            edge = self.edges[edge_id]
            if edge.range != vertices[-1]:
                raise GraphValidationError(
                    f"Edges {ids[i - 1]!r} and {edge_id!r} do not compose: "
                    f"s({ids[i - 1]}) = {vertices[-1]} but r({edge_id}) = {edge.range}"
                )
            vertices.append(edge.source)
        return Path(ids, tuple(vertices))

    @property
    def single_character_ids(self) -> bool:
        """True when every edge id is one character long (compact path syntax)."""
        return all(len(edge_id) == 1 for edge_id in self.edges)

    def parse_path(self, text: str) -> Path:
        """Parse the CLI path syntax.

        ``@v`` is the length-0 path at ``v``; ``a.b.c`` lists edge ids; when
        every edge id is a single character, ``abc`` is accepted as well.

        Raises:
            GraphValidationError: If the text does not denote a path of the graph.

        """
        text = text.strip()
        if text.startswith("@"):
            return self.vertex_path(text[1:])
        if not text:
            raise GraphValidationError("Empty path text; write @v for a vertex")
        if "." in text or not self.single_character_ids:
            return self.path(text.split("."))
        return self.path(list(text))

    def format_path(self, path: Path) -> str:
        """Inverse of :meth:`parse_path`."""
        if not path.edges:
            return f"@{path.range}"
        if self.single_character_ids:
            return "".join(path.edges)
        return ".".join(path.edges)

    def __str__(self):
        summary = [
            "Graph:",
            f"  vertices: {', '.join(self.vertices)}",
            f"  edges: {len(self.edges)}",
            *(f"    {e.id}: {e.source} -> {e.range}" for e in self.edges.values()),
            f"  infinite_emitters: {', '.join(sorted(self.infinite_emitters)) or 'None'}",
        ]
        return "\n".join(summary)


def parse_graph(text: str) -> Graph:
    """Parse and validate the content of a graph file.

    Parameters:
        text (str): UTF-8 JSON content, for instance
            ``{"vertices": ["v"], "edges": [{"id": "e", "range": "v", "source": "v"}]}``.

    Returns:
        Graph: The validated graph.

    Raises:
        GraphFormatError: If the JSON is malformed (line and column reported)
            or a field is missing.
        GraphValidationError: If an endpoint is undeclared or an id repeated.

    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise GraphFormatError(
            f"Malformed graph file at line {err.lineno}, column {err.colno}: {err.msg}"
        ) from err
    return Graph.from_dict(data)


def load_graph(filename: str | FilePath) -> Graph:
    """Read and parse a graph file from disk."""
    return parse_graph(FilePath(filename).read_text(encoding="utf-8"))

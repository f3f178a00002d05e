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
"""Configuration of a seeded verification run."""

from pathlib import Path as FilePath

from ..graph import Graph, load_graph


class SuiteConfig:
    """Defines the parameters of a seeded property-suite run.

    All randomness of a run is derived from ``seed``, so that two runs with
    equal configurations produce identical reports.

    Attributes:
        - graph (Graph): Graph on which every property is checked.
        - graph_file (str | None): File the graph was read from, if any.
        - seed (int): Master seed of the run.
        - depth (int): Truncation depth of the matrix models.
        - max_path_length (int): Longest path drawn by the element generators.
        - trials (int): Number of random cases per property.
        - properties (tuple[str, ...] | None): Names of the properties to
          run, all of them when None.

    """

    def __init__(
        self,
        graph: Graph | str | FilePath,
        seed: int = 0,
        depth: int = 6,
        max_path_length: int = 3,
        trials: int = 200,
        properties: list[str] | None = None,
    ):
        """
        Initialize the SuiteConfig object that defines a verification run.

        Parameters:
            graph (Graph | str | pathlib.Path): Graph, or path of a graph file.
            seed (int, optional): Nonnegative master seed. Default is 0.
            depth (int, optional): Truncation depth, at least
                ``max_path_length + 1``. Default is 6.
            max_path_length (int, optional): Longest generated path, at least 1.
                Default is 3.
            trials (int, optional): Random cases per property, at least 1.
                Default is 200.
            properties (list[str], optional): Subset of property names to run.

        Raises:
            ValueError: If a parameter is out of range or a property name is unknown.

        """
        if isinstance(graph, Graph):
            self.graph: Graph = graph
            self.graph_file: str | None = None
        else:
            self.graph = load_graph(graph)
            self.graph_file = str(graph)

        if not isinstance(seed, int) or seed < 0:
            raise ValueError(f"seed must be a nonnegative integer, got {seed}")
        if max_path_length < 1:
            raise ValueError(f"max_path_length must be at least 1, got {max_path_length}")
        if depth < max_path_length + 1:
            raise ValueError(
                f"depth must be at least max_path_length + 1 = {max_path_length + 1}, "
                f"got {depth}"
            )
        if trials < 1:
            raise ValueError(f"trials must be at least 1, got {trials}")

        if properties is not None:
            from .properties import PROPERTIES

            unknown = sorted(set(properties) - set(PROPERTIES))
            if unknown:
                raise ValueError(f"Unknown properties {unknown}")
            properties = tuple(properties)

        self.seed: int = seed
        self.depth: int = depth
        self.max_path_length: int = max_path_length
        self.trials: int = trials
        self.properties: tuple[str, ...] | None = properties

    def to_dict(self) -> dict:
        """Parameters recorded in reports and failure witnesses."""
        return {
            "seed": self.seed,
            "depth": self.depth,
            "max_path_length": self.max_path_length,
            "trials": self.trials,
        }

    def __str__(self):
        summary = [
            "SuiteConfig:",
            f"  graph: {self.graph_file or 'in memory'} "
            f"({len(self.graph.vertices)} vertices, {len(self.graph.edges)} edges)",
            f"  seed: {self.seed}",
            f"  depth: {self.depth}",
            f"  max_path_length: {self.max_path_length}",
            f"  trials: {self.trials}",
            f"  properties: {', '.join(self.properties) if self.properties else 'all'}",
        ]
        return "\n".join(summary)

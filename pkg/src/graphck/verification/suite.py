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
"""Seeded execution of the property suite, failure replay and the faithfulness probe."""

import json
import time
import warnings
from dataclasses import dataclass, field
from pathlib import Path as FilePath

import numpy as np
from tqdm import tqdm

from ..algebra import ck_element
from ..graph import Graph, check_condition_L
from ..representation import Family, build_basis, expectation_numeric, op_norm, represent
from .properties import PROPERTIES, Property, PropertyFailure
from .sampling import random_tck_element
from .suite_config import SuiteConfig

MAX_WITNESSES = 5


@dataclass
class PropertyRecord:
    """Outcome of one property in a suite run.

    Attributes:
        - name (str): Property name.
        - trials (int): Number of cases checked.
        - failures (int): Number of failing cases.
        - witnesses (list[dict]): Replayable failure witnesses, at most
          ``MAX_WITNESSES``.
        - skipped (str | None): Reason the property was not run.
        - seconds (float): Wall-clock time spent on the property.

    """

    name: str
    trials: int = 0
    failures: int = 0
    witnesses: list[dict] = field(default_factory=list)
    skipped: str | None = None
    seconds: float = 0.0

    def to_dict(self, include_timings: bool = True) -> dict:
        record: dict = {
            "name": self.name,
            "trials": self.trials,
            "failures": self.failures,
            "witnesses": self.witnesses,
        }
        if self.skipped is not None:
            record["skipped"] = self.skipped
        if include_timings:
            record["seconds"] = round(self.seconds, 6)
        return record


@dataclass
class SuiteReport:
    """Per-property records of a suite run, in registry order."""

    config: dict
    condition_L: bool
    records: list[PropertyRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(record.failures == 0 for record in self.records)

    @property
    def failures(self) -> list[dict]:
        return [w for record in self.records for w in record.witnesses]

    def to_dict(self, include_timings: bool = True) -> dict:
        return {
            "passed": self.passed,
            "condition_L": self.condition_L,
            "config": self.config,
            "properties": [r.to_dict(include_timings) for r in self.records],
        }

    def to_json(self, include_timings: bool = True) -> str:
        return json.dumps(self.to_dict(include_timings), indent=2, sort_keys=True)


def _run_case(prop: Property, cfg: SuiteConfig, case: dict) -> str | None:
    try:
        prop.check(cfg, case)
    except (PropertyFailure, RuntimeError, ValueError) as err:
        return f"{type(err).__name__}: {err}"
    return None


def _witness(prop: Property, cfg: SuiteConfig, case: dict, message: str) -> dict:
    return {
        "property": prop.name,
        "graph": cfg.graph.to_dict(),
        "config": cfg.to_dict(),
        "case": case,
        "message": message,
    }


def run_suite(cfg: SuiteConfig, progress: bool = True) -> SuiteReport:
    """Run every selected property with its seeded case generator.

    Each property draws its cases from ``np.random.default_rng([seed, i])``
    where ``i`` is its position in the registry, so reports do not depend on
    which other properties are selected. Properties that need Condition (L)
    are skipped, with the reason recorded, when a cycle has no entrance.

    Parameters:
        cfg (SuiteConfig): Run configuration.
        progress (bool, optional): Show a progress bar. Default is True.

    Returns:
        SuiteReport: Records in registry order; property failures are
        report content, never exceptions.

    """
    verdict = check_condition_L(cfg.graph)
    report = SuiteReport(cfg.to_dict(), verdict.holds)
    selected = [
        (i, prop)
        for i, prop in enumerate(PROPERTIES.values())
        if cfg.properties is None or prop.name in cfg.properties
    ]
    for i, prop in tqdm(selected, disable=not progress, desc="properties"):
        record = PropertyRecord(prop.name)
        report.records.append(record)
        if prop.requires_condition_L and not verdict.holds:
            record.skipped = f"Condition (L) fails: cycle {verdict.witness} has no entrance"
            continue
        start = time.perf_counter()
        rng = np.random.default_rng([cfg.seed, i])
        for case in prop.cases(cfg, rng):
            record.trials += 1
            message = _run_case(prop, cfg, case)
            if message is not None:
                record.failures += 1
                if len(record.witnesses) < MAX_WITNESSES:
                    record.witnesses.append(_witness(prop, cfg, case, message))
        record.seconds = time.perf_counter() - start
    return report


@dataclass(frozen=True)
class ReplayOutcome:
    """Result of re-running one failure witness."""

    property: str
    failed: bool
    message: str | None


def load_witness(filename: str | FilePath) -> dict:
    """Read a witness file: one witness object or a report with witnesses."""
    data = json.loads(FilePath(filename).read_text(encoding="utf-8"))
    if not isinstance(data, dict):
        raise ValueError(f"{filename} must hold a JSON object")
    if "property" not in data:
        failures = [w for p in data.get("properties", []) for w in p.get("witnesses", [])]
        if not failures:
            raise ValueError(f"{filename} holds no failure witness")
        data = failures[0]
    return data


def replay(witness: dict) -> ReplayOutcome:
    """Re-run the check of a failure witness on its recorded graph and case.

    Raises:
        ValueError: If the witness names an unknown property or is malformed.

    """
    if not isinstance(witness, dict):
        raise ValueError("Witness must be a JSON object")
    for key in ("property", "graph", "config", "case"):
        if key not in witness:
            raise ValueError(f"Witness is missing the field {key!r}")
    prop = PROPERTIES.get(str(witness["property"]))
    if prop is None:
        raise ValueError(f"Unknown property {witness['property']!r}")
    config = witness["config"]
    try:
        cfg = SuiteConfig(
            Graph.from_dict(witness["graph"]),
            seed=config["seed"],
            depth=config["depth"],
            max_path_length=config["max_path_length"],
            trials=config["trials"],
        )
        message = _run_case(prop, cfg, witness["case"])
    except (KeyError, TypeError) as err:
        raise ValueError(
            f"Malformed witness for {prop.name!r}: {type(err).__name__}: {err}"
        ) from err
    return ReplayOutcome(prop.name, message is not None, message)


@dataclass
class ProbeReport:
    """Outcome of :func:`faithfulness_probe`.

    Attributes:
        - trials (int): Random elements drawn.
        - checked (int): Elements whose boundary matrix is nonzero.
        - skipped (int): Elements with a zero boundary matrix.
        - failures (list[dict]): Elements with a nonzero boundary matrix but
          a zero numeric expectation of ``x* x``.
        - kernel_gaps (list[str]): Vertices whose Cuntz-Krieger gap vanishes
          on the boundary while it is nonzero in the Toeplitz model.

    """

    trials: int = 0
    checked: int = 0
    skipped: int = 0
    failures: list[dict] = field(default_factory=list)
    kernel_gaps: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "trials": self.trials,
            "checked": self.checked,
            "skipped": self.skipped,
            "failures": self.failures,
            "kernel_gaps": self.kernel_gaps,
        }


def faithfulness_probe(
    graph: Graph,
    trials: int,
    depth: int,
    seed: int = 0,
    max_path_length: int | None = None,
) -> ProbeReport:
    """Probe faithfulness of the numeric expectation on positive elements.

    For random nonzero ``x`` whose boundary matrix is nonzero, the numeric
    expectation of ``x* x`` must be nonzero. The Cuntz-Krieger gap
    :math:`q_v - \\sum t_e t_e^*` of each vertex emitting finitely many edges,
    at least one, is nonzero in the Toeplitz model and zero on the boundary:
    it is recorded in ``kernel_gaps`` as the expected difference of kernels.

    Parameters:
        graph (Graph): Graph satisfying Condition (L).
        trials (int): Number of random elements.
        depth (int): Truncation depth.
        seed (int, optional): Seed of the element generator. Default is 0.
        max_path_length (int, optional): Longest generated path. Defaults to
            ``depth // 2`` so that ``x* x`` fits in the truncation.

    Returns:
        ProbeReport: The probe outcome.

    Raises:
        ValueError: If Condition (L) fails or the path length does not fit
            in the truncation.

    """
    verdict = check_condition_L(graph)
    if not verdict.holds:
        raise ValueError(
            f"Cycle {verdict.witness} has no entrance: the probe needs Condition (L)"
        )
    if max_path_length is None:
        max_path_length = max(depth // 2, 1)
    if not 1 <= max_path_length <= depth:
        raise ValueError(
            f"max_path_length must lie between 1 and depth {depth}, got {max_path_length}"
        )
    if 2 * max_path_length > depth:
        warnings.warn(
            f"Depth {depth} is below the path length {2 * max_path_length} of x* x; "
            "the probe uses the larger depth for x* x."
        )
    rng = np.random.default_rng(seed)
    basis = build_basis(graph, Family.BOUNDARY, depth)
    square_basis = build_basis(graph, Family.BOUNDARY, max(depth, 2 * max_path_length))
    toeplitz_bases = [
        build_basis(graph, Family.TOEPLITZ, d) for d in range(max_path_length, depth + 1)
    ]
    report = ProbeReport()
    for _ in range(trials):
        x = random_tck_element(graph, rng, max_path_length)
        report.trials += 1
        boundary_zero = represent(graph, x, basis).is_zero()
        if all(represent(graph, x, b).is_zero() for b in toeplitz_bases) and not boundary_zero:
            report.failures.append({"reason": "kernel", "x": x.to_dict(graph)})
            continue
        if boundary_zero:
            report.skipped += 1
            continue
        report.checked += 1
        square = represent(graph, x.adjoint() * x, square_basis)
        if op_norm(expectation_numeric(square)) <= 0:
            report.failures.append({"reason": "expectation", "x": x.to_dict(graph)})
    toeplitz = toeplitz_bases[-1]
    for v in graph.vertices:
        if not graph.range_edges(v) or graph.is_infinite_emitter(v):
            continue
        gap = ck_element(graph, v)
        if represent(graph, gap, basis).is_zero() and not represent(
            graph, gap, toeplitz
        ).is_zero():
            report.kernel_gaps.append(v)
    return report


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
"""The ``graphck`` command line.

Every command reads a graph file and prints one JSON object on stdout. The
exit code is 0 on success, 1 when a property or identity fails and 2 on
usage or input errors, which are reported as JSON on stderr.
"""

import argparse
import json
import sys
from collections.abc import Sequence
from pathlib import Path as FilePath

from .algebra import (
    DiagElement,
    TckElement,
    atom_values,
    compression_identity_check,
    cycle_lemma_check,
    diag_norm_ap,
    diag_norm_free,
    expectation,
    orthogonalize,
    phi_F,
)
from .graph import (
    Graph,
    PathSet,
    aperiodic_tail,
    check_condition_L,
    is_exhaustive,
    load_graph,
    witness_prefix,
)
from .representation import Family, build_basis, op_norm, represent
from .verification import (
    SuiteConfig,
    faithfulness_probe,
    load_witness,
    replay,
    run_suite,
)


def _load_element(graph: Graph, filename: str) -> TckElement:
    data = json.loads(FilePath(filename).read_text(encoding="utf-8"))
    return TckElement.from_dict(graph, data)


def _path_set(graph: Graph, args) -> PathSet:
    return PathSet.parse(graph, args.vertex, args.set)


def _cmd_check_L(graph: Graph, args) -> tuple[dict, int]:
    verdict = check_condition_L(graph)
    result: dict = {"holds": verdict.holds}
    if verdict.witness is not None:
        result["witness"] = graph.format_path(verdict.witness.path)
    return result, 0


def _cmd_exhaustive(graph: Graph, args) -> tuple[dict, int]:
    verdict = is_exhaustive(graph, _path_set(graph, args))
    result: dict = {"exhaustive": verdict.exhaustive}
    if verdict.witness is not None:
        result["witness"] = graph.format_path(verdict.witness)
        result["through_phantom"] = verdict.through_phantom
    return result, 0


def _cmd_orthogonalize(graph: Graph, args) -> tuple[dict, int]:
    decomposition = orthogonalize(graph, _path_set(graph, args))
    atoms = [
        {
            "path": graph.format_path(atom.path),
            "element": atom.element.to_dict(graph),
            "nonzero_in_ap": atom.nonzero_in_ap,
        }
        for atom in decomposition
    ]
    return {"atoms": atoms}, 0


def _cmd_diag_norm(graph: Graph, args) -> tuple[dict, int]:
    element = DiagElement.parse(graph, args.terms)
    norm2, norm = (diag_norm_free if args.free else diag_norm_ap)(graph, element)
    atoms = [
        {
            "path": graph.format_path(v.path),
            "value": str(v.value),
            "nonzero_in_ap": v.nonzero_in_ap,
        }
        for v in atom_values(graph, element)
    ]
    return {"norm2": str(norm2), "norm": norm, "atoms": atoms}, 0


def _cmd_expectation(graph: Graph, args) -> tuple[dict, int]:
    diagonal = expectation(_load_element(graph, args.element))
    return {"terms": diagonal.to_dict(graph)}, 0


def _cmd_cycle_lemma(graph: Graph, args) -> tuple[dict, int]:
    lam, mu, nu = (graph.parse_path(p) for p in (args.lam, args.mu, args.nu))
    result = cycle_lemma_check(graph, lam, mu, nu)
    output: dict = {"zero": result.zero, "sandwich": result.sandwich.to_dict(graph)}
    if not result.zero:
        output["rho"] = graph.format_path(result.rho.path)
        output["mu_prime"] = graph.format_path(result.mu_prime)
        output["nu_prime"] = graph.format_path(result.nu_prime)
    return output, 0


def _cmd_basis(graph: Graph, args) -> tuple[dict, int]:
    basis = build_basis(graph, Family(args.family), args.depth)
    return {
        "family": basis.family.value,
        "depth": basis.depth,
        "dim": len(basis),
        "labels": [graph.format_path(label) for label in basis.labels],
    }, 0


def _cmd_norm(graph: Graph, args) -> tuple[dict, int]:
    element = _load_element(graph, args.element)
    basis = build_basis(graph, Family(args.family), args.depth)
    return {
        "family": basis.family.value,
        "dim": len(basis),
        "depth": basis.depth,
        "norm": op_norm(represent(graph, element, basis)),
    }, 0


def _cmd_tail(graph: Graph, args) -> tuple[dict, int]:
    tau = aperiodic_tail(graph, args.vertex, args.bound)
    return {"tail": graph.format_path(tau), "length": len(tau)}, 0


def _cmd_witness(graph: Graph, args) -> tuple[dict, int]:
    path = witness_prefix(graph, args.vertex, args.length)
    return {"witness": graph.format_path(path), "length": len(path)}, 0


def _cmd_phi(graph: Graph, args) -> tuple[dict, int]:
    phi = phi_F(graph, graph.parse_path(args.lam), _path_set(graph, args), args.bound)
    return {"terms": phi.to_dict(graph)}, 0


def _cmd_compression(graph: Graph, args) -> tuple[dict, int]:
    x = _load_element(graph, args.element) if args.element else None
    report = compression_identity_check(
        graph, _path_set(graph, args), x, bound=args.bound, depth=args.depth
    )
    return report.to_dict(graph), 0 if report.passed else 1


def _cmd_verify(graph: Graph, args) -> tuple[dict, int]:
    cfg = SuiteConfig(
        graph,
        seed=args.seed,
        depth=args.depth,
        max_path_length=args.max_path_length,
        trials=args.trials,
        properties=args.property,
    )
    cfg.graph_file = args.graph
    report = run_suite(cfg, progress=not args.no_progress)
    if args.output:
        FilePath(args.output).write_text(report.to_json(), encoding="utf-8")
    return report.to_dict(include_timings=not args.no_timings), 0 if report.passed else 1


def _cmd_probe(graph: Graph, args) -> tuple[dict, int]:
    report = faithfulness_probe(graph, args.trials, args.depth, seed=args.seed)
    return report.to_dict(), 0 if report.passed else 1


def _add_set(parser: argparse.ArgumentParser):
    parser.add_argument("--vertex", required=True, help="base vertex of the path set")
    parser.add_argument(
        "--set", required=True, help="comma-separated paths, e.g. 'e,f' or '@v,e'"
    )


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser of the ``graphck`` command."""
    parser = argparse.ArgumentParser(
        prog="graphck",
        description="Exact and truncated computation in Toeplitz-Cuntz-Krieger graph algebras.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler, help_text: str, graph: bool = True):
        sub = commands.add_parser(name, help=help_text)
        if graph:
            sub.add_argument("graph", help="graph file (JSON)")
        sub.set_defaults(handler=handler)
        return sub

    command("check-L", _cmd_check_L, "decide whether every cycle has an entrance")

    sub = command("exhaustive", _cmd_exhaustive, "decide exhaustiveness of a path set")
    _add_set(sub)

    sub = command("orthogonalize", _cmd_orthogonalize, "expand the atoms q_mu^F")
    _add_set(sub)

    sub = command("diag-norm", _cmd_diag_norm, "exact norm of a diagonal element")
    sub.add_argument("--terms", required=True, help="terms path:scalar, e.g. '@v:2,e:-1'")
    sub.add_argument(
        "--free", action="store_true", help="universal boolean norm instead of aperiodic"
    )

    sub = command("expectation", _cmd_expectation, "conditional expectation of an element")
    sub.add_argument("--element", required=True, help="element file (JSON)")

    sub = command("cycle-lemma", _cmd_cycle_lemma, "certify a sandwich t_l t_l* t_m t_n* t_l t_l*")
    sub.add_argument("--lambda", dest="lam", required=True)
    sub.add_argument("--mu", required=True)
    sub.add_argument("--nu", required=True)

    for name, handler, help_text in (
        ("basis", _cmd_basis, "list the labels of a truncation basis"),
        ("norm", _cmd_norm, "norm of the compression of an element"),
    ):
        sub = command(name, handler, help_text)
        sub.add_argument(
            "--family", choices=[f.value for f in Family], default=Family.BOUNDARY.value
        )
        sub.add_argument("--depth", type=int, required=True)
        if name == "norm":
            sub.add_argument("--element", required=True, help="element file (JSON)")

    sub = command("tail", _cmd_tail, "shortest aperiodic tail at a vertex")
    sub.add_argument("--vertex", required=True)
    sub.add_argument("--bound", type=int, required=True)

    sub = command("witness", _cmd_witness, "prefix of the boundary witness path at a vertex")
    sub.add_argument("--vertex", required=True)
    sub.add_argument("--length", type=int, required=True)

    sub = command("phi", _cmd_phi, "the projection phi^F_lambda")
    _add_set(sub)
    sub.add_argument("--lambda", dest="lam", required=True)
    sub.add_argument("--bound", type=int, default=None)

    sub = command("compression", _cmd_compression, "check the compression identity of phi^F")
    _add_set(sub)
    sub.add_argument("--element", default=None, help="element file (JSON) with support in F x F")
    sub.add_argument("--bound", type=int, default=None)
    sub.add_argument("--depth", type=int, default=None)

    sub = command("verify", _cmd_verify, "run the seeded property suite")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--depth", type=int, default=6)
    sub.add_argument("--trials", type=int, default=200)
    sub.add_argument("--max-path-length", type=int, default=3)
    sub.add_argument("--property", action="append", default=None, help="run only this property")
    sub.add_argument("--output", default=None, help="also write the full report to this file")
    sub.add_argument("--no-progress", action="store_true")
    sub.add_argument("--no-timings", action="store_true")

    sub = command("probe", _cmd_probe, "probe faithfulness of the numeric expectation")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--depth", type=int, default=6)
    sub.add_argument("--trials", type=int, default=50)

    sub = command("replay", None, "re-run a failure witness", graph=False)
    sub.add_argument("witness", help="witness or report file (JSON)")
    return parser


def _run(args) -> tuple[dict, int]:
    if args.command == "replay":
        outcome = replay(load_witness(args.witness))
        return {
            "property": outcome.property,
            "failed": outcome.failed,
            "message": outcome.message,
        }, 1 if outcome.failed else 0
    graph = load_graph(args.graph)
    return args.handler(graph, args)


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point of the ``graphck`` console script."""
    args = build_parser().parse_args(argv)
    try:
        result, code = _run(args)
    except (ValueError, OSError) as err:
        json.dump({"error": type(err).__name__, "message": str(err)}, sys.stderr)
        sys.stderr.write("\n")
        return 2
    json.dump(result, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())

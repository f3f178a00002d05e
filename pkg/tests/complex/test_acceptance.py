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
""""""

import numpy as np
import pytest

from graphck.algebra import TckElement, diag_norm_ap
from graphck.graph import exhaustive_oracle, is_exhaustive
from graphck.representation import Family, build_basis, op_norm, represent
from graphck.verification import SuiteConfig, faithfulness_probe, run_suite
from graphck.verification.sampling import all_path_sets, random_diag_element

pytestmark = pytest.mark.complex


@pytest.mark.parametrize("graph_name, seed", [("g1", 42), ("g2", 7)])
def test_full_suite(request, graph_name, seed):
    graph = request.getfixturevalue(graph_name)
    cfg = SuiteConfig(graph, seed=seed, depth=6, max_path_length=3, trials=200)
    report = run_suite(cfg, progress=False)
    assert report.condition_L
    for record in report.records:
        assert record.skipped is None
        assert record.failures == 0, record.witnesses
    assert report.passed


def test_exhaustive_grid(g2):
    checked = 0
    for members in all_path_sets(g2, "u", 4, 3):
        verdict = is_exhaustive(g2, members)
        assert verdict.exhaustive == exhaustive_oracle(g2, members, members.max_length)
        checked += 1
    assert checked == 31 + 31 * 30 // 2 + 31 * 30 * 29 // 6


@pytest.mark.parametrize("graph_name", ["g1", "g2", "chain"])
def test_diag_norms_match_boundary_matrices(request, graph_name):
    graph = request.getfixturevalue(graph_name)
    rng = np.random.default_rng(11)
    for _ in range(200):
        a = random_diag_element(graph, rng, 3)
        element = TckElement.from_diagonal(a)
        basis = build_basis(graph, Family.BOUNDARY, max(6, element.max_length))
        numeric = op_norm(represent(graph, element, basis))
        assert numeric == pytest.approx(diag_norm_ap(graph, a)[1], abs=1e-8)


def test_ck_condition_a_grid(g1):
    for members in all_path_sets(g1, "v", 2, 3):
        q_v = TckElement.vertex(g1, "v")
        product = q_v
        for lam in members.sorted():
            product = product * (q_v - TckElement.range_projection(lam))
        basis = build_basis(g1, Family.BOUNDARY, max(6, product.max_length))
        assert represent(g1, product, basis).is_zero(1e-9) == (
            is_exhaustive(g1, members).exhaustive
        )


def test_probe_at_scale(g2):
    report = faithfulness_probe(g2, trials=50, depth=6, seed=5)
    assert report.passed
    assert report.checked > 0

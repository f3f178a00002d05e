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

import pytest

from graphck.algebra import (
    DiagElement,
    TckElement,
    TripleStatus,
    compression_identity_check,
    default_bound,
    phi_F,
)
from graphck.graph import PathSet


def members(graph, base, text):
    return PathSet.parse(graph, base, text)


@pytest.mark.parametrize(
    "lam, text, expected",
    [
        ("e", "@v,e", "eef:1"),
        ("@v", "@v,e", "f:1"),
        ("@v", "@v,e,f", "@v:1,e:-1,f:-1"),
        ("f", "@v,e,f", "f:1"),
        ("e", "@v,e,f", "eef:1"),
    ],
)
def test_phi_F_g1(g1, lam, text, expected):
    phi = phi_F(g1, g1.parse_path(lam), members(g1, "v", text))
    assert phi == DiagElement.parse(g1, expected)
    assert phi * phi == phi


def test_phi_F_bound(g1, g2):
    assert default_bound(g1, members(g1, "v", "@v,e")) == 1
    assert default_bound(g1, members(g1, "v", "@v,e,f")) == 1
    phi = phi_F(g2, g2.parse_path("g"), members(g2, "u", "@u,g"), bound=2)
    # alpha = g and the shortest tail longer than 2 is ggh
    assert phi == DiagElement.parse(g2, "ggggh:1")


def test_phi_F_errors(g1, g3):
    with pytest.raises(ValueError, match="not a member"):
        phi_F(g1, g1.parse_path("f"), members(g1, "v", "@v,e"))
    with pytest.raises(ValueError, match="initial segments"):
        phi_F(g1, g1.parse_path("ee"), members(g1, "v", "ee"))
    with pytest.raises(ValueError, match="Condition \\(L\\)"):
        phi_F(g3, g3.parse_path("@z"), members(g3, "z", "@z"))


@pytest.mark.parametrize(
    "graph_name, base, text, lam, expected",
    [
        ("g1_emitter", "v", "@v,e,f", "@v", "@v:1,e:-1,f:-1"),
        ("g1_emitter", "v", "@v,e", "@v", "f:1"),
        ("emitter_cycle", "z", "@z,k", "@z", "@z:1,k:-1"),
        ("emitter_cycle", "z", "@z,k", "k", "kk:1,kkk:-1"),
        ("emitter_sink", "a", "@a,y", "@a", "xy:1"),
        ("emitter_sink", "a", "@a,y", "y", "y:1"),
    ],
)
def test_phi_F_infinite_emitters(request, graph_name, base, text, lam, expected):
    graph = request.getfixturevalue(graph_name)
    phi = phi_F(graph, graph.parse_path(lam), members(graph, base, text))
    assert phi == DiagElement.parse(graph, expected)
    assert phi * phi == phi


def test_compression_identity_all_pairs(g1):
    report = compression_identity_check(g1, members(g1, "v", "@v,e"))
    assert report.passed
    assert len(report.records) == 2 * 4
    assert all(r.status is TripleStatus.SYMBOLIC for r in report.records)


@pytest.mark.parametrize(
    "text, lam, mu, nu",
    [
        ("@v,e", "e", "e", "e"),
        ("@v,e", "e", "e", "@v"),
        ("@v,e,f", "@v", "@v", "@v"),
    ],
)
def test_compression_identity_triples(g1, text, lam, mu, nu):
    x = TckElement.term(g1.parse_path(mu), g1.parse_path(nu))
    report = compression_identity_check(g1, members(g1, "v", text), x)
    record = next(r for r in report.records if r.lam == g1.parse_path(lam))
    assert record.status is TripleStatus.SYMBOLIC
    assert record.depth is None


@pytest.mark.parametrize(
    "graph_name, base, text",
    [
        ("g1", "v", "@v,e,f,ee,ef"),
        ("g2", "u", "@u,g,h"),
        ("g2", "u", "@u,g,gh,gg"),
        ("chain", "a", "@a,x,xy"),
        ("emitter_cycle", "z", "@z,k"),
        ("emitter_cycle", "z", "@z,k,kk"),
        ("emitter_sink", "a", "@a,y"),
        ("emitter_sink", "a", "@a,x,y"),
    ],
)
def test_compression_identity_passes(request, graph_name, base, text):
    graph = request.getfixturevalue(graph_name)
    report = compression_identity_check(graph, members(graph, base, text))
    assert report.passed
    assert {r.status for r in report.records} <= {
        TripleStatus.SYMBOLIC,
        TripleStatus.NUMERIC,
    }


def test_compression_identity_rejects_foreign_terms(g1):
    x = TckElement.range_projection(g1.parse_path("ee"))
    with pytest.raises(ValueError, match="does not lie in F x F"):
        compression_identity_check(g1, members(g1, "v", "@v,e"), x)


def test_compression_report_to_dict(g1):
    x = TckElement.range_projection(g1.parse_path("e"))
    report = compression_identity_check(g1, members(g1, "v", "@v,e"), x)
    assert report.to_dict(g1) == {
        "passed": True,
        "triples": [
            {"lambda": "@v", "mu": "e", "nu": "e", "status": "symbolically-verified"},
            {"lambda": "e", "mu": "e", "nu": "e", "status": "symbolically-verified"},
        ],
    }

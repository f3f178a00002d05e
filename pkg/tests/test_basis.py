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

from graphck.representation import (
    MAX_BASIS_SIZE,
    Family,
    boundary_points,
    build_basis,
    comparison_horizon,
)


def labels(graph, basis):
    return [graph.format_path(label) for label in basis.labels]


@pytest.mark.parametrize(
    "graph_name, family, depth, expected",
    [
        ("g1", Family.BOUNDARY, 3, ["@w", "f", "ef", "eee", "eef"]),
        ("g1", Family.BOUNDARY, 0, ["@v", "@w"]),
        ("g1", Family.TOEPLITZ, 1, ["@v", "@w", "e", "f"]),
        ("g2", Family.BOUNDARY, 2, ["gg", "gh", "hg", "hh"]),
        ("g2", Family.TOEPLITZ, 1, ["@u", "g", "h"]),
        ("chain", Family.BOUNDARY, 1, ["@c", "x", "y"]),
        ("emitter_cycle", Family.BOUNDARY, 2, ["@z", "k", "kk"]),
    ],
)
def test_build_basis(request, graph_name, family, depth, expected):
    graph = request.getfixturevalue(graph_name)
    basis = build_basis(graph, family, depth)
    assert basis.family is family
    assert basis.depth == depth
    assert basis.total
    assert labels(graph, basis) == expected
    assert basis.index()[basis.labels[-1]] == len(basis) - 1


def test_build_basis_without_condition_L(g3):
    with pytest.warns(UserWarning, match="no entrance"):
        basis = build_basis(g3, Family.BOUNDARY, 3)
    assert not basis.total
    assert len(basis) == 0
    assert labels(g3, build_basis(g3, Family.TOEPLITZ, 2)) == ["@z", "k", "kk"]


def test_build_basis_errors(g2):
    with pytest.raises(ValueError, match="nonnegative"):
        build_basis(g2, Family.BOUNDARY, -1)
    with pytest.raises(ValueError, match=f"limit of {MAX_BASIS_SIZE}"):
        build_basis(g2, Family.TOEPLITZ, 15)


def test_boundary_points_g1(g1):
    basis = build_basis(g1, Family.BOUNDARY, 3)
    points = boundary_points(g1, basis, 10)
    assert [g1.format_path(p) for p in points] == ["@w", "f", "ef", "eeef", "eef"]
    assert all(label.is_prefix_of(p) for label, p in zip(basis.labels, points))


def test_boundary_points_g2(g2):
    basis = build_basis(g2, Family.BOUNDARY, 2)
    points = boundary_points(g2, basis, 6)
    assert [g2.format_path(p) for p in points] == [
        "ggghhg",
        "ghhghg",
        "hghhgh",
        "hhghhg",
    ]


@pytest.mark.parametrize("graph_name", ["g1", "g2", "chain"])
def test_boundary_points_are_nested(request, graph_name):
    """Points of the depth-D basis are points of the depth-(D+1) basis."""
    graph = request.getfixturevalue(graph_name)
    for depth in range(4):
        small = boundary_points(graph, build_basis(graph, Family.BOUNDARY, depth), 30)
        large = boundary_points(graph, build_basis(graph, Family.BOUNDARY, depth + 1), 30)
        assert set(small) <= set(large)
        assert len(set(large)) == len(large)


def test_boundary_points_need_boundary_basis(g1):
    with pytest.raises(ValueError, match="boundary family"):
        boundary_points(g1, build_basis(g1, Family.TOEPLITZ, 2), 5)


def test_comparison_horizon(g1):
    assert comparison_horizon(g1, 3, 1) == 64
    assert comparison_horizon(g1, 4, 1) > comparison_horizon(g1, 3, 1)

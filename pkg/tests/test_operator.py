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

from graphck.algebra import DiagElement, Scalar, TckElement, ck_element, diag_norm_ap
from graphck.representation import (
    Family,
    OperatorMatrix,
    build_basis,
    expectation_numeric,
    op_norm,
    represent,
)


def t(graph, mu, nu, coeff=1):
    return TckElement.term(graph.parse_path(mu), graph.parse_path(nu), coeff)


def test_vertex_projection_boundary(g1):
    basis = build_basis(g1, Family.BOUNDARY, 3)
    matrix = represent(g1, TckElement.vertex(g1, "v"), basis)
    # labels @w, f, ef, eee, eef
    np.testing.assert_array_equal(matrix.entries, np.diag([0, 1, 1, 1, 1]))
    assert op_norm(matrix) == 1.0


def test_ck_gap_vanishes_on_boundary(g1):
    gap = ck_element(g1, "v")
    assert represent(g1, gap, build_basis(g1, Family.BOUNDARY, 3)).is_zero()
    matrix = represent(g1, gap, build_basis(g1, Family.TOEPLITZ, 2))
    expected = np.zeros((6, 6))
    expected[0, 0] = 1
    np.testing.assert_array_equal(matrix.entries, expected)
    assert np.linalg.matrix_rank(matrix.entries) == 1


def test_ck_gap_norms_at_depth_6(g1):
    gap = ck_element(g1, "v")
    assert op_norm(represent(g1, gap, build_basis(g1, Family.BOUNDARY, 6))) == 0.0
    toeplitz = op_norm(represent(g1, gap, build_basis(g1, Family.TOEPLITZ, 6)))
    assert toeplitz == pytest.approx(1.0, abs=1e-9)


def test_partial_isometry_toeplitz(g1):
    basis = build_basis(g1, Family.TOEPLITZ, 1)
    matrix = represent(g1, TckElement.partial_isometry(g1.parse_path("e")), basis)
    expected = np.zeros((4, 4))
    expected[2, 0] = 1
    np.testing.assert_array_equal(matrix.entries, expected)


def test_diagonal_norm(g1):
    a = DiagElement.parse(g1, "@v:2,e:-1")
    matrix = represent(g1, TckElement.from_diagonal(a), build_basis(g1, Family.BOUNDARY, 3))
    np.testing.assert_array_equal(np.diag(matrix.entries).real, [0, 2, 1, 1, 1])
    assert op_norm(matrix) == pytest.approx(2.0, abs=1e-9)
    assert op_norm(matrix) == pytest.approx(diag_norm_ap(g1, a)[1], abs=1e-9)


@pytest.mark.parametrize("family", [Family.BOUNDARY, Family.TOEPLITZ])
def test_op_norm_zero(g1, family):
    basis = build_basis(g1, family, 2)
    assert op_norm(represent(g1, TckElement(), basis)) == 0.0


def test_op_norm_empty_basis(g3):
    with pytest.warns(UserWarning):
        basis = build_basis(g3, Family.BOUNDARY, 2)
    matrix = represent(g3, TckElement.vertex(g3, "z"), basis)
    assert matrix.dim == 0
    assert matrix.is_zero()
    assert op_norm(matrix) == 0.0


def test_op_norm_non_diagonal(g2):
    basis = build_basis(g2, Family.TOEPLITZ, 2)
    x = t(g2, "g", "h", 2) + t(g2, "h", "g", 2)
    matrix = represent(g2, x, basis)
    assert op_norm(matrix) == pytest.approx(2.0)
    expected = np.linalg.norm(matrix.entries, 2)
    assert op_norm(matrix) == pytest.approx(expected, rel=1e-10)


def test_expectation_numeric(g1, g2):
    off_diagonal = represent(g2, t(g2, "g", "h"), build_basis(g2, Family.BOUNDARY, 3))
    assert expectation_numeric(off_diagonal).is_zero()
    q_e = represent(g1, t(g1, "e", "e"), build_basis(g1, Family.BOUNDARY, 3))
    np.testing.assert_array_equal(
        expectation_numeric(q_e).entries, np.diag([0, 0, 1, 1, 1])
    )
    np.testing.assert_array_equal(expectation_numeric(q_e).entries, q_e.entries)


def test_represent_depth_check(g1):
    with pytest.raises(ValueError, match="longer than depth 2"):
        represent(g1, t(g1, "eef", "f"), build_basis(g1, Family.TOEPLITZ, 2))


def test_operator_matrix_checks(g1):
    basis = build_basis(g1, Family.TOEPLITZ, 1)
    with pytest.raises(ValueError, match="does not match"):
        OperatorMatrix(basis, np.zeros((3, 3)))
    other = build_basis(g1, Family.TOEPLITZ, 2)
    a = represent(g1, TckElement.vertex(g1, "v"), basis)
    b = represent(g1, TckElement.vertex(g1, "v"), other)
    with pytest.raises(ValueError, match="different truncation bases"):
        a @ b
    with pytest.raises(ValueError, match="different truncation bases"):
        a - b
    assert (a - a).is_zero()



def test_operator_matrix_algebra(g1):
    basis = build_basis(g1, Family.TOEPLITZ, 2)
    x = t(g1, "e", "@v", Scalar(1, -2)) + t(g1, "ef", "f", 3)
    matrix = represent(g1, x, basis)
    assert (matrix.adjoint() - represent(g1, x.adjoint(), basis)).is_zero()
    t_e = represent(g1, t(g1, "e", "@v"), basis)
    t_f = represent(g1, t(g1, "f", "@w"), basis)
    q_v = represent(g1, TckElement.vertex(g1, "v"), basis)
    assert (t_e @ t_e.adjoint() - represent(g1, t(g1, "e", "e"), basis)).is_zero()
    gap = q_v - t_e @ t_e.adjoint() - t_f @ t_f.adjoint()
    assert (gap - represent(g1, ck_element(g1, "v"), basis)).is_zero()
    # labels @v, @w, e, f, ee, ef; t_e pushes ee and ef out of the truncation
    np.testing.assert_array_equal(
        (t_e.adjoint() @ t_e).entries, np.diag([1, 0, 1, 1, 0, 0])
    )


@pytest.mark.parametrize("family", [Family.BOUNDARY, Family.TOEPLITZ])
def test_monotone_in_depth(g1, family):
    x = t(g1, "e", "@v", 2) + t(g1, "ef", "f") - t(g1, "@v", "e")
    norms = [op_norm(represent(g1, x, build_basis(g1, family, d))) for d in range(2, 7)]
    assert all(b >= a - 1e-10 for a, b in zip(norms, norms[1:]))

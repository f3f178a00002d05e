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

from itertools import product

import pytest
from hypothesis import given

from graphck.algebra import (
    DiagElement,
    Scalar,
    TckElement,
    TckTerm,
    atom_values,
    ck_element,
    cycle_lemma_check,
    expectation,
    tck_adjoint,
    term_product,
)
from graphck.graph import GraphFormatError, paths_up_to
from tests.fixtures.strategies import G1, G2, tck_elements


def t(graph, mu, nu, coeff=1):
    return TckElement.term(graph.parse_path(mu), graph.parse_path(nu), coeff)


def test_term_requires_common_source(g1):
    with pytest.raises(ValueError, match="sources v and w differ"):
        TckTerm(g1.parse_path("e"), g1.parse_path("f"))


@pytest.mark.parametrize(
    "left, right, expected",
    [
        (("e", "e"), ("e", "@v"), ("e", "@v")),
        (("e", "@v"), ("f", "f"), ("ef", "f")),
        (("@v", "e"), ("@v", "@v"), ("@v", "e")),
        (("ee", "e"), ("f", "f"), None),
    ],
)
def test_product_g1(g1, left, right, expected):
    result = t(g1, *left) * t(g1, *right)
    assert result == (TckElement() if expected is None else t(g1, *expected))


@pytest.mark.parametrize(
    "left, right, expected",
    [
        (("g", "g"), ("g", "h"), ("g", "h")),
        (("g", "h"), ("g", "g"), None),
        (("g", "gh"), ("g", "@u"), ("g", "h")),
    ],
)
def test_product_g2(g2, left, right, expected):
    result = t(g2, *left) * t(g2, *right)
    assert result == (TckElement() if expected is None else t(g2, *expected))


def test_term_product(g1):
    left = TckTerm(g1.parse_path("@v"), g1.parse_path("e"))
    right = TckTerm(g1.parse_path("f"), g1.parse_path("f"))
    assert term_product(left, right) is None


def test_adjoint(g1, g2):
    assert tck_adjoint(t(g2, "g", "h")) == t(g2, "h", "g")
    q_v = TckElement.vertex(g1, "v")
    assert (q_v * Scalar(1, 1)).adjoint() == q_v * Scalar(1, -1)


def test_vertex_relations(g1):
    """q_v q_w = 0, t_e* t_e = q_s(e) and q_v t_e = t_e."""
    q_v, q_w = TckElement.vertex(g1, "v"), TckElement.vertex(g1, "w")
    t_e, t_f = (TckElement.partial_isometry(g1.parse_path(x)) for x in "ef")
    assert (q_v * q_w).is_zero()
    assert q_v * q_v == q_v
    assert t_e.adjoint() * t_e == q_v
    assert t_f.adjoint() * t_f == q_w
    assert q_v * t_f == t_f
    assert (t_e.adjoint() * t_f).is_zero()


def test_ck_element(g1):
    gap = ck_element(g1, "v")
    assert gap == TckElement.vertex(g1, "v") - t(g1, "e", "e") - t(g1, "f", "f")
    assert gap * gap == gap
    assert ck_element(g1, "w") == TckElement.vertex(g1, "w")


@pytest.mark.parametrize(
    "graph_name, element, expected",
    [
        ("g2", [("g", "h", 1)], []),
        ("g1", [("ee", "ee", 3), ("e", "@v", Scalar(0, 1))], [("ee", 3)]),
        ("g1", [("@v", "@v", 1)], [("@v", 1)]),
    ],
)
def test_expectation(request, graph_name, element, expected):
    graph = request.getfixturevalue(graph_name)
    x = sum((t(graph, *term) for term in element), TckElement())
    assert expectation(x) == DiagElement(
        {graph.parse_path(path): coeff for path, coeff in expected}
    )


def test_from_diagonal(g1):
    d = DiagElement.parse(g1, "@v:2,e:-1")
    assert TckElement.from_diagonal(d) == 2 * t(g1, "@v", "@v") - t(g1, "e", "e")
    assert expectation(TckElement.from_diagonal(d)) == d


def test_element_codec(g1):
    x = t(g1, "e", "@v", Scalar(1, -2)) + t(g1, "f", "f", 3)
    data = x.to_dict(g1)
    assert data == {
        "terms": [
            {"mu": "e", "nu": "@v", "re": "1", "im": "-2"},
            {"mu": "f", "nu": "f", "re": "3", "im": "0"},
        ]
    }
    assert TckElement.from_dict(g1, data) == x
    assert TckElement.from_dict(g1, {"terms": [{"mu": "e", "nu": "e"}]}) == TckElement()


@pytest.mark.parametrize(
    "data",
    [
        {},
        {"terms": "e"},
        {"terms": [1]},
        {"terms": [{"mu": "e"}]},
        {"terms": [{"mu": "e", "nu": "e", "re": "i"}]},
    ],
)
def test_element_codec_errors(g1, data):
    with pytest.raises(GraphFormatError):
        TckElement.from_dict(g1, data)


def test_max_length(g1):
    assert TckElement().max_length == 0
    assert (t(g1, "eef", "f") + t(g1, "e", "e")).max_length == 3


def test_cycle_lemma_g1(g1):
    result = cycle_lemma_check(g1, *(g1.parse_path(x) for x in ("ee", "e", "ee")))
    assert not result.zero
    assert result.rho.path == g1.parse_path("e")
    assert result.mu_prime == g1.parse_path("e")
    assert result.nu_prime == g1.parse_path("@v")
    assert result.sandwich == t(g1, "ee", "eee")


def test_cycle_lemma_zero(g1):
    result = cycle_lemma_check(g1, *(g1.parse_path(x) for x in ("ef", "e", "ef")))
    assert result.zero
    assert result.rho is None
    result = cycle_lemma_check(g1, *(g1.parse_path(x) for x in ("ef", "@v", "e")))
    assert result.zero


def test_cycle_lemma_g2(g2):
    result = cycle_lemma_check(g2, *(g2.parse_path(x) for x in ("gh", "g", "gh")))
    assert result.rho.path == g2.parse_path("h")
    assert result.mu_prime == g2.parse_path("h")
    assert result.nu_prime == g2.parse_path("@u")
    assert result.sandwich == t(g2, "gh", "ghh")


def test_cycle_lemma_lengths(g1):
    with pytest.raises(ValueError, match="Lengths"):
        cycle_lemma_check(g1, *(g1.parse_path(x) for x in ("e", "e", "ee")))


@pytest.mark.parametrize("graph, base", [(G1, "v"), (G2, "u")])
def test_cycle_lemma_exhaustive(graph, base):
    """Every triple with |lambda| <= 4 and |lambda| >= |nu| > |mu|."""
    paths = [p for v in graph.vertices for p in paths_up_to(graph, v, 4)]
    certified = 0
    for lam, mu, nu in product(paths, repeat=3):
        if not len(lam) >= len(nu) > len(mu):
            continue
        result = cycle_lemma_check(graph, lam, mu, nu)
        if not result.zero:
            certified += 1
            assert result.sandwich == TckElement.term(lam, lam.concat(result.rho.path))
    assert certified > 0


@given(x=tck_elements(G1), y=tck_elements(G1), z=tck_elements(G1))
def test_product_laws(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x * y).adjoint() == y.adjoint() * x.adjoint()
    assert x.adjoint().adjoint() == x


@given(x=tck_elements(G2))
def test_expectation_of_square_is_positive(x):
    diagonal = expectation(x.adjoint() * x)
    for value in atom_values(G2, diagonal):
        assert value.value.im == 0
        assert value.value.re >= 0
    assert expectation(TckElement.from_diagonal(expectation(x))) == expectation(x)

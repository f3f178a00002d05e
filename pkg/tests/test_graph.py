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

from graphck.graph import (
    Cycle,
    Edge,
    Graph,
    GraphFormatError,
    GraphValidationError,
    load_graph,
    parse_graph,
)


def test_parse_g1(g1):
    """Parse the two-vertex graph and check its edge records."""
    assert g1.vertices == ("v", "w")
    assert len(g1.edges) == 2
    assert g1.edges["e"] == Edge("e", "v", "v")
    assert g1.edges["f"] == Edge("f", "v", "w")
    assert g1.infinite_emitters == frozenset()
    assert g1.is_terminal("w")
    assert not g1.is_terminal("v")


def test_duplicate_edge_id():
    text = (
        '{"vertices": ["u"], "edges": ['
        '{"id": "g", "range": "u", "source": "u"},'
        '{"id": "g", "range": "u", "source": "u"}]}'
    )
    with pytest.raises(GraphValidationError, match="Duplicate edge id 'g'"):
        parse_graph(text)


@pytest.mark.parametrize(
    "edge, message",
    [
        ({"id": "e", "range": "v", "source": "x"}, "undeclared source vertex 'x'"),
        ({"id": "e", "range": "x", "source": "v"}, "undeclared range vertex 'x'"),
        ({"id": "", "range": "v", "source": "v"}, "nonempty"),
    ],
)
def test_invalid_edges(edge, message):
    with pytest.raises(GraphValidationError, match=message):
        Graph.from_dict({"vertices": ["v"], "edges": [edge]})


def test_malformed_json_reports_position():
    with pytest.raises(GraphFormatError, match="line 2, column"):
        parse_graph('{"vertices": ["v"],\n "edges": [}')


@pytest.mark.parametrize(
    "data, message",
    [
        ([], "JSON object"),
        ({"vertices": ["v"]}, "missing the field 'edges'"),
        ({"vertices": "v", "edges": []}, "list of strings"),
        ({"vertices": ["v"], "edges": [{"id": "e", "range": "v"}]}, "edges\\[0\\].source"),
        ({"vertices": ["v"], "edges": [], "infinite_emitters": "v"}, "infinite_emitters"),
    ],
)
def test_format_errors(data, message):
    with pytest.raises(GraphFormatError, match=message):
        Graph.from_dict(data)


def test_unknown_infinite_emitter():
    with pytest.raises(GraphValidationError, match="infinite-emitter"):
        Graph(["v"], [], infinite_emitters=["w"])


def test_format_error_is_value_error():
    assert issubclass(GraphFormatError, ValueError)
    assert issubclass(GraphValidationError, ValueError)


def test_load_graph_and_to_dict(g1, graph_file):
    graph = load_graph(graph_file(g1.to_dict()))
    assert graph.to_dict() == g1.to_dict()
    assert str(graph).startswith("Graph:")


def test_path_composition(g1):
    """Paths compose by s(e_i) = r(e_(i+1)) and record their vertices."""
    path = g1.path(["e", "e", "f"])
    assert len(path) == 3
    assert path.range == "v"
    assert path.source == "w"
    assert path.vertices == ("v", "v", "v", "w")
    assert path.segment(1, 3) == g1.path(["e", "f"])
    assert path.prefix(2) == g1.path(["e", "e"])
    assert path.prefix(10) == path
    assert g1.path(["e"]).concat(g1.path(["f"])) == g1.path(["e", "f"])
    assert path.residual(g1.path(["e"])) == g1.path(["e", "f"])
    assert path.residual(path) == g1.vertex_path("w")


def test_path_errors(g1):
    with pytest.raises(GraphValidationError, match="do not compose"):
        g1.path(["f", "e"])
    with pytest.raises(GraphValidationError, match="Unknown edge id"):
        g1.path(["x"])
    with pytest.raises(GraphValidationError, match="expected w"):
        g1.path(["e"], base="w")
    with pytest.raises(GraphValidationError, match="base vertex"):
        g1.path([])
    with pytest.raises(ValueError, match="Cannot compose"):
        g1.path(["f"]).concat(g1.path(["e"]))
    with pytest.raises(ValueError, match="not an initial segment"):
        g1.path(["e"]).residual(g1.path(["f"]))
    with pytest.raises(ValueError, match="Invalid segment"):
        g1.path(["e"]).segment(1, 2)


def test_prefix_relation(g1):
    e, ee, f = g1.path(["e"]), g1.path(["e", "e"]), g1.path(["f"])
    v = g1.vertex_path("v")
    assert e.is_prefix_of(ee)
    assert not ee.is_prefix_of(e)
    assert v.is_prefix_of(f)
    assert not g1.vertex_path("w").is_prefix_of(f)


@pytest.mark.parametrize("text", ["@v", "@w", "e", "eef", "ef"])
def test_path_syntax(g1, text):
    assert g1.format_path(g1.parse_path(text)) == text


def test_dotted_path_syntax():
    graph = Graph(["v"], [Edge("ab", "v", "v"), Edge("c", "v", "v")])
    path = graph.parse_path("ab.c.ab")
    assert path.edges == ("ab", "c", "ab")
    assert graph.format_path(path) == "ab.c.ab"
    with pytest.raises(GraphValidationError):
        graph.parse_path("abc")


def test_cycle(g1, g2):
    cycle = Cycle(g2.path(["g", "h"]))
    assert len(cycle) == 2
    assert cycle.vertices == ("u", "u")
    with pytest.raises(ValueError, match="not a cycle"):
        Cycle(g1.path(["f"]))
    with pytest.raises(ValueError, match="nonzero length"):
        Cycle(g1.vertex_path("v"))

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
"""Hypothesis strategies over the fixture graphs."""


from hypothesis import strategies as st

from graphck.algebra import DiagElement, Scalar, TckElement, TckTerm
from graphck.graph import Graph, Path, PathSet, paths_up_to

from .graph_fixtures import make_g1, make_g2

G1 = make_g1()
G2 = make_g2()

scalars = st.builds(
    Scalar,
    st.fractions(min_value=-2, max_value=2, max_denominator=4),
    st.fractions(min_value=-2, max_value=2, max_denominator=4),
)

nonzero_scalars = scalars.filter(bool)


def paths(graph: Graph, base: str, max_length: int = 3) -> st.SearchStrategy[Path]:
    return st.sampled_from(paths_up_to(graph, base, max_length))


@st.composite
def path_sets(draw, graph: Graph, base: str, max_length: int = 3, max_size: int = 4):
    members = draw(
        st.lists(paths(graph, base, max_length), min_size=1, max_size=max_size, unique=True)
    )
    return PathSet.of(base, members)


@st.composite
def diag_elements(draw, graph: Graph, max_length: int = 3, max_terms: int = 4):
    base = draw(st.sampled_from(graph.vertices))
    pairs = draw(
        st.lists(
            st.tuples(paths(graph, base, max_length), nonzero_scalars),
            max_size=max_terms,
        )
    )
    return DiagElement.from_pairs(pairs)


@st.composite
def tck_terms(draw, graph: Graph, max_length: int = 2):
    candidates = [
        p for v in graph.vertices for p in paths_up_to(graph, v, max_length)
    ]
    mu = draw(st.sampled_from(candidates))
    nu = draw(st.sampled_from([p for p in candidates if p.source == mu.source]))
    return TckTerm(mu, nu)


@st.composite
def tck_elements(draw, graph: Graph, max_length: int = 2, max_terms: int = 3):
    pairs = draw(
        st.lists(st.tuples(tck_terms(graph, max_length), nonzero_scalars), max_size=max_terms)
    )
    return TckElement.from_pairs(pairs)

#!/usr/bin/env python3
from math import comb

import networkx as nx
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st
from sympy import Matrix, eye

from semcensus.invariants import (
    IntPolynomial,
    char_poly,
    common_neighbor_counts,
    common_neighbor_graph,
    common_neighbor_graphs,
    edge_graph,
    format_poly,
    invariant_fingerprint,
    neighborhoods,
    parse_graph_listing,
    parse_poly,
    same_edges,
)
from tests.conftest import (
    CUBE,
    OCTAHEDRON,
    PROJECTIVE_PLANE,
    RELABELLING_SETTINGS,
    TETRAHEDRON,
    TORUS,
)

PROPERTY_SETTINGS = settings(
    max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)


@st.composite
def polynomials(draw):
    degree = draw(st.integers(min_value=0, max_value=12))
    rest = draw(
        st.lists(st.integers(min_value=-999, max_value=999), min_size=degree, max_size=degree)
    )
    return IntPolynomial((1, *rest))


class TestCommonNeighbors:
    def test_neighborhoods(self):
        sets = neighborhoods(CUBE)
        assert sets[0] == frozenset({0, 1, 2, 3, 4, 5, 7})

    def test_octahedron(self):
        counts = common_neighbor_counts(OCTAHEDRON)
        assert counts[(0, 1)] == 2
        assert counts[(0, 5)] == 4
        antipodes = common_neighbor_graph(OCTAHEDRON, 4)
        assert sorted(sorted(edge) for edge in antipodes.edges) == [[0, 5], [1, 3], [2, 4]]
        assert same_edges(common_neighbor_graph(OCTAHEDRON, 2), edge_graph(OCTAHEDRON))

    def test_graphs_partition_the_pairs(self, small_map):
        graphs = common_neighbor_graphs(small_map)
        assert sorted(graphs) == list(range(small_map.n_vertices))
        assert sum(graph.number_of_edges() for graph in graphs.values()) == comb(
            small_map.n_vertices, 2
        )
        for index, graph in graphs.items():
            assert graph.graph["i"] == index
            assert same_edges(graph, common_neighbor_graph(small_map, index))

    def test_negative_index(self):
        with pytest.raises(ValueError, match="negative"):
            common_neighbor_graph(CUBE, -1)

    def test_edge_counts_of_the_catalog_maps(self, entries):
        def size(name, index):
            return common_neighbor_graph(entries[name].pmap, index).number_of_edges()

        assert (size("KO[(3,4^4)]", 6), size("KO[(3,4^4)]", 8)) == (48, 18)
        assert (size("KNO_2[(3,4^4)]", 6), size("KNO_2[(3,4^4)]", 8)) == (48, 18)
        assert (
            size("KNO_1[(3,4^4)]", 6),
            size("KNO_1[(3,4^4)]", 7),
            size("KNO_1[(3,4^4)]", 8),
        ) == (44, 8, 14)


class TestCharPoly:
    def test_tetrahedron(self):
        polynomial = char_poly(edge_graph(TETRAHEDRON))
        assert polynomial.coefficients == (1, 0, -6, -8, -3)
        assert format_poly(polynomial) == "x^4 - 6x^2 - 8x - 3"
        assert polynomial.evaluate(3) == 0
        assert polynomial.evaluate(-1) == 0

    def test_octahedron(self):
        assert format_poly(char_poly(edge_graph(OCTAHEDRON))) == "x^6 - 12x^4 - 16x^3"

    def test_degree_and_trace(self, small_map):
        polynomial = char_poly(edge_graph(small_map))
        assert polynomial.degree == small_map.n_vertices
        # trace of A is 0, trace of A^2 is twice the edge count
        assert polynomial.coefficients[1] == 0
        assert polynomial.coefficients[2] == -len(small_map.edges)

    def test_agrees_with_determinants(self, twelve_vertex_map):
        graph = edge_graph(twelve_vertex_map)
        size = twelve_vertex_map.n_vertices
        adjacency = Matrix(
            [[int(graph.has_edge(i, j)) for j in range(size)] for i in range(size)]
        )
        polynomial = char_poly(graph)
        for x in range(-2, 3):
            assert polynomial.evaluate(x) == (x * eye(size) - adjacency).det(method="bareiss")

    def test_path(self):
        polynomial = char_poly(nx.path_graph(3))
        assert polynomial.coefficients == (1, 0, -2, 0)
        assert format_poly(polynomial) == "x^3 - 2x"

    def test_empty_graph(self):
        assert char_poly(edge_graph(TETRAHEDRON).subgraph([])) == IntPolynomial((1,))

    def test_format(self):
        assert format_poly(IntPolynomial((1, -1, 0, 1, -1))) == "x^4 - x^3 + x - 1"
        assert format_poly(IntPolynomial((-2, 1))) == "-2x + 1"
        assert format_poly(IntPolynomial(())) == "0"
        assert str(IntPolynomial((1, 0, 0))) == "x^2"

    @pytest.mark.parametrize(
        "text, coefficients",
        [
            ("x^4 - 6x^2 - 8x - 3", (1, 0, -6, -8, -3)),
            ("x^{12}-48x^{10}", (1, 0, -48) + (0,) * 10),
            ("$x^2 − 1$", (1, 0, -1)),
            ("x^3", (1, 0, 0, 0)),
        ],
    )
    def test_parse(self, text, coefficients):
        assert parse_poly(text).coefficients == coefficients

    @pytest.mark.parametrize("text", ["x^2 + y", "x/2 + 1", "x^^2"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            parse_poly(text)

    @PROPERTY_SETTINGS
    @given(polynomial=polynomials())
    def test_format_then_parse(self, polynomial):
        assert parse_poly(format_poly(polynomial)) == polynomial


class TestGraphListing:
    def test_cycles_and_edges(self):
        graph = parse_graph_listing("C(0,1,2) ∪ {[3,4]}", 5)
        assert sorted(sorted(edge) for edge in graph.edges) == [[0, 1], [0, 2], [1, 2], [3, 4]]
        assert sorted(graph.nodes) == [0, 1, 2, 3, 4]

    def test_two_vertex_cycle_is_an_edge(self):
        assert sorted(parse_graph_listing("C(1,3)", 4).edges) == [(1, 3)]

    def test_empty(self):
        assert parse_graph_listing("∅", 3).number_of_edges() == 0

    def test_latex(self):
        graph = parse_graph_listing(r"C(0,1,2) \cup \{[3,4]\}", 5)
        assert graph.number_of_edges() == 4

    def test_rejects(self):
        with pytest.raises(ValueError, match="Can not read"):
            parse_graph_listing("C(0,1,2) and [3,4]", 5)
        with pytest.raises(ValueError, match="outside"):
            parse_graph_listing("[3,9]", 5)


class TestFingerprint:
    def test_fields(self):
        fingerprint = invariant_fingerprint(PROJECTIVE_PLANE)
        assert fingerprint.euler_characteristic == 1
        assert fingerprint.n_vertices == 6
        assert fingerprint.face_sizes == ((3, 10),)
        assert not fingerprint.orientable
        assert invariant_fingerprint(TORUS).orientable

    def test_json(self):
        data = invariant_fingerprint(TETRAHEDRON).to_json()
        assert data[:3] == [2, 4, [[3, 4]]]
        assert data[4] == [1, 0, -6, -8, -3]
        assert data[5] is True

    @PROPERTY_SETTINGS
    @given(images=st.permutations(list(range(8))))
    def test_relabelling_invariance(self, images):
        assert invariant_fingerprint(CUBE.relabel(images)) == invariant_fingerprint(CUBE)

    @pytest.mark.slow
    @RELABELLING_SETTINGS
    @given(images=st.permutations(list(range(12))))
    def test_relabelling_invariance_of_twelve_vertex_maps(self, images, twelve_vertex_map):
        fingerprint = invariant_fingerprint(twelve_vertex_map)
        assert invariant_fingerprint(twelve_vertex_map.relabel(images)) == fingerprint

    def test_equal_fingerprints_of_different_maps(self, entries):
        first = entries["KO_1[(3^4,4^2)]"].pmap
        second = entries["KO_2[(3^4,4^2)]"].pmap
        assert invariant_fingerprint(first) == invariant_fingerprint(second)

#!/usr/bin/env python3
"""Isomorphism invariants: edge graph, common neighbour graphs and characteristic polynomials."""
import re
from itertools import combinations
from typing import Dict, FrozenSet, List, NamedTuple, Tuple

import networkx as nx
from sympy import Matrix, Poly, Symbol
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

from semcensus.orientation import Orientability, orientability
from semcensus.polyhedralmap import Edge, PolyhedralMap, euler_characteristic

X = Symbol("x")
_TRANSFORMATIONS = standard_transformations + (implicit_multiplication_application, convert_xor)
_CYCLE_LISTING = re.compile(r"C\(([\d,\s]+)\)")
_EDGE_LISTING = re.compile(r"\[\s*(\d+)\s*,\s*(\d+)\s*\]")
_LISTING_NOISE = re.compile(r"\\allowbreak|\\cup|\\emptyset|\\\{|\\\}|[∪∅{}$,;\s]")


class IntPolynomial(NamedTuple):
    """A polynomial with integer coefficients, highest degree first."""

    coefficients: Tuple[int, ...]

    @property
    def degree(self) -> int:
        """:obj:`int`: The degree. The zero polynomial has degree ``-1``."""
        return len(self.coefficients) - 1

    def evaluate(self, value: int) -> int:
        """Evaluates the polynomial at an integer by Horner's scheme."""
        result = 0
        for coefficient in self.coefficients:
            result = result * value + coefficient
        return result

    def __str__(self) -> str:
        return format_poly(self)


def neighborhoods(pmap: PolyhedralMap) -> List[FrozenSet[int]]:
    """``N(v)``: the vertices sharing a face with ``v``, ``v`` included.

    Args:
        pmap: The map.

    Returns:
        List[FrozenSet[int]]: ``N(v)`` for every vertex ``v``.
    """
    sets: List[set] = [{vertex} for vertex in range(pmap.n_vertices)]
    for face in pmap.faces:
        for vertex in face:
            sets[vertex].update(face)
    return [frozenset(members) for members in sets]


def edge_graph(pmap: PolyhedralMap) -> nx.Graph:
    """The 1-skeleton of the map.

    Args:
        pmap: The map.

    Returns:
        :class:`networkx.Graph`: The graph on ``0..n-1`` with the face boundary edges.
    """
    graph = nx.Graph(name="edge")
    graph.add_nodes_from(range(pmap.n_vertices))
    graph.add_edges_from(pmap.edge_faces)
    return graph


def common_neighbor_counts(pmap: PolyhedralMap) -> Dict[Edge, int]:
    """``|N(u) ∩ N(v)|`` for every pair ``u < v``, not counting ``u`` and ``v`` themselves.

    This is the convention under which the published common neighbour listings of the named
    maps are reproduced.

    Args:
        pmap: The map.

    Returns:
        Dict[Tuple[int, int], int]: Mapping pair → number of common neighbours.
    """
    sets = neighborhoods(pmap)
    return {
        (u, v): len(sets[u] & sets[v] - {u, v})
        for u, v in combinations(range(pmap.n_vertices), 2)
    }


def common_neighbor_graphs(pmap: PolyhedralMap) -> Dict[int, nx.Graph]:
    """All graphs ``G_i`` for ``0 <= i <= n-1``. Their edge sets partition the vertex pairs.

    Args:
        pmap: The map.

    Returns:
        Dict[int, :class:`networkx.Graph`]: Mapping ``i`` → ``G_i``.
    """
    graphs = {}
    for index in range(pmap.n_vertices):
        graph = nx.Graph(name=f"G{index}", i=index)
        graph.add_nodes_from(range(pmap.n_vertices))
        graphs[index] = graph
    for pair, count in common_neighbor_counts(pmap).items():
        graphs[count].add_edge(*pair)
    return graphs


def common_neighbor_graph(pmap: PolyhedralMap, i: int) -> nx.Graph:
    """``G_i``: the graph joining ``u ≠ v`` if they have exactly ``i`` common neighbours.

    Args:
        pmap: The map.
        i: The number of common neighbours.

    Returns:
        :class:`networkx.Graph`: The graph on ``0..n-1``.
    """
    if i < 0:
        raise ValueError("The number of common neighbours can not be negative.")
    graph = nx.Graph(name=f"G{i}", i=i)
    graph.add_nodes_from(range(pmap.n_vertices))
    graph.add_edges_from(
        pair for pair, count in common_neighbor_counts(pmap).items() if count == i
    )
    return graph


def char_poly(graph: nx.Graph) -> IntPolynomial:
    """``det(xI - A)`` for the adjacency matrix ``A`` in node order. The Berkowitz algorithm
    used by :meth:`sympy.Matrix.charpoly` is division free, so all arithmetic stays in exact
    integers.

    Args:
        graph: The graph.

    Returns:
        :class:`IntPolynomial`: The monic characteristic polynomial of degree ``n``.
    """
    nodes = sorted(graph.nodes)
    if not nodes:
        return IntPolynomial((1,))
    index = {node: position for position, node in enumerate(nodes)}
    adjacency = Matrix.zeros(len(nodes), len(nodes))
    for u, v in graph.edges:
        adjacency[index[u], index[v]] = 1
        adjacency[index[v], index[u]] = 1
    polynomial = adjacency.charpoly(X)
    return IntPolynomial(tuple(int(coefficient) for coefficient in polynomial.all_coeffs()))


def format_poly(polynomial: IntPolynomial) -> str:
    """Renders a polynomial like ``x^12 - 36x^10 - 80x^9 + 240x^8``.

    Args:
        polynomial: The polynomial.

    Returns:
        :obj:`str`: The text.
    """
    terms = []
    degree = polynomial.degree
    for position, coefficient in enumerate(polynomial.coefficients):
        if coefficient == 0:
            continue
        power = degree - position
        magnitude = abs(coefficient)
        monomial = "" if power == 0 else ("x" if power == 1 else f"x^{power}")
        body = f"{magnitude}{monomial}" if magnitude != 1 or power == 0 else monomial
        if not terms:
            terms.append(f"-{body}" if coefficient < 0 else body)
        else:
            terms.append(f"{'-' if coefficient < 0 else '+'} {body}")
    return " ".join(terms) or "0"


def parse_poly(text: str) -> IntPolynomial:
    """Reads a polynomial in ``x`` like ``x^12 - 35x^10 - 80x^9 + 204x^8``.

    Args:
        text: The text. Braces around exponents (``x^{12}``) are accepted.

    Returns:
        :class:`IntPolynomial`: The polynomial.

    Raises:
        ValueError: If the text is not a polynomial in ``x`` with integer coefficients.
    """
    cleaned = text.replace("$", "").replace("{", "(").replace("}", ")").replace("−", "-")
    try:
        expression = parse_expr(cleaned, local_dict={"x": X}, transformations=_TRANSFORMATIONS)
        polynomial = Poly(expression, X)
    except Exception as exc:  # pylint: disable=broad-except
        raise ValueError(f"Can not read polynomial {text!r}: {exc}") from exc
    if polynomial.free_symbols - {X}:
        raise ValueError(f"{text!r} is not a polynomial in x alone.")
    coefficients = polynomial.all_coeffs()
    if any(not coefficient.is_integer for coefficient in coefficients):
        raise ValueError(f"{text!r} has non-integer coefficients.")
    return IntPolynomial(tuple(int(coefficient) for coefficient in coefficients))


def parse_graph_listing(text: str, n_vertices: int) -> nx.Graph:
    """Reads a graph written as union of cycles and edges, e.g. ``C(0,9,10) ∪ C(1,3,6)`` or
    ``{[0,2], [0,3]}``. ``∅`` is the empty graph.

    Args:
        text: The listing.
        n_vertices: Number of vertices of the graph.

    Returns:
        :class:`networkx.Graph`: The graph on ``0..n_vertices-1``.

    Raises:
        ValueError: If parts of the text can not be read.
    """
    graph = nx.Graph()
    graph.add_nodes_from(range(n_vertices))
    for match in _CYCLE_LISTING.finditer(text):
        cycle = [int(label) for label in match.group(1).split(",")]
        if len(cycle) == 2:
            graph.add_edge(*cycle)
        else:
            graph.add_edges_from(zip(cycle, cycle[1:] + cycle[:1]))
    rest = _CYCLE_LISTING.sub(" ", text)
    for match in _EDGE_LISTING.finditer(rest):
        graph.add_edge(int(match.group(1)), int(match.group(2)))
    leftover = _LISTING_NOISE.sub("", _EDGE_LISTING.sub("", rest))
    if leftover:
        raise ValueError(f"Can not read {leftover!r} in graph listing {text!r}.")
    if any(not 0 <= node < n_vertices for node in graph.nodes):
        raise ValueError(f"Graph listing {text!r} uses labels outside 0..{n_vertices - 1}.")
    return graph


def same_edges(first: nx.Graph, second: nx.Graph) -> bool:
    """Whether two graphs have the same edge set (as labelled graphs)."""
    return {frozenset(edge) for edge in first.edges} == {frozenset(edge) for edge in second.edges}


class Fingerprint(NamedTuple):
    """Relabelling invariant summary of a map. Equal fingerprints are necessary, but not
    sufficient, for isomorphism."""

    euler_characteristic: int
    n_vertices: int
    face_sizes: Tuple[Tuple[int, int], ...]
    common_neighbor_degrees: Tuple[Tuple[int, Tuple[int, ...]], ...]
    char_poly: Tuple[int, ...]
    orientable: bool

    def to_json(self) -> list:
        """The fingerprint as JSON array."""
        return [
            self.euler_characteristic,
            self.n_vertices,
            [list(pair) for pair in self.face_sizes],
            [[index, list(degrees)] for index, degrees in self.common_neighbor_degrees],
            list(self.char_poly),
            self.orientable,
        ]


def invariant_fingerprint(pmap: PolyhedralMap) -> Fingerprint:
    """Bundles χ, face sizes, the degree sequences of all ``G_i``, the characteristic
    polynomial of the edge graph and orientability.

    Args:
        pmap: A valid map.

    Returns:
        :class:`Fingerprint`: The fingerprint.
    """
    degrees = tuple(
        (index, tuple(sorted((degree for _, degree in graph.degree), reverse=True)))
        for index, graph in common_neighbor_graphs(pmap).items()
    )
    return Fingerprint(
        euler_characteristic=euler_characteristic(pmap),
        n_vertices=pmap.n_vertices,
        face_sizes=tuple(pmap.face_sizes.items()),
        common_neighbor_degrees=degrees,
        char_poly=char_poly(edge_graph(pmap)).coefficients,
        orientable=orientability(pmap) is Orientability.ORIENTABLE,
    )

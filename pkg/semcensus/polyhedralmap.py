#!/usr/bin/env python3
"""Polyhedral maps: validation, vertex links, face sequences and the Euler characteristic."""
import logging
from collections import defaultdict
from functools import cached_property
from itertools import combinations
from typing import (
    DefaultDict,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    NamedTuple,
    Sequence,
    Tuple,
)

import networkx as nx

from semcensus.constants import MIN_GON
from semcensus.error import LinkError
from semcensus.facesequence import FaceSequence, canonicalize, least_rotation
from semcensus.utils import PermutationLike, as_images

logger = logging.getLogger(__name__)

Face = Tuple[int, ...]
Edge = Tuple[int, int]
Wedge = Tuple[int, int, int]

NO_FACES = "no_faces"
BAD_FACE = "face"
BAD_EDGE = "edge"
BAD_INTERSECTION = "intersection"
BAD_LINK = "link"
DISCONNECTED = "disconnected"


def canonical_face(face: Sequence[int]) -> Face:
    """The least rotation or reflection of a face, used to compare faces as unoriented cycles.

    Args:
        face: The vertices of the face in cyclic order.

    Returns:
        Tuple[int, ...]: The canonical face.
    """
    return least_rotation(face)


def edge_key(u: int, v: int) -> Edge:
    """The undirected edge ``{u, v}`` as ordered pair."""
    return (u, v) if u < v else (v, u)


def face_edges(face: Sequence[int]) -> Iterator[Edge]:
    """Yields the boundary edges of a face."""
    for index, vertex in enumerate(face):
        yield edge_key(vertex, face[(index + 1) % len(face)])


def format_face(face: Iterable[int]) -> str:
    """Renders a face or edge like ``[0,1,2]``."""
    return "[" + ",".join(map(str, face)) + "]"


class PolyhedralMap:
    """A map given by its vertex count and faces. Instances are treated as immutable.

    Args:
        n_vertices: The vertex count. Vertices are labelled ``0..n_vertices-1``.
        faces: The faces as cyclic vertex sequences in arbitrary rotation and direction.

    Attributes:
        n_vertices: The vertex count.
        faces: The faces as given.
    """

    def __init__(self, n_vertices: int, faces: Iterable[Sequence[int]]):
        self.n_vertices = int(n_vertices)
        self.faces: Tuple[Face, ...] = tuple(tuple(int(x) for x in face) for face in faces)

    @cached_property
    def incidence(self) -> "FaceIncidence":
        """:class:`FaceIncidence`: The faces around every vertex."""
        return FaceIncidence.build(self)

    @cached_property
    def edge_faces(self) -> Dict[Edge, Tuple[int, ...]]:
        """Dict[Tuple[int, int], Tuple[int, ...]]: Mapping edge → ids of the faces containing
        it, sorted by edge."""
        owners: DefaultDict[Edge, List[int]] = defaultdict(list)
        for face_id, face in enumerate(self.faces):
            for edge in face_edges(face):
                owners[edge].append(face_id)
        return {edge: tuple(owners[edge]) for edge in sorted(owners)}

    @property
    def edges(self) -> List[Edge]:
        """List[Tuple[int, int]]: The sorted edges."""
        return list(self.edge_faces)

    @cached_property
    def face_set(self) -> FrozenSet[Face]:
        """FrozenSet[Tuple[int, ...]]: The canonical faces."""
        return frozenset(canonical_face(face) for face in self.faces)

    @property
    def face_sizes(self) -> Dict[int, int]:
        """Dict[int, int]: Mapping face size → number of faces of that size."""
        sizes: DefaultDict[int, int] = defaultdict(int)
        for face in self.faces:
            sizes[len(face)] += 1
        return dict(sorted(sizes.items()))

    def normalized(self) -> "PolyhedralMap":
        """The same map with canonical faces in sorted order (by size, then lexicographically).

        Returns:
            :class:`PolyhedralMap`: The normalized map.
        """
        return PolyhedralMap(
            self.n_vertices, sorted(self.face_set, key=lambda face: (len(face), face))
        )

    def relabel(self, permutation: PermutationLike) -> "PolyhedralMap":
        """Applies a vertex relabelling ``v ↦ π(v)`` to all faces.

        Args:
            permutation: The relabelling, as :class:`sympy.combinatorics.Permutation` or as
                sequence of images.

        Returns:
            :class:`PolyhedralMap`: The relabelled map.
        """
        images = as_images(permutation, self.n_vertices)
        return PolyhedralMap(
            self.n_vertices, (tuple(images[v] for v in face) for face in self.faces)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyhedralMap):
            return NotImplemented
        return self.n_vertices == other.n_vertices and self.face_set == other.face_set

    def __hash__(self) -> int:
        return hash((self.n_vertices, self.face_set))

    def __repr__(self) -> str:
        return f"PolyhedralMap({self.n_vertices}, {len(self.faces)} faces)"


class FaceIncidence:
    """Per-vertex index of the faces containing the vertex.

    Args:
        by_vertex: ``by_vertex[v]`` lists the pairs (face id, position of ``v`` in the face).

    Attributes:
        by_vertex: ``by_vertex[v]`` lists the pairs (face id, position of ``v`` in the face).
    """

    __slots__ = ("by_vertex",)

    def __init__(self, by_vertex: Tuple[Tuple[Tuple[int, int], ...], ...]):
        self.by_vertex = by_vertex

    @classmethod
    def build(cls, pmap: PolyhedralMap) -> "FaceIncidence":
        """Builds the index. Labels outside ``0..n-1`` are ignored.

        Args:
            pmap: The map.

        Returns:
            :class:`FaceIncidence`: The index.
        """
        by_vertex: List[List[Tuple[int, int]]] = [[] for _ in range(pmap.n_vertices)]
        for face_id, face in enumerate(pmap.faces):
            for position, vertex in enumerate(face):
                if 0 <= vertex < pmap.n_vertices:
                    by_vertex[vertex].append((face_id, position))
        return cls(tuple(tuple(entries) for entries in by_vertex))

    def faces_at(self, vertex: int) -> Tuple[Tuple[int, int], ...]:
        """The pairs (face id, position) of the faces containing ``vertex``."""
        return self.by_vertex[vertex]


class VertexLink(NamedTuple):
    """The link of a vertex as a cycle of entries (neighbour, size of the face between this
    neighbour and the next one)."""

    center: int
    cycle: Tuple[Tuple[int, int], ...]

    @property
    def neighbors(self) -> Tuple[int, ...]:
        """Tuple[int, ...]: The neighbours along the cycle."""
        return tuple(neighbor for neighbor, _ in self.cycle)

    @property
    def gons(self) -> Tuple[int, ...]:
        """Tuple[int, ...]: The face sizes along the cycle."""
        return tuple(gon for _, gon in self.cycle)


class Violation(NamedTuple):
    """A single violation of polyhedrality."""

    kind: str
    message: str


class ValidationReport:
    """The outcome of :func:`validate`.

    Args:
        violations: The violations found.

    Attributes:
        violations: The violations found.
    """

    __slots__ = ("violations",)

    def __init__(self, violations: Iterable[Violation] = ()):
        self.violations = tuple(violations)

    @property
    def ok(self) -> bool:
        """:obj:`bool`: Whether no violation was found."""
        return not self.violations

    def messages(self) -> List[str]:
        """The messages of all violations."""
        return [violation.message for violation in self.violations]

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        return f"ValidationReport({'ok' if self.ok else self.messages()})"


def wedges_at(pmap: PolyhedralMap, vertex: int) -> List[Wedge]:
    """The corners of the faces at ``vertex`` as (previous vertex, next vertex, face size).

    Args:
        pmap: The map.
        vertex: The vertex.

    Returns:
        List[Tuple[int, int, int]]: The wedges in face order.
    """
    wedges = []
    for face_id, position in pmap.incidence.faces_at(vertex):
        face = pmap.faces[face_id]
        size = len(face)
        wedges.append((face[position - 1], face[(position + 1) % size], size))
    return wedges


def link_cycle(center: int, wedges: Sequence[Wedge]) -> Tuple[Tuple[int, int], ...]:
    """Chains wedges around ``center`` into a single cycle. The walk starts at the least
    neighbour and heads towards the lesser of its two adjacent neighbours.

    Args:
        center: The vertex the wedges belong to.
        wedges: The wedges.

    Returns:
        Tuple[Tuple[int, int], ...]: The cycle of (neighbour, face size) entries.

    Raises:
        LinkError: If the wedges do not form a single cycle.
    """
    if not wedges:
        raise LinkError(center, "the vertex lies on no face")
    by_neighbor: DefaultDict[int, List[int]] = defaultdict(list)
    for index, (before, after, _) in enumerate(wedges):
        by_neighbor[before].append(index)
        by_neighbor[after].append(index)
    for neighbor, indices in sorted(by_neighbor.items()):
        if len(indices) != 2:
            raise LinkError(center, f"neighbour {neighbor} lies on {len(indices)} of its faces")

    def far_end(index: int, near: int) -> int:
        before, after, _ = wedges[index]
        return after if before == near else before

    start = min(by_neighbor)
    index = min(by_neighbor[start], key=lambda candidate: far_end(candidate, start))
    current = start
    used = set()
    cycle = []
    while index not in used:
        used.add(index)
        cycle.append((current, wedges[index][2]))
        current = far_end(index, current)
        first, second = by_neighbor[current]
        index = second if first == index else first
    if len(used) != len(wedges) or current != start:
        raise LinkError(center, "its faces do not close into a single cycle")
    return tuple(cycle)


def vertex_link(pmap: PolyhedralMap, vertex: int) -> VertexLink:
    """The link of a vertex.

    Args:
        pmap: The map.
        vertex: The vertex.

    Returns:
        :class:`VertexLink`: The link.

    Raises:
        LinkError: If the faces at ``vertex`` do not close into a single cycle.
    """
    if not 0 <= vertex < pmap.n_vertices:
        raise LinkError(vertex, f"not a vertex of a map on {pmap.n_vertices} vertices")
    return VertexLink(vertex, link_cycle(vertex, wedges_at(pmap, vertex)))


def face_sequence_at(pmap: PolyhedralMap, vertex: int) -> FaceSequence:
    """The canonical face sequence at a vertex."""
    return canonicalize(vertex_link(pmap, vertex).gons)


def is_sem(pmap: PolyhedralMap, t: FaceSequence) -> bool:
    """Whether every vertex of the map has the face sequence ``t``.

    Args:
        pmap: A valid map.
        t: The type.

    Returns:
        :obj:`bool`: Whether the map is a semi-equivelar map of type ``t``.
    """
    return all(face_sequence_at(pmap, vertex) == t for vertex in range(pmap.n_vertices))


def euler_characteristic(pmap: PolyhedralMap) -> int:
    """``V - E + F``."""
    return pmap.n_vertices - len(pmap.edge_faces) + len(pmap.faces)


def _adjacent_in(face: Face, u: int, w: int) -> bool:
    position = face.index(u)
    size = len(face)
    return w in (face[position - 1], face[(position + 1) % size])


def _face_violations(pmap: PolyhedralMap) -> List[Violation]:
    violations = []
    for face in pmap.faces:
        if len(face) < MIN_GON:
            violations.append(
                Violation(BAD_FACE, f"face {format_face(face)} has fewer than {MIN_GON} vertices")
            )
        elif len(set(face)) != len(face):
            violations.append(Violation(BAD_FACE, f"face {format_face(face)} repeats a vertex"))
        outside = [vertex for vertex in face if not 0 <= vertex < pmap.n_vertices]
        if outside:
            violations.append(
                Violation(
                    BAD_FACE,
                    f"face {format_face(face)} uses label {outside[0]} outside "
                    f"0..{pmap.n_vertices - 1}",
                )
            )
    return violations


def _intersection_violations(pmap: PolyhedralMap) -> List[Violation]:
    violations = []
    checked = set()
    for vertex in range(pmap.n_vertices):
        face_ids = sorted({face_id for face_id, _ in pmap.incidence.faces_at(vertex)})
        for first, second in combinations(face_ids, 2):
            if (first, second) in checked:
                continue
            checked.add((first, second))
            one, other = pmap.faces[first], pmap.faces[second]
            shared = sorted(set(one) & set(other))
            if len(shared) > 2:
                violations.append(
                    Violation(
                        BAD_INTERSECTION,
                        f"faces {format_face(one)} and {format_face(other)} share "
                        f"{len(shared)} vertices",
                    )
                )
            elif len(shared) == 2:
                u, w = shared
                if not (_adjacent_in(one, u, w) and _adjacent_in(other, u, w)):
                    violations.append(
                        Violation(
                            BAD_INTERSECTION,
                            f"faces {format_face(one)} and {format_face(other)} meet in "
                            f"non-edge {format_face(shared)}",
                        )
                    )
    return violations


def validate(pmap: PolyhedralMap) -> ValidationReport:
    """Checks that the faces form a connected closed surface whose faces pairwise meet in at
    most a vertex or an edge.

    Violations are collected, not raised. Once a face is malformed (too short, repeating a
    vertex or using a label out of range) the remaining checks are skipped.

    Args:
        pmap: The map.

    Returns:
        :class:`ValidationReport`: The report.
    """
    if pmap.n_vertices <= 0 or not pmap.faces:
        return ValidationReport([Violation(NO_FACES, "no faces")])

    violations = _face_violations(pmap)
    if violations:
        return ValidationReport(violations)

    for edge, owners in pmap.edge_faces.items():
        if len(owners) == 1:
            violations.append(Violation(BAD_EDGE, f"edge {format_face(edge)} in one face"))
        elif len(owners) > 2:
            violations.append(
                Violation(BAD_EDGE, f"edge {format_face(edge)} on {len(owners)} faces")
            )

    violations.extend(_intersection_violations(pmap))

    for vertex in range(pmap.n_vertices):
        if not pmap.incidence.faces_at(vertex):
            violations.append(Violation(BAD_LINK, f"vertex {vertex} lies on no face"))
            continue
        try:
            link_cycle(vertex, wedges_at(pmap, vertex))
        except LinkError:
            violations.append(
                Violation(BAD_LINK, f"link of vertex {vertex} is not a single cycle")
            )

    graph = nx.Graph()
    graph.add_nodes_from(range(pmap.n_vertices))
    graph.add_edges_from(pmap.edge_faces)
    components = nx.number_connected_components(graph)
    if components > 1:
        violations.append(
            Violation(DISCONNECTED, f"map is disconnected ({components} components)")
        )

    if violations:
        logger.debug("Map %r violates polyhedrality: %s", pmap, violations)
    return ValidationReport(violations)

#!/usr/bin/env python3
"""Canonical forms of polyhedral maps and isomorphism testing.

A flag is a face together with a starting vertex on it and a direction. Starting from a flag,
a breadth first walk over the faces labels the vertices in the order they are met. Faces are
entered through the edge they share with an already visited face, starting at the shared
vertex that comes first and heading towards the other one, so the walk is determined by the
flag alone. The canonical form is the least relabelled face list over all flags.
"""
import logging
from collections import deque
from typing import Iterator, List, NamedTuple, Optional, Tuple

from sympy.combinatorics import Permutation

from semcensus.invariants import invariant_fingerprint
from semcensus.polyhedralmap import Face, PolyhedralMap, canonical_face, edge_key
from semcensus.utils import PermutationLike, as_images

logger = logging.getLogger(__name__)

Flag = Tuple[int, int, int]
Encoding = Tuple[Face, ...]


class CanonicalForm(NamedTuple):
    """Result of :func:`canonical_form`.

    Attributes:
        encoding: The sorted canonical faces of the relabelled map. Equal for isomorphic maps.
        labelling: The relabelling from the original labels to the canonical ones.
    """

    encoding: Encoding
    labelling: Permutation

    @property
    def n_vertices(self) -> int:
        """:obj:`int`: Number of vertices."""
        return self.labelling.size

    def to_map(self) -> PolyhedralMap:
        """The canonically labelled map."""
        return PolyhedralMap(self.n_vertices, self.encoding)


def flags(pmap: PolyhedralMap) -> Iterator[Flag]:
    """Yields all flags (face id, position, direction ``±1``) of a map."""
    for face_id, face in enumerate(pmap.faces):
        for position in range(len(face)):
            yield face_id, position, 1
            yield face_id, position, -1


def flag_labelling(pmap: PolyhedralMap, flag: Flag) -> List[int]:
    """The labelling obtained by walking the map from a flag.

    Args:
        pmap: A valid connected map.
        flag: The starting flag.

    Returns:
        List[int]: ``labels[v]`` is the new label of ``v``.

    Raises:
        ValueError: If the walk does not reach every vertex.
    """
    labels = [-1] * pmap.n_vertices
    next_label = 0
    visited = set()
    queue = deque([flag])
    while queue:
        face_id, position, direction = queue.popleft()
        if face_id in visited:
            continue
        visited.add(face_id)
        face = pmap.faces[face_id]
        size = len(face)
        walk = [face[(position + direction * step) % size] for step in range(size)]
        for vertex in walk:
            if labels[vertex] < 0:
                labels[vertex] = next_label
                next_label += 1
        for index, u in enumerate(walk):
            w = walk[(index + 1) % size]
            for other in pmap.edge_faces[edge_key(u, w)]:
                if other in visited:
                    continue
                neighbor = pmap.faces[other]
                start = neighbor.index(u)
                heading = 1 if neighbor[(start + 1) % len(neighbor)] == w else -1
                queue.append((other, start, heading))
    if next_label != pmap.n_vertices:
        raise ValueError("Canonical forms need a connected map without isolated vertices.")
    return labels


def encode(pmap: PolyhedralMap, labels: List[int]) -> Encoding:
    """The sorted canonical faces of the map relabelled by ``labels``."""
    return tuple(sorted(canonical_face([labels[v] for v in face]) for face in pmap.faces))


def minimal_labellings(pmap: PolyhedralMap) -> Tuple[Encoding, List[List[int]]]:
    """All flag labellings that produce the least encoding.

    Args:
        pmap: A valid connected map.

    Returns:
        Tuple[Encoding, List[List[int]]]: The least encoding and the labellings producing it,
        in flag order. Two of them differ by an automorphism.
    """
    best: Optional[Encoding] = None
    winners: List[List[int]] = []
    for flag in flags(pmap):
        labels = flag_labelling(pmap, flag)
        encoding = encode(pmap, labels)
        if best is None or encoding < best:
            best = encoding
            winners = [labels]
        elif encoding == best:
            winners.append(labels)
    if best is None:
        raise ValueError("The map has no faces.")
    return best, winners


def canonical_form(pmap: PolyhedralMap) -> CanonicalForm:
    """The canonical form of a map.

    Args:
        pmap: A valid connected map.

    Returns:
        :class:`CanonicalForm`: The canonical form. Relabelling ``pmap`` by the returned
        labelling gives a map whose canonical faces are exactly the encoding.
    """
    encoding, labellings = minimal_labellings(pmap)
    return CanonicalForm(encoding, Permutation(labellings[0]))


def check_witness(first: PolyhedralMap, second: PolyhedralMap, witness: PermutationLike) -> bool:
    """Whether ``witness`` maps the faces of ``first`` exactly onto those of ``second``.

    Args:
        first: A map.
        second: A map.
        witness: A vertex relabelling of ``first``.

    Returns:
        :obj:`bool`: Whether the relabelling is an isomorphism.
    """
    if first.n_vertices != second.n_vertices:
        return False
    try:
        images = as_images(witness, first.n_vertices)
    except ValueError:
        return False
    return first.relabel(images).face_set == second.face_set


def are_isomorphic(first: PolyhedralMap, second: PolyhedralMap) -> Optional[Permutation]:
    """Decides isomorphism of two maps. Cheap invariants are compared first.

    Args:
        first: A valid connected map.
        second: A valid connected map.

    Returns:
        :class:`sympy.combinatorics.Permutation` | None: A relabelling of ``first`` onto
        ``second`` or ``None`` if the maps are not isomorphic.
    """
    if first.n_vertices != second.n_vertices or first.face_sizes != second.face_sizes:
        return None
    if invariant_fingerprint(first) != invariant_fingerprint(second):
        logger.debug("Fingerprints of %r and %r differ", first, second)
        return None
    one, other = canonical_form(first), canonical_form(second)
    if one.encoding != other.encoding:
        return None
    # sympy composes left to right: first `one.labelling`, then the inverse of the other
    witness = one.labelling * (~other.labelling)
    if not check_witness(first, second, witness):
        raise AssertionError("Canonical labellings produced an invalid witness.")
    return witness

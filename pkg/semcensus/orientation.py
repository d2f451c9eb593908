#!/usr/bin/env python3
"""Orientability of polyhedral maps."""
import enum
from collections import deque
from typing import List, Optional

from semcensus.polyhedralmap import Face, PolyhedralMap, edge_key


class Orientability(enum.Enum):
    """Whether the surface of a map is orientable."""

    ORIENTABLE = "orientable"
    NON_ORIENTABLE = "non-orientable"

    def __str__(self) -> str:
        return self.value


def _traverses(face: Face, u: int, w: int) -> bool:
    # whether the face, in stored order, runs from u to w
    position = face.index(u)
    return face[(position + 1) % len(face)] == w


def orientation_signs(pmap: PolyhedralMap) -> Optional[List[int]]:
    """Propagates an orientation over the faces by breadth first search. Faces sharing an edge
    must run through it in opposite directions.

    Args:
        pmap: A valid map.

    Returns:
        List[int] | None: ``+1`` or ``-1`` per face, telling whether the face keeps its stored
        direction. ``None`` if no coherent orientation exists.
    """
    signs = [0] * len(pmap.faces)
    for root in range(len(pmap.faces)):
        if signs[root]:
            continue
        signs[root] = 1
        queue = deque([root])
        while queue:
            face_id = queue.popleft()
            face = pmap.faces[face_id]
            for index, u in enumerate(face):
                w = face[(index + 1) % len(face)]
                for other in pmap.edge_faces[edge_key(u, w)]:
                    if other == face_id:
                        continue
                    same = _traverses(pmap.faces[other], u, w)
                    wanted = -signs[face_id] if same else signs[face_id]
                    if not signs[other]:
                        signs[other] = wanted
                        queue.append(other)
                    elif signs[other] != wanted:
                        return None
    return signs


def orientability(pmap: PolyhedralMap) -> Orientability:
    """Decides orientability of the surface of a map.

    Args:
        pmap: A valid map.

    Returns:
        :class:`Orientability`: The verdict.
    """
    if orientation_signs(pmap) is None:
        return Orientability.NON_ORIENTABLE
    return Orientability.ORIENTABLE


def oriented_faces(pmap: PolyhedralMap) -> List[Face]:
    """The faces of an orientable map, each written in the direction of a coherent orientation.

    Args:
        pmap: A valid orientable map.

    Returns:
        List[Tuple[int, ...]]: The faces. Every edge is traversed once in each direction.

    Raises:
        ValueError: If the map is not orientable.
    """
    signs = orientation_signs(pmap)
    if signs is None:
        raise ValueError("The map is not orientable.")
    return [face if sign > 0 else face[::-1] for face, sign in zip(pmap.faces, signs)]

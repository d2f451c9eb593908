#!/usr/bin/env python3
"""Reading and writing vertex links in the bracket notation ``C8(2,3,4,[5,6,7],[7,8,1])``.

A link is written as ``C<n>(...)`` where the tokens are single vertices or bracket groups.
Concatenating the tokens, with a vertex repeated at a group boundary written once, gives the
cyclic sequence of the ``n`` link vertices. A group ``[x,...,y]`` stands for the face through
the center, ``x``, ..., ``y``. Two consecutive link vertices that are not consecutive inside a
group span a triangle with the center.
"""
import re
from typing import Dict, FrozenSet, List, Mapping, Set, Union

from semcensus.error import LinkError
from semcensus.polyhedralmap import Face, PolyhedralMap, canonical_face, vertex_link

_LINK = re.compile(r"^C_?\{?(\d+)\}?\((.*)\)$")
_TOKEN = re.compile(r"\[([^\[\]]*)\]|(\d+)")

Token = Union[int, List[int]]


def _tokens(center: int, body: str) -> List[Token]:
    tokens: List[Token] = []
    position = 0
    for match in _TOKEN.finditer(body):
        if body[position : match.start()].strip(", "):
            raise LinkError(center, f"unexpected text {body[position:match.start()]!r}")
        position = match.end()
        if match.group(2) is not None:
            tokens.append(int(match.group(2)))
            continue
        try:
            group = [int(label) for label in match.group(1).split(",")]
        except ValueError as exc:
            raise LinkError(center, f"can not read group [{match.group(1)}]") from exc
        if len(group) < 2:
            raise LinkError(center, f"group [{match.group(1)}] needs at least two vertices")
        tokens.append(group)
    if body[position:].strip(", "):
        raise LinkError(center, f"unexpected text {body[position:]!r}")
    if not tokens:
        raise LinkError(center, "empty link")
    return tokens


def parse_link(center: int, text: str) -> List[Face]:
    """The faces around ``center`` described by a link in bracket notation.

    Args:
        center: The vertex the link belongs to.
        text: The link, e.g. ``C9([4,5,6],[6,7,8],[8,9,1],[1,2,3])``.

    Returns:
        List[Tuple[int, ...]]: The faces, each starting with ``center``. Groups come first, in
        the order written, followed by the triangles.

    Raises:
        LinkError: If the text is malformed or ``C<n>`` does not match the number of link
            vertices.
    """
    match = _LINK.match(re.sub(r"\s+", "", text))
    if not match:
        raise LinkError(center, f"can not read {text!r}")
    expected = int(match.group(1))
    tokens = _tokens(center, match.group(2))

    sequence: List[int] = []
    group_pairs: Set[FrozenSet[int]] = set()
    faces: List[Face] = []
    for token in tokens:
        labels = token if isinstance(token, list) else [token]
        if isinstance(token, list):
            faces.append((center, *token))
            group_pairs.update(frozenset(pair) for pair in zip(token, token[1:]))
        for label in labels:
            if not sequence or sequence[-1] != label:
                sequence.append(label)
    if len(sequence) > 1 and sequence[-1] == sequence[0]:
        sequence.pop()

    if len(sequence) != expected:
        raise LinkError(center, f"C{expected} announced but {len(sequence)} vertices listed")
    if len(set(sequence)) != len(sequence) or center in sequence:
        raise LinkError(center, "a vertex occurs twice")

    for index, label in enumerate(sequence):
        following = sequence[(index + 1) % len(sequence)]
        if frozenset((label, following)) not in group_pairs:
            faces.append((center, label, following))
    return faces


def format_link(pmap: PolyhedralMap, vertex: int) -> str:
    """Writes the link of a vertex in bracket notation. Faces with more than three vertices
    become groups, triangles are implied by consecutive vertices.

    Args:
        pmap: A valid map.
        vertex: The vertex.

    Returns:
        :obj:`str`: The link, such that :func:`parse_link` gives back the faces at ``vertex``.
    """
    cycle = vertex_link(pmap, vertex).cycle
    corners: Dict[FrozenSet[int], Face] = {}
    for face_id, position in pmap.incidence.faces_at(vertex):
        face = pmap.faces[face_id]
        size = len(face)
        # the face read from the neighbour after `vertex` around to the one before it
        path = tuple(face[(position + step) % size] for step in range(1, size))
        corners[frozenset((path[0], path[-1]))] = path

    tokens = []
    for index, (neighbor, gon) in enumerate(cycle):
        following = cycle[(index + 1) % len(cycle)][0]
        if gon == 3:
            if cycle[index - 1][1] == 3:
                tokens.append(str(neighbor))
            continue
        path = corners[frozenset((neighbor, following))]
        if path[0] != neighbor:
            path = path[::-1]
        tokens.append("[" + ",".join(map(str, path)) + "]")
    length = sum(gon - 2 for _, gon in cycle)
    return f"C{length}(" + ",".join(tokens) + ")"


def faces_from_links(links: Mapping[int, str]) -> List[Face]:
    """The union of the faces described by a family of links.

    Args:
        links: Mapping center → link in bracket notation.

    Returns:
        List[Tuple[int, ...]]: The distinct canonical faces, sorted.
    """
    faces = set()
    for center, text in links.items():
        faces.update(canonical_face(face) for face in parse_link(center, text))
    return sorted(faces, key=lambda face: (len(face), face))

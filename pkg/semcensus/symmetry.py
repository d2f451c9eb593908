#!/usr/bin/env python3
"""Automorphism groups of maps, group identification, orbits and orientability."""
import logging
from collections import Counter, deque
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Tuple, Union

from sympy.combinatorics import Permutation, PermutationGroup

from semcensus.constants import BURNSIDE_ORDER_LIMIT, DEFAULT_GROUP_ORDER_CAP
from semcensus.error import GroupTooLargeError, NotAnAutomorphismError
from semcensus.isomorphism import check_witness, minimal_labellings
from semcensus.orientation import Orientability, orientability
from semcensus.polyhedralmap import Face, PolyhedralMap, canonical_face, format_face
from semcensus.utils import format_cycles

__all__ = (
    "ElementOrders",
    "GroupId",
    "Orbit",
    "Orientability",
    "automorphism_group",
    "automorphisms",
    "burnside_face_orbit_count",
    "face_orbits",
    "identify_group",
    "isohedral_number",
    "orbits",
    "orientability",
    "vertex_orbits",
    "vertex_transitive",
)

logger = logging.getLogger(__name__)

ElementOrders = Tuple[Tuple[int, int], ...]

# (order, abelian, element order multiset) → name
_KNOWN_GROUPS: Dict[Tuple[int, bool, ElementOrders], str] = {
    (1, True, ((1, 1),)): "trivial",
    (2, True, ((1, 1), (2, 1))): "Z2",
    (3, True, ((1, 1), (3, 2))): "Z3",
    (4, True, ((1, 1), (2, 1), (4, 2))): "Z4",
    (4, True, ((1, 1), (2, 3))): "Z2×Z2",
    (6, True, ((1, 1), (2, 1), (3, 2), (6, 2))): "Z6",
    (12, False, ((1, 1), (2, 7), (3, 2), (6, 2))): "D6(order 12)",
    (12, True, ((1, 1), (2, 1), (3, 2), (4, 2), (6, 2), (12, 4))): "Z12",
    (12, True, ((1, 1), (2, 3), (3, 2), (6, 6))): "Z2×Z2×Z3",
    (24, False, ((1, 1), (2, 9), (3, 8), (4, 6))): "S4",
}


class GroupId(NamedTuple):
    """Identification of a permutation group up to isomorphism.

    Attributes:
        name: The name, or ``other(...)`` if the group is none of the known ones.
        order: The group order.
        abelian: Whether the group is abelian.
        element_orders: Pairs (element order, number of elements of that order).
    """

    name: str
    order: int
    abelian: bool
    element_orders: ElementOrders

    def __str__(self) -> str:
        return self.name


class Orbit(NamedTuple):
    """An orbit with its least element as representative."""

    representative: Union[int, Face]
    size: int

    def __str__(self) -> str:
        if isinstance(self.representative, tuple):
            return f"{format_face(self.representative)}_{self.size}"
        return f"{self.representative}_{self.size}"


def automorphisms(pmap: PolyhedralMap) -> List[Permutation]:
    """All automorphisms of a map, sorted by their image lists.

    Every flag whose walk reproduces the canonical encoding yields one automorphism, see
    :mod:`semcensus.isomorphism`.

    Args:
        pmap: A valid connected map.

    Returns:
        List[:class:`sympy.combinatorics.Permutation`]: The automorphisms, identity first.
    """
    _, labellings = minimal_labellings(pmap)
    reference = labellings[0]
    inverses = []
    for labels in labellings:
        inverse = [0] * pmap.n_vertices
        for vertex, label in enumerate(labels):
            inverse[label] = vertex
        inverses.append(inverse)
    size = pmap.n_vertices
    elements = {tuple(inverse[reference[v]] for v in range(size)) for inverse in inverses}
    return [Permutation(list(images)) for images in sorted(elements)]


def automorphism_group(pmap: PolyhedralMap) -> PermutationGroup:
    """The automorphism group of a map.

    Generators are picked greedily from the sorted automorphisms: an element becomes a
    generator unless the group generated so far already contains it.

    Args:
        pmap: A valid connected map.

    Returns:
        :class:`sympy.combinatorics.PermutationGroup`: The group acting on ``0..n-1``.
    """
    elements = automorphisms(pmap)
    generators: List[Permutation] = []
    group = PermutationGroup([Permutation(list(range(pmap.n_vertices)))])
    for element in elements:
        if element.is_Identity or group.contains(element):
            continue
        generators.append(element)
        group = PermutationGroup(generators)
    if group.order() != len(elements):
        raise AssertionError(
            f"Generated group has order {group.order()}, found {len(elements)} automorphisms."
        )
    logger.debug(
        "Aut(%r) has order %d, generators %s",
        pmap,
        len(elements),
        [format_cycles(generator) for generator in generators],
    )
    return group


def identify_group(
    group: PermutationGroup, cap: int = DEFAULT_GROUP_ORDER_CAP
) -> GroupId:
    """Names a group by its order, commutativity and the multiset of element orders.

    This data separates all groups listed in ``_KNOWN_GROUPS``. Groups with the same data as
    a known group but a different structure do not occur among the orders up to 24 listed
    there.

    Args:
        group: The group.
        cap: Optional. Largest order that is identified.

    Returns:
        :class:`GroupId`: The identification.

    Raises:
        GroupTooLargeError: If the order exceeds ``cap``.
    """
    order = int(group.order())
    if order > cap:
        raise GroupTooLargeError(order, cap)
    element_orders = tuple(
        sorted(Counter(int(element.order()) for element in group.generate()).items())
    )
    abelian = bool(group.is_abelian)
    name = _KNOWN_GROUPS.get((order, abelian, element_orders))
    if name is None:
        counts = ",".join(f"{value}:{count}" for value, count in element_orders)
        name = f"other(order={order},abelian={str(abelian).lower()},orders={counts})"
    return GroupId(name, order, abelian, element_orders)


def _closure_orbits(items: List[Face], generators: List[Permutation]) -> List[Orbit]:
    remaining = set(items)
    result = []
    for start in sorted(items, key=lambda face: (len(face), face)):
        if start not in remaining:
            continue
        members = {start}
        queue = deque([start])
        while queue:
            face = queue.popleft()
            for generator in generators:
                image = canonical_face([generator(vertex) for vertex in face])
                if image not in members:
                    members.add(image)
                    queue.append(image)
        remaining -= members
        result.append(Orbit(min(members), len(members)))
    return result


def vertex_orbits(group: PermutationGroup) -> List[Orbit]:
    """The orbits of a group on the vertices, sorted by representative."""
    return sorted(
        (Orbit(min(orbit), len(orbit)) for orbit in group.orbits()),
        key=lambda orbit: orbit.representative,
    )


def face_orbits(group: PermutationGroup, pmap: PolyhedralMap) -> List[Orbit]:
    """The orbits of a group of automorphisms on the faces of a map.

    Args:
        group: The group.
        pmap: The map.

    Returns:
        List[:class:`Orbit`]: The orbits with canonical least faces as representatives, sorted
        by face size and then by representative.

    Raises:
        NotAnAutomorphismError: If a generator is not an automorphism of ``pmap``.
    """
    for generator in group.generators:
        if not check_witness(pmap, pmap, generator):
            raise NotAnAutomorphismError(format_cycles(generator))
    return _closure_orbits(sorted(pmap.face_set), list(group.generators))


def orbits(
    group: PermutationGroup, action: str = "vertices", pmap: Optional[PolyhedralMap] = None
) -> List[Orbit]:
    """The orbits of a group on the vertices or on the faces of a map.

    Args:
        group: The group.
        action: Optional. ``"vertices"`` or ``"faces"``.
        pmap: The map. Required for the face action.

    Returns:
        List[:class:`Orbit`]: The orbits.

    Raises:
        NotAnAutomorphismError: If acting on faces with a non-automorphism.
    """
    if action == "vertices":
        return vertex_orbits(group)
    if action == "faces":
        if pmap is None:
            raise ValueError("The face action needs a map.")
        return face_orbits(group, pmap)
    raise ValueError(f"Unknown action {action!r}.")


def vertex_transitive(pmap: PolyhedralMap, group: Optional[PermutationGroup] = None) -> bool:
    """Whether the automorphism group acts transitively on the vertices."""
    if group is None:
        group = automorphism_group(pmap)
    return len(vertex_orbits(group)) == 1


def isohedral_number(pmap: PolyhedralMap, group: Optional[PermutationGroup] = None) -> int:
    """The number of face orbits under the automorphism group. A map with ``k`` face orbits is
    called ``k``-isohedral."""
    if group is None:
        group = automorphism_group(pmap)
    return len(face_orbits(group, pmap))


def burnside_face_orbit_count(group: PermutationGroup, pmap: PolyhedralMap) -> Fraction:
    """The number of face orbits by Burnside's lemma: the average number of fixed faces.

    Args:
        group: A group of automorphisms of ``pmap``.
        pmap: The map.

    Returns:
        :class:`fractions.Fraction`: The orbit count. An integer for a group of automorphisms.

    Raises:
        GroupTooLargeError: If the group has more than
            :attr:`semcensus.constants.BURNSIDE_ORDER_LIMIT` elements.
    """
    order = int(group.order())
    if order > BURNSIDE_ORDER_LIMIT:
        raise GroupTooLargeError(order, BURNSIDE_ORDER_LIMIT)
    faces = pmap.face_set
    fixed = 0
    for element in group.generate():
        fixed += sum(
            1 for face in faces if canonical_face([element(vertex) for vertex in face]) == face
        )
    return Fraction(fixed, order)

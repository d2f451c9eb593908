#!/usr/bin/env python3
import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import SymmetricGroup

from semcensus.error import GroupTooLargeError, NotAnAutomorphismError
from semcensus.isomorphism import check_witness
from semcensus.symmetry import (
    Orbit,
    automorphism_group,
    automorphisms,
    burnside_face_orbit_count,
    face_orbits,
    identify_group,
    isohedral_number,
    orbits,
    vertex_orbits,
    vertex_transitive,
)
from tests.conftest import (
    CUBE,
    OCTAHEDRON,
    PRISM,
    PROJECTIVE_PLANE,
    RELABELLING_SETTINGS,
    TETRAHEDRON,
    TORUS,
)


def orbit_sizes(orbit_list):
    return sorted(orbit.size for orbit in orbit_list)


class TestAutomorphisms:
    @pytest.mark.parametrize(
        "pmap, order",
        [
            (TETRAHEDRON, 24),
            (OCTAHEDRON, 48),
            (CUBE, 48),
            (PRISM, 12),
            (PROJECTIVE_PLANE, 60),
            (TORUS, 42),
        ],
    )
    def test_orders(self, pmap, order):
        elements = automorphisms(pmap)
        assert len(elements) == order
        assert elements[0].is_Identity
        assert automorphism_group(pmap).order() == order

    def test_elements_are_automorphisms(self, small_map):
        for element in automorphisms(small_map):
            assert check_witness(small_map, small_map, element)

    def test_generators(self, catalog):
        for entry in catalog:
            group = automorphism_group(entry.pmap)
            assert not any(generator.is_Identity for generator in group.generators)
            assert PermutationGroup(group.generators).order() == len(automorphisms(entry.pmap))

    @pytest.mark.slow
    @RELABELLING_SETTINGS
    @given(images=st.permutations(list(range(12))))
    def test_order_is_invariant_under_relabelling(self, images, twelve_vertex_map):
        order = automorphism_group(twelve_vertex_map).order()
        assert automorphism_group(twelve_vertex_map.relabel(images)).order() == order


class TestIdentifyGroup:
    @pytest.mark.parametrize(
        "pmap, name",
        [(TETRAHEDRON, "S4"), (PRISM, "D6(order 12)")],
    )
    def test_known(self, pmap, name):
        assert identify_group(automorphism_group(pmap)).name == name

    def test_unknown(self):
        group = identify_group(automorphism_group(CUBE))
        assert group.order == 48
        assert not group.abelian
        assert group.name.startswith("other(order=48,abelian=false,orders=1:1,")
        assert str(group) == group.name

    def test_cyclic_groups(self):
        assert identify_group(PermutationGroup([Permutation([[0, 1, 2, 3]])])).name == "Z4"
        assert identify_group(PermutationGroup([Permutation([[0, 1]], size=4)])).name == "Z2"
        assert identify_group(PermutationGroup([Permutation(list(range(3)))])).name == "trivial"

    def test_cap(self):
        with pytest.raises(GroupTooLargeError) as info:
            identify_group(automorphism_group(CUBE), cap=47)
        assert (info.value.order, info.value.cap) == (48, 47)

    def test_catalog_groups(self, catalog):
        for entry in catalog:
            group = automorphism_group(entry.pmap)
            assert identify_group(group).name == entry.expected["group"], entry.name
            assert group.order() == entry.expected["aut_order"], entry.name

    def test_element_orders(self, entries):
        group = identify_group(automorphism_group(entries["KNO_3[(3^3,4,3,4)]"].pmap))
        assert dict(group.element_orders) == {1: 1, 2: 1, 4: 2}


class TestOrbits:
    def test_orbit_rendering(self):
        assert str(Orbit((0, 1, 2), 4)) == "[0,1,2]_4"
        assert str(Orbit(3, 2)) == "3_2"

    def test_vertex_transitive_map(self, transitive_map):
        group = automorphism_group(transitive_map)
        assert identify_group(group).name == "S4"
        assert vertex_transitive(transitive_map, group)
        assert [str(orbit) for orbit in face_orbits(group, transitive_map)] == [
            "[0,1,2]_4",
            "[0,1,3]_12",
            "[0,3,9,8]_6",
        ]
        assert isohedral_number(transitive_map) == 3

    def test_face_orbits_of_a_catalog_map(self, entries):
        pmap = entries["KNO_1[(3,4^4)]"].pmap
        group = automorphism_group(pmap)
        assert [str(orbit) for orbit in face_orbits(group, pmap)] == [
            "[0,3,4]_2",
            "[1,9,10]_2",
            "[0,1,2,3]_4",
            "[0,1,9,8]_2",
            "[1,2,11,6]_4",
            "[2,5,10,11]_2",
        ]
        assert orbit_sizes(vertex_orbits(group)) == [2, 2, 4, 4]
        assert not vertex_transitive(pmap, group)

    @pytest.mark.parametrize(
        "name, faces",
        [
            ("KNO_2[(3,4^4)]", ["[0,3,4]_4", "[0,1,2,3]_12"]),
            ("KO_1[(3^4,4^2)]", ["[0,1,2]_12", "[0,2,3]_4", "[0,1,8,7]_6"]),
            ("KO_2[(3^4,4^2)]", ["[0,1,2]_12", "[0,3,4]_4", "[0,1,8,7]_6"]),
        ],
    )
    def test_published_face_orbits(self, entries, name, faces):
        pmap = entries[name].pmap
        assert [str(orbit) for orbit in face_orbits(automorphism_group(pmap), pmap)] == faces

    @pytest.mark.parametrize(
        "name, sizes",
        [
            ("KNO[(3^4,4^2)]", [4, 4, 4]),
            ("KO_1[(3^3,4,3,4)]", [2] * 6),
            ("KNO_1[(3^3,4,3,4)]", [1, 1, 2, 2, 2, 2, 2]),
            ("KNO_3[(3^3,4,3,4)]", [4, 4, 4]),
        ],
    )
    def test_vertex_orbit_sizes(self, entries, name, sizes):
        assert orbit_sizes(vertex_orbits(automorphism_group(entries[name].pmap))) == sizes

    def test_catalog_isohedral_numbers(self, catalog):
        for entry in catalog:
            group = automorphism_group(entry.pmap)
            assert isohedral_number(entry.pmap, group) == entry.expected["isohedral"], entry.name
            assert vertex_transitive(entry.pmap, group) == entry.expected["vertex_transitive"]

    def test_orbits_dispatch(self):
        group = automorphism_group(PRISM)
        assert orbits(group) == vertex_orbits(group) == [Orbit(0, 6)]
        assert orbit_sizes(orbits(group, "faces", PRISM)) == [2, 3]
        with pytest.raises(ValueError, match="needs a map"):
            orbits(group, "faces")
        with pytest.raises(ValueError, match="Unknown action"):
            orbits(group, "edges", PRISM)

    def test_face_action_needs_automorphisms(self):
        group = PermutationGroup([Permutation([0, 5, 2, 3, 4, 1])])
        with pytest.raises(NotAnAutomorphismError):
            face_orbits(group, OCTAHEDRON)


class TestBurnside:
    def test_agrees_with_face_orbits(self, small_map):
        group = automorphism_group(small_map)
        assert burnside_face_orbit_count(group, small_map) == len(face_orbits(group, small_map))

    def test_order_limit(self):
        with pytest.raises(GroupTooLargeError):
            burnside_face_orbit_count(SymmetricGroup(6), OCTAHEDRON)

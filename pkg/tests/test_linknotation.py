#!/usr/bin/env python3
import pytest

from semcensus.error import LinkError
from semcensus.isomorphism import check_witness
from semcensus.linknotation import faces_from_links, format_link, parse_link
from semcensus.polyhedralmap import canonical_face, validate
from semcensus.utils import parse_cycles
from tests.conftest import CUBE, OCTAHEDRON, PRISM, read_data


def faces_at(pmap, vertex):
    return sorted(
        canonical_face(pmap.faces[face_id]) for face_id, _ in pmap.incidence.faces_at(vertex)
    )


class TestParseLink:
    def test_groups_and_implied_triangle(self):
        faces = parse_link(0, "C9([4,5,6],[6,7,8],[8,9,1],[1,2,3])")
        assert faces == [
            (0, 4, 5, 6),
            (0, 6, 7, 8),
            (0, 8, 9, 1),
            (0, 1, 2, 3),
            (0, 3, 4),
        ]

    def test_single_vertices(self):
        assert sorted(parse_link(0, "C4(1,2,3,4)")) == [
            (0, 1, 2),
            (0, 2, 3),
            (0, 3, 4),
            (0, 4, 1),
        ]

    def test_mixed_tokens(self):
        faces = parse_link(1, "C8(2,3,4,[5,6,7],[7,8,9])")
        assert faces[:2] == [(1, 5, 6, 7), (1, 7, 8, 9)]
        assert sorted(faces[2:]) == [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 9, 2)]

    @pytest.mark.parametrize(
        "text",
        [
            "C_9([4,5,6],[6,7,8],[8,9,1],[1,2,3])",
            "C_{9}([4, 5, 6], [6,7,8], [8,9,1],[1,2,3])",
        ],
    )
    def test_written_variants(self, text):
        assert len(parse_link(0, text)) == 5

    @pytest.mark.parametrize(
        "text, message",
        [
            ("C8([4,5,6],[6,7,8],[8,9,1],[1,2,3])", "C8 announced but 9"),
            ("C5(1,2,3,4,2)", "occurs twice"),
            ("C4(0,2,3,4)", "occurs twice"),
            ("C3([1],2,3)", "at least two vertices"),
            ("C3(1;2,3)", "unexpected text"),
            ("D3(1,2,3)", "can not read"),
            ("C0()", "empty link"),
        ],
    )
    def test_rejects(self, text, message):
        with pytest.raises(LinkError, match=message):
            parse_link(0, text)


class TestFormatLink:
    def test_cube(self):
        assert format_link(CUBE, 0) == "C6([1,2,3],[3,7,4],[4,5,1])"

    def test_octahedron(self):
        assert format_link(OCTAHEDRON, 0) == "C4(1,2,3,4)"

    @pytest.mark.parametrize("pmap", [CUBE, OCTAHEDRON, PRISM])
    def test_parse_gives_back_the_faces(self, pmap):
        for vertex in range(pmap.n_vertices):
            parsed = parse_link(vertex, format_link(pmap, vertex))
            assert sorted(canonical_face(face) for face in parsed) == faces_at(pmap, vertex)

    def test_catalog_links(self, catalog):
        for entry in catalog:
            pmap = entry.pmap
            for vertex in range(pmap.n_vertices):
                text = format_link(pmap, vertex)
                assert text.startswith(f"C{sum(gon - 2 for gon in entry.t)}(")
                parsed = parse_link(vertex, text)
                assert sorted(canonical_face(face) for face in parsed) == faces_at(pmap, vertex)


class TestFacesFromLinks:
    def test_rebuilds_a_map_from_links(self, link_map, entries):
        assert validate(link_map).ok
        data = read_data("k1_links.json")
        target = entries[data["isomorphic_to"]].pmap
        witness = parse_cycles(data["isomorphism"], 12)
        assert check_witness(link_map, target, witness)

    def test_faces_are_canonical_and_distinct(self):
        faces = faces_from_links({0: "C4(1,2,3,4)", 1: "C4(0,2,5,4)"})
        assert faces == sorted(set(faces), key=lambda face: (len(face), face))
        assert (0, 1, 2) in faces
        assert len(faces) == 6

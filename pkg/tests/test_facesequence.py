#!/usr/bin/env python3
from fractions import Fraction
from itertools import combinations_with_replacement, permutations

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from semcensus.error import FaceSequenceError, NonIntegralError
from semcensus.facesequence import (
    admissible_types,
    canonicalize,
    euler_of_type,
    face_counts,
    least_rotation,
    parse_face_sequence,
)

PROPERTY_SETTINGS = settings(
    max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)

ADMISSIBLE_12_MINUS_2 = {
    "3,12,3,12",
    "3,3,12,12",
    "3,3,3,3,3,3,3",
    "3,3,3,3,3,6",
    "3,3,3,3,4,4",
    "3,3,3,4,12",
    "3,3,3,4,3,4",
    "3,3,3,6,6",
    "3,3,4,3,12",
    "3,3,4,3,3,4",
    "3,3,4,4,6",
    "3,3,4,6,4",
    "3,3,6,3,6",
    "3,4,12,6",
    "3,4,3,4,6",
    "3,4,4,3,6",
    "3,4,4,4,4",
    "3,4,6,12",
    "3,4,8,8",
    "3,6,4,12",
    "3,6,6,6",
    "3,8,4,8",
    "4,4,4,12",
    "4,4,6,6",
    "4,6,4,6",
    "6,12,12",
    "8,8,12",
    "9,9,9",
}


def small_types_by_exhaustion(vertices, chi, largest=8):
    """Types of degree and face sizes at most ``largest`` found by trying every multiset."""
    found = set()
    for degree in range(3, largest + 1):
        for sizes in combinations_with_replacement(range(3, min(largest, vertices) + 1), degree):
            euler = vertices * (1 - Fraction(degree, 2) + sum(Fraction(1, gon) for gon in sizes))
            if euler != chi or any(vertices * sizes.count(gon) % gon for gon in sizes):
                continue
            for order in set(permutations(sizes)):
                found.add(
                    min(
                        candidate[shift:] + candidate[:shift]
                        for candidate in (order, order[::-1])
                        for shift in range(degree)
                    )
                )
    return found


@st.composite
def cyclic_sequences(draw):
    return draw(st.lists(st.integers(min_value=3, max_value=12), min_size=3, max_size=8))


class TestFaceSequence:
    def test_canonical_form_is_least_rotation_or_reflection(self):
        assert canonicalize([4, 3, 4, 3, 3, 3]).entries == (3, 3, 3, 4, 3, 4)
        assert canonicalize([4, 4, 3, 4, 4]).entries == (3, 4, 4, 4, 4)
        assert canonicalize([12, 3, 12, 3]).entries == (3, 12, 3, 12)

    def test_reflection_is_identified(self):
        # 3,4,6,12 and 3,12,6,4 only differ by direction
        assert canonicalize([3, 4, 6, 12]) == canonicalize([3, 12, 6, 4])
        assert canonicalize([3, 4, 6, 12]) != canonicalize([3, 6, 4, 12])

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("3,4,4,4,4", "3,4,4,4,4"),
            ("(3,4^4)", "3,4,4,4,4"),
            ("3^4,4^2", "3,3,3,3,4,4"),
            ("(3^3,4,3,4)", "3,3,3,4,3,4"),
            (" 4, 3^3 ,4,3 ", "3,3,3,4,3,4"),
            ("3^7", "3,3,3,3,3,3,3"),
        ],
    )
    def test_parse(self, text, expected):
        assert str(parse_face_sequence(text)) == expected

    @pytest.mark.parametrize("text", ["", "3,4", "3,2,4", "3,a,4", "3^0,4,4,4", "3,,4,4"])
    def test_parse_rejects(self, text):
        with pytest.raises(FaceSequenceError):
            parse_face_sequence(text)

    def test_canonicalize_rejects(self):
        with pytest.raises(FaceSequenceError, match="at least 3 faces"):
            canonicalize([3, 4])
        with pytest.raises(FaceSequenceError, match="face sizes"):
            canonicalize([3, 4, 2])

    def test_pretty(self):
        assert parse_face_sequence("3,3,3,4,3,4").pretty() == "3^3,4,3,4"
        assert parse_face_sequence("3,3,3,3,4,4").pretty() == "3^4,4^2"
        assert parse_face_sequence("3,4,4,4,4").pretty() == "3,4^4"
        assert parse_face_sequence("3,4,8,8").pretty() == "3,4,8^2"

    def test_degree_and_multiplicities(self):
        t = parse_face_sequence("3^3,4,3,4")
        assert t.degree == 6
        assert len(t) == 6
        assert t.multiplicities == {3: 4, 4: 2}

    def test_ordering_and_hashing(self):
        types = {parse_face_sequence("4,4,4"), parse_face_sequence("3,3,3"), canonicalize([3] * 3)}
        assert sorted(types) == [parse_face_sequence("3,3,3"), parse_face_sequence("4,4,4")]

    @PROPERTY_SETTINGS
    @given(sequence=cyclic_sequences(), shift=st.integers(min_value=0, max_value=7))
    def test_invariant_under_rotation_and_reflection(self, sequence, shift):
        shift %= len(sequence)
        rotated = sequence[shift:] + sequence[:shift]
        expected = canonicalize(sequence)
        assert canonicalize(rotated) == expected
        assert canonicalize(rotated[::-1]) == expected

    @PROPERTY_SETTINGS
    @given(sequence=cyclic_sequences())
    def test_least_rotation_is_a_rotation(self, sequence):
        least = least_rotation(sequence)
        rotations = {
            tuple(candidate[shift:] + candidate[:shift])
            for candidate in (sequence, sequence[::-1])
            for shift in range(len(sequence))
        }
        assert least in rotations
        assert least == min(rotations)


class TestEulerArithmetic:
    def test_face_counts(self):
        assert face_counts(parse_face_sequence("3^3,4,3,4"), 12) == {3: 16, 4: 6}
        assert face_counts(parse_face_sequence("3,4^4"), 12) == {3: 4, 4: 12}
        assert face_counts(parse_face_sequence("3^7"), 12) == {3: 28}

    def test_non_integral_face_counts(self):
        with pytest.raises(NonIntegralError) as info:
            face_counts(parse_face_sequence("4,4,4"), 6)
        assert info.value.gon == 4
        assert info.value.vertices == 6

    def test_vertex_count_must_be_positive(self):
        with pytest.raises(ValueError, match="positive"):
            face_counts(parse_face_sequence("3,3,3"), 0)

    @pytest.mark.parametrize(
        "text, vertices, chi",
        [
            ("3,3,3", 4, 2),
            ("3,3,3,3", 6, 2),
            ("4,4,4", 8, 2),
            ("3^5", 6, 1),
            ("3^6", 7, 0),
            ("3,4^4", 12, -2),
            ("3^4,4^2", 12, -2),
            ("3^3,4,3,4", 12, -2),
            ("3^7", 12, -2),
        ],
    )
    def test_euler_of_type(self, text, vertices, chi):
        assert euler_of_type(parse_face_sequence(text), vertices) == chi

    def test_euler_of_type_may_be_fractional(self):
        assert euler_of_type(parse_face_sequence("3,3,3"), 5) == Fraction(5, 2)

    def test_admissible_types_on_twelve_vertices(self):
        types = admissible_types(12, -2)
        assert {str(t) for t in types} == ADMISSIBLE_12_MINUS_2
        assert types == sorted(types)

    def test_admissible_types_of_the_sphere(self):
        assert {"3,3,3", "3,3,3,3", "3,4,4"} <= {
            str(t) for v in (4, 6) for t in admissible_types(v, 2)
        }

    @pytest.mark.parametrize(
        "vertices, chi",
        [(4, 2), (6, 2), (8, 2), (6, 1), (7, 0), (8, 0), (9, 0), (10, -2), (12, -2)],
    )
    def test_admissible_types_are_complete(self, vertices, chi):
        listed = {
            t.entries for t in admissible_types(vertices, chi) if t.degree <= 8 and max(t) <= 8
        }
        assert listed == small_types_by_exhaustion(vertices, chi)

    def test_admissible_types_are_consistent(self):
        for vertices in range(3, 13):
            for t in admissible_types(vertices, -2):
                assert euler_of_type(t, vertices) == -2
                assert max(t) <= vertices

    def test_no_types_below_three_vertices(self):
        assert admissible_types(2, 2) == []

#!/usr/bin/env python3
"""Face sequences (vertex types) and the Euler characteristic arithmetic behind them."""
import re
from collections import Counter
from fractions import Fraction
from functools import total_ordering
from typing import Dict, Iterable, Iterator, List, Set, Tuple, Union, overload

from sympy.utilities.iterables import multiset_permutations

from semcensus.constants import MIN_DEGREE, MIN_GON
from semcensus.error import FaceSequenceError, NonIntegralError

_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


@total_ordering
class FaceSequence:
    """The cyclic sequence of face sizes around a vertex, stored canonically. Use
    :func:`canonicalize` or :func:`parse_face_sequence` to build instances.

    Args:
        entries: The canonical entries.

    Attributes:
        entries: The canonical entries, i.e. the lexicographically least of all rotations and
            reflections.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: Tuple[int, ...]):
        self.entries = entries

    @property
    def degree(self) -> int:
        """:obj:`int`: Number of faces around a vertex."""
        return len(self.entries)

    @property
    def multiplicities(self) -> Dict[int, int]:
        """Dict[:obj:`int`, :obj:`int`]: Mapping face size → number of such faces at a vertex."""
        return dict(sorted(Counter(self.entries).items()))

    def pretty(self) -> str:
        """Renders the sequence with exponents for runs, e.g. ``3^3,4,3,4``.

        Returns:
            :obj:`str`: The rendered sequence.
        """
        runs: List[List[int]] = []
        for entry in self.entries:
            if runs and runs[-1][0] == entry:
                runs[-1][1] += 1
            else:
                runs.append([entry, 1])
        return ",".join(str(gon) if count == 1 else f"{gon}^{count}" for gon, count in runs)

    def __str__(self) -> str:
        return ",".join(map(str, self.entries))

    def __repr__(self) -> str:
        return f"FaceSequence({self})"

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @overload
    def __getitem__(self, index: int) -> int:
        ...

    @overload
    def __getitem__(self, index: slice) -> Tuple[int, ...]:
        ...

    def __getitem__(self, index: Union[int, slice]) -> Union[int, Tuple[int, ...]]:
        return self.entries[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FaceSequence):
            return NotImplemented
        return self.entries == other.entries

    def __lt__(self, other: "FaceSequence") -> bool:
        return self.entries < other.entries

    def __hash__(self) -> int:
        return hash(self.entries)


def least_rotation(sequence: Iterable[int]) -> Tuple[int, ...]:
    """The lexicographically least among all rotations and reflections of a cyclic sequence.

    Args:
        sequence: The cyclic sequence.

    Returns:
        Tuple[int, ...]: The least representative.
    """
    items = tuple(sequence)
    if not items:
        return items
    reflected = items[::-1]
    return min(
        candidate[shift:] + candidate[:shift]
        for candidate in (items, reflected)
        for shift in range(len(items))
    )


def canonicalize(raw: Iterable[int]) -> FaceSequence:
    """Builds the canonical face sequence of a cyclic sequence of face sizes.

    Args:
        raw: The face sizes in cyclic order.

    Returns:
        :class:`FaceSequence`: The canonical representative.

    Raises:
        FaceSequenceError: If there are fewer than three entries or an entry is below three.
    """
    entries = tuple(raw)
    if len(entries) < MIN_DEGREE:
        raise FaceSequenceError(entries, f"at least {MIN_DEGREE} faces must meet at a vertex")
    if any(not isinstance(entry, int) or entry < MIN_GON for entry in entries):
        raise FaceSequenceError(entries, f"face sizes must be integers of at least {MIN_GON}")
    return FaceSequence(least_rotation(entries))


def parse_face_sequence(text: str) -> FaceSequence:
    """Reads a face sequence like ``3,4,4,4,4`` or ``(3^3,4,3,4)``.

    Args:
        text: The text.

    Returns:
        :class:`FaceSequence`: The canonical face sequence.

    Raises:
        FaceSequenceError: If the text can not be read.
    """
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    entries: List[int] = []
    for token in body.split(","):
        match = _TOKEN.match(token.strip())
        if not match:
            raise FaceSequenceError(text, f"can not read {token.strip()!r}")
        count = int(match.group(2)) if match.group(2) else 1
        if count < 1:
            raise FaceSequenceError(text, "exponents must be positive")
        entries.extend([int(match.group(1))] * count)
    return canonicalize(entries)


def face_counts(t: FaceSequence, vertices: int) -> Dict[int, int]:
    """Number of faces of every size in a map of type ``t`` on ``vertices`` vertices, i.e.
    ``f_a = v·n_a/a``.

    Args:
        t: The type.
        vertices: The vertex count.

    Returns:
        Dict[int, int]: Mapping face size → face count.

    Raises:
        NonIntegralError: If some ``f_a`` is not an integer.
    """
    if vertices < 1:
        raise ValueError("The vertex count must be positive.")
    counts = {}
    for gon, multiplicity in t.multiplicities.items():
        quotient, remainder = divmod(vertices * multiplicity, gon)
        if remainder:
            raise NonIntegralError(gon, vertices, multiplicity)
        counts[gon] = quotient
    return counts


def euler_of_type(t: FaceSequence, vertices: int) -> Fraction:
    """The Euler characteristic ``V - E + F`` of any map of type ``t`` on ``vertices`` vertices.

    Args:
        t: The type.
        vertices: The vertex count.

    Returns:
        :class:`fractions.Fraction`: The Euler characteristic.

    Raises:
        NonIntegralError: If the face counts are not integral.
    """
    faces = sum(face_counts(t, vertices).values())
    return Fraction(vertices) - Fraction(vertices * t.degree, 2) + faces


def _gon_multisets(
    count: int, target: Fraction, largest: int, smallest: int = MIN_GON
) -> Iterator[Tuple[int, ...]]:
    # nondecreasing tuples of `count` sizes in [smallest, largest] with sum of 1/a == target
    if count == 0:
        if target == 0:
            yield ()
        return
    if target <= 0 or target > Fraction(count, smallest):
        return
    for gon in range(smallest, largest + 1):
        share = Fraction(1, gon)
        if share * count < target:
            break
        for rest in _gon_multisets(count - 1, target - share, largest, gon):
            yield (gon,) + rest


def admissible_types(vertices: int, chi: int) -> List[FaceSequence]:
    """All face sequences that the Euler arithmetic admits for maps on ``vertices`` vertices with
    Euler characteristic ``chi``. Existence of maps is not claimed.

    Every face of a map is a simple cycle, so face sizes are bounded by the vertex count. The
    degree is raised as long as the all-triangle sequence of that degree still reaches ``chi``.
    Different cyclic arrangements of the same face sizes are listed separately.

    Args:
        vertices: The vertex count.
        chi: The Euler characteristic.

    Returns:
        List[:class:`FaceSequence`]: The admissible types, sorted.
    """
    if vertices < MIN_GON:
        return []
    found: Set[FaceSequence] = set()
    degree = MIN_DEGREE
    while vertices * (1 - Fraction(degree, 6)) >= chi:
        # v (1 - d/2 + sum 1/a) = chi
        target = Fraction(chi, vertices) - 1 + Fraction(degree, 2)
        for sizes in _gon_multisets(degree, target, vertices):
            if any(vertices * sizes.count(gon) % gon for gon in set(sizes)):
                continue
            for arrangement in multiset_permutations(list(sizes)):
                found.add(canonicalize(arrangement))
        degree += 1
    return sorted(found)

#!/usr/bin/env python3
"""Utility methods: permutations in cycle notation, deterministic JSON and DOT rendering."""
import json
import re
from typing import Any, List, Optional, Sequence, Union

import networkx as nx
from sympy.combinatorics import Permutation

from semcensus.error import CycleNotationError

PermutationLike = Union[Permutation, Sequence[int]]
_CYCLE = re.compile(r"\(([^()]*)\)")
# an indented JSON array holding only integers; strings never contain raw newlines
_INTEGER_ARRAY = re.compile(r"\[\n\s*(-?\d+(?:,\n\s*-?\d+)*)\n\s*\]")


def as_images(permutation: PermutationLike, size: int) -> List[int]:
    """The image list of a permutation on the labels ``0..size-1``.

    Args:
        permutation: A :class:`sympy.combinatorics.Permutation` or a sequence of images.
        size: Number of labels.

    Returns:
        List[int]: ``images[v]`` is the image of ``v``.

    Raises:
        ValueError: If the permutation moves labels outside ``0..size-1`` or is no bijection.
    """
    images = list(permutation.array_form if isinstance(permutation, Permutation) else permutation)
    if len(images) > size:
        if any(images[label] != label for label in range(size, len(images))):
            raise ValueError(f"The permutation moves labels beyond {size - 1}.")
        images = images[:size]
    images.extend(range(len(images), size))
    if sorted(images) != list(range(size)):
        raise ValueError("The images do not form a bijection.")
    return [int(image) for image in images]


def to_permutation(permutation: PermutationLike, size: int) -> Permutation:
    """Converts to a :class:`sympy.combinatorics.Permutation` of the given size.

    Args:
        permutation: A permutation or a sequence of images.
        size: Number of labels.

    Returns:
        :class:`sympy.combinatorics.Permutation`: The permutation.
    """
    return Permutation(as_images(permutation, size))


def format_cycles(permutation: PermutationLike) -> str:
    """Renders a permutation in cycle notation, e.g. ``(0,1)(2,8)(3,9)(4,10,7,11)``. Fixed
    points are omitted and every cycle starts with its least label; the identity is ``()``.

    Args:
        permutation: The permutation.

    Returns:
        :obj:`str`: The cycle notation.
    """
    size = permutation.size if isinstance(permutation, Permutation) else len(permutation)
    images = as_images(permutation, size)
    seen = set()
    cycles = []
    for start in range(len(images)):
        if start in seen or images[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        current = images[start]
        while current != start:
            cycle.append(current)
            seen.add(current)
            current = images[current]
        cycles.append("(" + ",".join(map(str, cycle)) + ")")
    return "".join(cycles) or "()"


def parse_cycles(text: str, size: int) -> Permutation:
    """Reads a permutation in cycle notation. Whitespace is ignored.

    Args:
        text: The cycle notation, e.g. ``(0,1)(2,8)``. ``()`` is the identity.
        size: Number of labels the permutation acts on.

    Returns:
        :class:`sympy.combinatorics.Permutation`: The permutation.

    Raises:
        CycleNotationError: If the text can not be read or the cycles are not disjoint.
    """
    compact = re.sub(r"\s+", "", text)
    if not compact or _CYCLE.sub("", compact):
        raise CycleNotationError(text, "expected disjoint cycles like (0,1)(2,3)")
    images = list(range(size))
    moved = set()
    for body in _CYCLE.findall(compact):
        if not body:
            continue
        try:
            cycle = [int(label) for label in body.split(",")]
        except ValueError as exc:
            raise CycleNotationError(text, f"can not read cycle ({body})") from exc
        for index, label in enumerate(cycle):
            if not 0 <= label < size:
                raise CycleNotationError(text, f"label {label} outside 0..{size - 1}")
            if label in moved:
                raise CycleNotationError(text, f"label {label} appears twice")
            moved.add(label)
            images[label] = cycle[(index + 1) % len(cycle)]
    return Permutation(images)


def dumps(data: Any) -> str:
    """Deterministic JSON rendering used for all output and map files. Keys are sorted and
    arrays of integers, such as faces, are kept on one line.

    Args:
        data: JSON serializable data.

    Returns:
        :obj:`str`: The JSON text with a trailing newline.
    """
    text = json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)
    text = _INTEGER_ARRAY.sub(
        lambda match: "[" + ", ".join(re.split(r",\s*", match.group(1))) + "]", text
    )
    return text + "\n"


def graph_to_dot(graph: nx.Graph, name: str, attributes: Optional[dict] = None) -> str:
    """Renders an undirected graph in the DOT language with vertices in label order.

    Args:
        graph: The graph. Nodes must be integers.
        name: Name of the graph.
        attributes: Optional. Graph attributes to record, e.g. ``{"i": 7}``.

    Returns:
        :obj:`str`: The DOT text.
    """
    lines = [f'graph "{name}" {{']
    for key, value in sorted((attributes or {}).items()):
        lines.append(f'  {key}="{value}";')
    for node in sorted(graph.nodes):
        lines.append(f"  {node};")
    for u, v in sorted(tuple(sorted(edge)) for edge in graph.edges):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"

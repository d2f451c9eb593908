#!/usr/bin/env python3
"""Exhaustive enumeration of semi-equivelar maps of a given type up to isomorphism.

The search grows a partial map face by face. In every step the open vertex with the fewest
ways to complete its link is picked and the faces that can follow one end of its partial link
are tried. Links must always embed into the type, links that close must read the type, and
new vertices are always given the least unused label. Beyond that no canonicity test prunes
partial maps, so one class is usually completed several times; complete maps are reduced to
their canonical forms and duplicates are dropped only then.
"""
import logging
import time
from functools import lru_cache, partial
from multiprocessing import Pool
from typing import Callable, Dict, Iterator, List, NamedTuple, Optional, Tuple

from semcensus.constants import SEED_FACE, SEED_MODES, SEED_STAR
from semcensus.error import BudgetExhausted, NonIntegralError
from semcensus.facesequence import FaceSequence, admissible_types, face_counts, least_rotation
from semcensus.isomorphism import Encoding, canonical_form
from semcensus.polyhedralmap import Edge, Face, PolyhedralMap, Wedge, edge_key

logger = logging.getLogger(__name__)

OPEN = 0
CLOSED = 1
BROKEN = -1

Branch = Optional[Tuple[Face, int]]
SweepTable = Dict[int, Dict[FaceSequence, Optional[int]]]


class CensusStats(NamedTuple):
    """Search statistics of a census.

    Attributes:
        nodes: Number of search nodes visited.
        branches: Number of first level branches.
        classes: Number of isomorphism classes found.
        wall_time: Seconds spent. Not part of any output that must be reproducible.
        harvested: Number of complete maps reached before duplicates were dropped.
    """

    nodes: int
    branches: int
    classes: int
    wall_time: float = 0.0
    harvested: int = 0


class CensusResult(NamedTuple):
    """Outcome of :func:`enumerate_sems`.

    Attributes:
        t: The type.
        n_vertices: The vertex count.
        representatives: One canonically labelled map per isomorphism class, sorted by
            canonical form.
        stats: The search statistics.
    """

    t: FaceSequence
    n_vertices: int
    representatives: List[PolyhedralMap]
    stats: CensusStats

    @property
    def count(self) -> int:
        """:obj:`int`: Number of isomorphism classes."""
        return len(self.representatives)


class _OutOfBudget(Exception):
    pass


class _NodeCounter:
    __slots__ = ("nodes", "limit")

    def __init__(self, limit: Optional[int]):
        self.nodes = 0
        self.limit = limit

    def tick(self) -> None:
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise _OutOfBudget()


@lru_cache(maxsize=None)
def embedding_count(t: Tuple[int, ...], arcs: Tuple[Tuple[int, ...], ...]) -> int:
    """Number of ways to place disjoint arcs of face sizes into the cyclic type ``t``.

    Arcs are placed at every start position in both directions. Two arcs may not touch, since
    touching arcs would share a link vertex and form a single arc.

    Args:
        t: The canonical type entries.
        arcs: The arcs, longest first.

    Returns:
        :obj:`int`: The number of placements. ``0`` means the partial link can not be completed.
    """
    degree = len(t)
    occupied = [False] * degree

    def place(index: int) -> int:
        if index == len(arcs):
            return 1
        arc = arcs[index]
        length = len(arc)
        if length >= degree:
            return 0
        reverse = arc[::-1]
        directions = (arc,) if reverse == arc else (arc, reverse)
        total = 0
        for sequence in directions:
            for start in range(degree):
                positions = [(start + step) % degree for step in range(length)]
                if any(occupied[p] or t[p] != gon for p, gon in zip(positions, sequence)):
                    continue
                if occupied[(start - 1) % degree] or occupied[(start + length) % degree]:
                    continue
                for position in positions:
                    occupied[position] = True
                total += place(index + 1)
                for position in positions:
                    occupied[position] = False
        return total

    return place(0)


class PartialMap:
    """The mutable state of the search: the faces placed so far and their bookkeeping.

    Args:
        t: The type.
        n_vertices: The vertex count of the maps searched for.

    Attributes:
        t: The type.
        n_vertices: The vertex count.
        need: Mapping face size → number of faces of that size in a complete map.
        faces: The faces placed, in order.
        wedges: Per vertex, the corners of the placed faces at it.
        vertex_faces: Per vertex, the ids of the placed faces containing it.
        edge_count: Mapping edge → number of placed faces containing it.
        used: Labels ``0..used-1`` are in use.
        closed: Per vertex, whether its link is complete.
        size_count: Mapping face size → number of placed faces of that size.
    """

    __slots__ = (
        "t",
        "n_vertices",
        "need",
        "faces",
        "wedges",
        "vertex_faces",
        "edge_count",
        "used",
        "closed",
        "size_count",
    )

    def __init__(self, t: FaceSequence, n_vertices: int):
        self.t = t
        self.n_vertices = n_vertices
        self.need = face_counts(t, n_vertices)
        self.faces: List[Face] = []
        self.wedges: List[List[Wedge]] = [[] for _ in range(n_vertices)]
        self.vertex_faces: List[List[int]] = [[] for _ in range(n_vertices)]
        self.edge_count: Dict[Edge, int] = {}
        self.used = 0
        self.closed = [False] * n_vertices
        self.size_count = {gon: 0 for gon in self.need}

    def can_add(self, face: Face) -> bool:
        """Whether a face can be placed without breaking polyhedrality.

        Every edge must have room for another face, and the face may meet every placed face
        in at most a vertex or a common edge.
        """
        size = len(face)
        if any(
            self.edge_count.get(edge_key(face[index], face[(index + 1) % size]), 0) >= 2
            for index in range(size)
        ):
            return False
        members = set(face)
        checked = set()
        for vertex in face:
            for face_id in self.vertex_faces[vertex]:
                if face_id in checked:
                    continue
                checked.add(face_id)
                other = self.faces[face_id]
                common = [position for position, label in enumerate(other) if label in members]
                if len(common) < 2:
                    continue
                if len(common) > 2:
                    return False
                first, second = common
                if not (second == first + 1 or (first == 0 and second == len(other) - 1)):
                    return False
                u, w = other[first], other[second]
                position = face.index(u)
                if w not in (face[(position + 1) % size], face[position - 1]):
                    return False
        return True

    def push(self, face: Face) -> None:
        """Places a face. Call :meth:`can_add` first."""
        face_id = len(self.faces)
        size = len(face)
        self.faces.append(face)
        self.size_count[size] = self.size_count.get(size, 0) + 1
        for index, vertex in enumerate(face):
            edge = edge_key(vertex, face[(index + 1) % size])
            self.edge_count[edge] = self.edge_count.get(edge, 0) + 1
            self.wedges[vertex].append((face[index - 1], face[(index + 1) % size], size))
            self.vertex_faces[vertex].append(face_id)

    def pop(self) -> None:
        """Removes the face placed last."""
        face = self.faces.pop()
        size = len(face)
        self.size_count[size] -= 1
        for index, vertex in enumerate(face):
            edge = edge_key(vertex, face[(index + 1) % size])
            self.edge_count[edge] -= 1
            if not self.edge_count[edge]:
                del self.edge_count[edge]
            self.wedges[vertex].pop()
            self.vertex_faces[vertex].pop()

    def link_status(self, vertex: int) -> Tuple[int, int]:
        """The state of the partial link of a vertex.

        Returns:
            Tuple[int, int]: ``(CLOSED, 0)`` if the link is a cycle reading the type,
            ``(OPEN, k)`` if the arcs of the link can be completed in ``k > 0`` ways and
            ``(BROKEN, 0)`` otherwise.
        """
        wedges = self.wedges[vertex]
        degree = self.t.degree
        if len(wedges) > degree:
            return BROKEN, 0
        by_neighbor: Dict[int, List[int]] = {}
        for index, (before, after, _) in enumerate(wedges):
            by_neighbor.setdefault(before, []).append(index)
            by_neighbor.setdefault(after, []).append(index)
        if len(by_neighbor) > degree or any(len(ids) > 2 for ids in by_neighbor.values()):
            return BROKEN, 0

        def step(wedge: int, near: int) -> Tuple[int, int]:
            before, after, size = wedges[wedge]
            return (after if before == near else before), size

        seen = set()
        arcs = []
        for start in sorted(by_neighbor):
            if start in seen or len(by_neighbor[start]) != 1:
                continue
            seen.add(start)
            sequence = []
            current, wedge = start, by_neighbor[start][0]
            while True:
                current, size = step(wedge, current)
                sequence.append(size)
                seen.add(current)
                if len(by_neighbor[current]) == 1:
                    break
                first, second = by_neighbor[current]
                wedge = second if first == wedge else first
            arcs.append(tuple(sequence))

        rest = [neighbor for neighbor in by_neighbor if neighbor not in seen]
        if rest:
            if arcs or len(wedges) != degree or len(rest) != degree:
                return BROKEN, 0
            start = rest[0]
            sequence = []
            current, wedge = start, by_neighbor[start][0]
            while True:
                current, size = step(wedge, current)
                sequence.append(size)
                if current == start:
                    break
                first, second = by_neighbor[current]
                wedge = second if first == wedge else first
            if len(sequence) == degree and least_rotation(sequence) == self.t.entries:
                return CLOSED, 0
            return BROKEN, 0

        arcs.sort(key=lambda arc: (-len(arc), arc))
        count = embedding_count(self.t.entries, tuple(arcs))
        return (OPEN, count) if count else (BROKEN, 0)

    def close_vertices(self, face: Face) -> Optional[List[int]]:
        """Updates the closed flags of the vertices of a face placed last.

        Returns:
            List[int] | None: The vertices newly marked closed, or ``None`` if some link on the
            face is broken. In that case no flag is changed.
        """
        changed = []
        for vertex in face:
            status, _ = self.link_status(vertex)
            if status == BROKEN:
                for other in changed:
                    self.closed[other] = False
                return None
            if status == CLOSED and not self.closed[vertex]:
                self.closed[vertex] = True
                changed.append(vertex)
        return changed

    def choose_vertex(self) -> Optional[Tuple[int, int]]:
        """The open vertex to extend next and the end of its partial link to extend at.

        Among open vertices the one with the fewest completions wins, then the one with more
        placed faces, then the least label.

        Returns:
            Tuple[int, int] | None: ``(u, w)``, or ``None`` if no vertex is open.
        """
        best: Optional[Tuple[Tuple[int, int, int], int]] = None
        for vertex in range(self.used):
            if self.closed[vertex]:
                continue
            status, count = self.link_status(vertex)
            if status == CLOSED:
                continue
            if status == BROKEN:
                raise AssertionError(f"Broken link at vertex {vertex} in the search state.")
            key = (count, -len(self.wedges[vertex]), vertex)
            if best is None or key < best[0]:
                best = (key, vertex)
        if best is None:
            return None
        vertex = best[1]
        ends: Dict[int, int] = {}
        for before, after, _ in self.wedges[vertex]:
            ends[before] = ends.get(before, 0) + 1
            ends[after] = ends.get(after, 0) + 1
        return vertex, min(neighbor for neighbor, count in ends.items() if count == 1)

    def candidate_faces(self, u: int, w: int) -> Iterator[Tuple[Face, int]]:
        """Yields the faces through the edge ``u w`` that may be placed next, together with the
        number of new labels they introduce. Face sizes come in increasing order."""
        for gon in sorted(self.need):
            if self.size_count[gon] >= self.need[gon]:
                continue
            yield from self._fill(u, w, gon, [], 0)

    def _fill(
        self, u: int, w: int, gon: int, filling: List[int], fresh: int
    ) -> Iterator[Tuple[Face, int]]:
        if len(filling) == gon - 2:
            if self.edge_count.get(edge_key(filling[-1], u), 0) < 2:
                yield (u, w, *filling), fresh
            return
        previous = filling[-1] if filling else w
        members = {u, w, *filling}
        upper = min(self.used + fresh + 1, self.n_vertices)
        for label in range(upper):
            if label in members:
                continue
            if label == self.used + fresh:
                filling.append(label)
                yield from self._fill(u, w, gon, filling, fresh + 1)
                filling.pop()
            elif label < self.used:
                if self.closed[label] or self.edge_count.get(edge_key(previous, label), 0) >= 2:
                    continue
                filling.append(label)
                yield from self._fill(u, w, gon, filling, fresh)
                filling.pop()


class _Search:
    """Depth first search below a partial map, collecting canonical forms."""

    def __init__(self, state: PartialMap, counter: _NodeCounter):
        self.state = state
        self.counter = counter
        self.found: Dict[Encoding, None] = {}
        self.harvested = 0

    def descend(self) -> None:
        self.counter.tick()
        state = self.state
        choice = state.choose_vertex()
        if choice is None:
            if state.used == state.n_vertices:
                self.harvest()
            return
        for face, fresh in state.candidate_faces(*choice):
            self.attempt(face, fresh)

    def attempt(self, face: Face, fresh: int) -> None:
        state = self.state
        state.used += fresh
        if state.can_add(face):
            state.push(face)
            changed = state.close_vertices(face)
            if changed is not None:
                self.descend()
                for vertex in changed:
                    state.closed[vertex] = False
            state.pop()
        state.used -= fresh

    def harvest(self) -> None:
        """Records a complete map. Isomorphic copies collapse onto one canonical form here."""
        self.harvested += 1
        state = self.state
        encoding = canonical_form(PolyhedralMap(state.n_vertices, state.faces)).encoding
        if encoding not in self.found:
            logger.debug("New class after %d nodes: %s", self.counter.nodes, encoding)
            self.found[encoding] = None


def seed_state(t: FaceSequence, n_vertices: int, seed: str = SEED_STAR) -> Optional[PartialMap]:
    """The partial map the search starts from.

    With ``star`` all faces around vertex ``0`` are placed, read in the canonical order of
    ``t``. With ``face`` a single face ``0..a-1`` of the largest size ``a`` is placed.

    Args:
        t: The type.
        n_vertices: The vertex count.
        seed: Optional. The seeding mode.

    Returns:
        :class:`PartialMap` | None: The seeded state, or ``None`` if the seed does not fit on
        ``n_vertices`` vertices.

    Raises:
        NonIntegralError: If the face counts are not integral.
        ValueError: For an unknown seeding mode.
    """
    if seed not in SEED_MODES:
        raise ValueError(f"Unknown seeding mode {seed!r}, expected one of {SEED_MODES}.")
    state = PartialMap(t, n_vertices)
    if seed == SEED_FACE:
        largest = max(t)
        if largest > n_vertices:
            return None
        state.push(tuple(range(largest)))
        state.used = largest
        return state

    if 1 + sum(gon - 2 for gon in t) > n_vertices:
        return None
    first = 1
    label = 2
    current = first
    for index, gon in enumerate(t):
        interior = tuple(range(label, label + gon - 3))
        label += gon - 3
        if index == t.degree - 1:
            following = first
        else:
            following = label
            label += 1
        face = (0, current, *interior, following)
        if not state.can_add(face):
            return None
        state.push(face)
        current = following
    state.used = label
    for vertex in range(state.used):
        status, _ = state.link_status(vertex)
        if status == BROKEN:
            return None
        state.closed[vertex] = status == CLOSED
    return state


class _BranchOutcome(NamedTuple):
    nodes: int
    exhausted: bool
    encodings: List[Encoding]
    harvested: int


def _root_branches(state: PartialMap) -> List[Branch]:
    choice = state.choose_vertex()
    if choice is None:
        return [None]
    return list(state.candidate_faces(*choice))


def _run_branch(
    branch: Branch, t: FaceSequence, n_vertices: int, seed: str, limit: Optional[int]
) -> _BranchOutcome:
    state = seed_state(t, n_vertices, seed)
    counter = _NodeCounter(limit)
    search = _Search(state, counter)  # type: ignore[arg-type]
    try:
        if branch is None:
            search.descend()
        else:
            search.attempt(*branch)
    except _OutOfBudget:
        return _BranchOutcome(counter.nodes, True, list(search.found), search.harvested)
    return _BranchOutcome(counter.nodes, False, list(search.found), search.harvested)


def enumerate_sems(
    t: FaceSequence,
    n_vertices: int,
    limit: Optional[int] = None,
    jobs: int = 1,
    seed: str = SEED_STAR,
) -> CensusResult:
    """All semi-equivelar maps of type ``t`` on ``n_vertices`` vertices up to isomorphism.

    The search tree is split at its first branching level. With ``jobs > 1`` the branches
    run in a process pool; the result does not depend on the number of jobs.

    Args:
        t: The type.
        n_vertices: The vertex count.
        limit: Optional. Node budget per first level branch. The census fails if the total
            number of nodes exceeds it.
        jobs: Optional. Number of worker processes.
        seed: Optional. The seeding mode, ``star`` or ``face``.

    Returns:
        :class:`CensusResult`: The representatives, one per class.

    Raises:
        BudgetExhausted: If the node budget does not suffice.
    """
    started = time.perf_counter()
    try:
        state = seed_state(t, n_vertices, seed)
    except NonIntegralError as exc:
        logger.info("No maps of type %s on %d vertices: %s", t.pretty(), n_vertices, exc)
        state = None
    if state is None:
        return CensusResult(t, n_vertices, [], CensusStats(0, 0, 0))

    branches = _root_branches(state)
    logger.info(
        "Census of type %s on %d vertices: %d first level branches",
        t.pretty(),
        n_vertices,
        len(branches),
    )
    worker = partial(_run_branch, t=t, n_vertices=n_vertices, seed=seed, limit=limit)
    if jobs > 1 and len(branches) > 1:
        with Pool(processes=min(jobs, len(branches))) as pool:
            outcomes = pool.map(worker, branches)
    else:
        outcomes = [worker(branch) for branch in branches]

    nodes = sum(outcome.nodes for outcome in outcomes) + (0 if branches == [None] else 1)
    encodings = sorted({encoding for outcome in outcomes for encoding in outcome.encodings})
    stats = CensusStats(
        nodes,
        len(branches),
        len(encodings),
        time.perf_counter() - started,
        sum(outcome.harvested for outcome in outcomes),
    )
    if limit is not None and (
        nodes > limit or any(outcome.exhausted for outcome in outcomes)
    ):
        logger.warning("Census of type %s on %d vertices ran out of budget", t, n_vertices)
        raise BudgetExhausted(stats, limit)
    logger.info(
        "Census of type %s on %d vertices: %d classes, %d nodes, %.2fs",
        t.pretty(),
        n_vertices,
        stats.classes,
        stats.nodes,
        stats.wall_time,
    )
    representatives = [PolyhedralMap(n_vertices, encoding) for encoding in encodings]
    return CensusResult(t, n_vertices, representatives, stats)


def sweep(
    v_max: int,
    chi: int,
    limit: Optional[int] = None,
    jobs: int = 1,
    budget: Optional[Callable[[FaceSequence, int], Optional[int]]] = None,
) -> SweepTable:
    """Runs a census for every admissible type and vertex count up to ``v_max``.

    A census that runs out of budget is recorded as ``None`` and the sweep goes on with the
    next cell.

    Args:
        v_max: The largest vertex count.
        chi: The Euler characteristic.
        limit: Optional. Node budget of every single census. Takes precedence over ``budget``.
        jobs: Optional. Number of worker processes per census.
        budget: Optional. Maps a type and a vertex count to the node budget of that census,
            ``None`` for no budget.

    Returns:
        Dict[int, Dict[:class:`FaceSequence`, int | None]]: Mapping vertex count → type →
        number of classes, or ``None`` where the budget ran out. Every vertex count from 1 to
        ``v_max`` has a row.
    """
    table: SweepTable = {}
    for n_vertices in range(1, v_max + 1):
        row: Dict[FaceSequence, Optional[int]] = {}
        for t in admissible_types(n_vertices, chi):
            cell_limit = limit
            if cell_limit is None and budget is not None:
                cell_limit = budget(t, n_vertices)
            try:
                row[t] = enumerate_sems(t, n_vertices, limit=cell_limit, jobs=jobs).count
            except BudgetExhausted:
                logger.warning(
                    "Sweep cell %s on %d vertices left open after %s nodes",
                    t.pretty(),
                    n_vertices,
                    cell_limit,
                )
                row[t] = None
        table[n_vertices] = row
    return table

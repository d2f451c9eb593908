#!/usr/bin/env python3
"""Map files, the catalog of published maps and its verification."""
import json
import logging
import re
from functools import cached_property, partial
from itertools import combinations
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, NamedTuple, Optional, Sequence, Union

from sympy.combinatorics import PermutationGroup
from thefuzz import fuzz

from semcensus.constants import (
    CATALOG_DIRECTORY,
    DEFAULT_GROUP_ORDER_CAP,
    FUZZY_MATCH_THRESHOLD,
    FUZZY_SUGGESTIONS,
    MAP_FILE_SUFFIX,
)
from semcensus.error import (
    FaceSequenceError,
    InvalidMapError,
    MapFormatError,
    UnknownCatalogEntryError,
)
from semcensus.facesequence import FaceSequence, parse_face_sequence
from semcensus.invariants import (
    char_poly,
    common_neighbor_graph,
    edge_graph,
    format_poly,
    invariant_fingerprint,
    parse_graph_listing,
    parse_poly,
    same_edges,
)
from semcensus.isomorphism import are_isomorphic, check_witness
from semcensus.linknotation import format_link, parse_link
from semcensus.orientation import Orientability, orientability
from semcensus.polyhedralmap import (
    Face,
    PolyhedralMap,
    canonical_face,
    euler_characteristic,
    format_face,
    is_sem,
    validate,
)
from semcensus.symmetry import (
    GroupId,
    Orbit,
    automorphism_group,
    burnside_face_orbit_count,
    face_orbits,
    identify_group,
    vertex_orbits,
)
from semcensus.utils import dumps, format_cycles, parse_cycles

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

PASS = "pass"
FAIL = "fail"
ERROR = "error"
AGREES = "agrees"
DISAGREES = "disagrees"

_ORBIT_CLAIM = re.compile(r"^\[([\d,\s]+)\]_\{?(\d+)\}?$")


def read_document(path: PathLike) -> Dict[str, Any]:
    """Reads the JSON object stored in a map file.

    Args:
        path: The file.

    Returns:
        Dict[str, Any]: The document.

    Raises:
        MapFormatError: If the file can not be read or holds no JSON object.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MapFormatError(path, "file", exc.strerror or str(exc)) from exc
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MapFormatError(path, f"line {exc.lineno}", exc.msg) from exc
    if not isinstance(document, dict):
        raise MapFormatError(path, "document", "expected a JSON object")
    return document


def map_from_document(document: Dict[str, Any], source: object = "<document>") -> PolyhedralMap:
    """Builds and validates the map described by a map document.

    Args:
        document: The document with the keys ``vertices`` and ``faces`` and optionally ``type``.
        source: Optional. Where the document came from, for error messages.

    Returns:
        :class:`semcensus.polyhedralmap.PolyhedralMap`: The map.

    Raises:
        MapFormatError: If a field is missing or malformed, or the map is not of the declared
            type.
        InvalidMapError: If the faces do not form a polyhedral map.
    """
    vertices = document.get("vertices")
    if isinstance(vertices, bool) or not isinstance(vertices, int) or vertices < 1:
        raise MapFormatError(source, "vertices", "expected a positive integer")
    faces = document.get("faces")
    if not isinstance(faces, list) or not all(
        isinstance(face, list)
        and all(isinstance(label, int) and not isinstance(label, bool) for label in face)
        for face in faces
    ):
        raise MapFormatError(source, "faces", "expected a list of lists of integers")

    pmap = PolyhedralMap(vertices, faces)
    report = validate(pmap)
    if not report.ok:
        raise InvalidMapError(report, source)

    if "type" in document:
        try:
            t = parse_face_sequence(str(document["type"]))
        except FaceSequenceError as exc:
            raise MapFormatError(source, "type", str(exc)) from exc
        if not is_sem(pmap, t):
            raise MapFormatError(source, "type", f"not every vertex has the face sequence {t}")
    return pmap


def map_document(
    pmap: PolyhedralMap, name: Optional[str] = None, t: Optional[FaceSequence] = None
) -> Dict[str, Any]:
    """The map document of a map. Faces are stored as given."""
    document: Dict[str, Any] = {
        "vertices": pmap.n_vertices,
        "faces": [list(face) for face in pmap.faces],
    }
    if name is not None:
        document["name"] = name
    if t is not None:
        document["type"] = str(t)
    return document


def load_map(path: PathLike) -> PolyhedralMap:
    """Loads a map file.

    Args:
        path: The file.

    Returns:
        :class:`semcensus.polyhedralmap.PolyhedralMap`: The validated map.

    Raises:
        MapFormatError: If the file can not be read or parsed.
        InvalidMapError: If the faces do not form a polyhedral map.
    """
    return map_from_document(read_document(path), path)


def save_map(
    pmap: PolyhedralMap,
    path: PathLike,
    name: Optional[str] = None,
    t: Optional[FaceSequence] = None,
) -> None:
    """Writes a map file. Loading and saving an unchanged map reproduces the file byte by byte.

    Args:
        pmap: The map.
        path: The file.
        name: Optional. A name to store.
        t: Optional. The type to store.
    """
    Path(path).write_text(dumps(map_document(pmap, name, t)), encoding="utf-8")


class CatalogEntry:
    """A published map with the values the engine has to reproduce and the published claims.

    Args:
        name: The published name, e.g. ``KNO_1[(3,4^4)]``.
        t: The type.
        pmap: The map.
        expected: The values :func:`verify_catalog` checks, see :func:`verify_entry`.
        published: The published claims.
        provenance: Where the faces were transcribed from.
        path: Optional. The file the entry was loaded from.

    Attributes:
        name: The published name.
        t: The type.
        pmap: The map.
        expected: The values :func:`verify_catalog` checks.
        published: The published claims.
        provenance: Where the faces were transcribed from.
        path: The file the entry was loaded from, if any.
    """

    __slots__ = ("name", "t", "pmap", "expected", "published", "provenance", "path")

    def __init__(  # pylint: disable=R0913
        self,
        name: str,
        t: FaceSequence,
        pmap: PolyhedralMap,
        expected: Dict[str, Any],
        published: Dict[str, Any],
        provenance: str,
        path: Optional[Path] = None,
    ):
        self.name = name
        self.t = t
        self.pmap = pmap
        self.expected = expected
        self.published = published
        self.provenance = provenance
        self.path = path

    @property
    def stem(self) -> str:
        """:obj:`str`: The file name without suffix, or the name."""
        return self.path.stem if self.path else self.name

    @classmethod
    def from_document(
        cls, document: Dict[str, Any], path: Optional[Path] = None
    ) -> "CatalogEntry":
        """Builds an entry from a catalog file document.

        Raises:
            MapFormatError: If a field is missing or malformed.
            InvalidMapError: If the faces do not form a polyhedral map.
        """
        source = path or document.get("name", "<document>")
        for key in ("name", "type"):
            if not isinstance(document.get(key), str):
                raise MapFormatError(source, key, "expected a string")
        for key in ("expected", "published"):
            if not isinstance(document.get(key, {}), dict):
                raise MapFormatError(source, key, "expected a JSON object")
        pmap = map_from_document(document, source)
        return cls(
            name=document["name"],
            t=parse_face_sequence(document["type"]),
            pmap=pmap,
            expected=document.get("expected", {}),
            published=document.get("published", {}),
            provenance=str(document.get("provenance", "")),
            path=path,
        )

    def __repr__(self) -> str:
        return f"CatalogEntry({self.name})"


def load_catalog(directory: PathLike = CATALOG_DIRECTORY) -> List[CatalogEntry]:
    """Loads all map files of a catalog directory.

    Args:
        directory: Optional. The directory. Defaults to the bundled catalog.

    Returns:
        List[:class:`CatalogEntry`]: The entries, sorted by file name.

    Raises:
        MapFormatError: If the directory does not exist or a file is malformed.
        InvalidMapError: If a file holds an invalid map.
    """
    folder = Path(directory)
    if not folder.is_dir():
        raise MapFormatError(folder, "directory", "no such catalog directory")
    return [
        CatalogEntry.from_document(read_document(path), path)
        for path in sorted(folder.glob(f"*{MAP_FILE_SUFFIX}"))
    ]


def find_entry(entries: Sequence[CatalogEntry], query: str) -> CatalogEntry:
    """Looks up a catalog entry by name or file stem. Names are compared case insensitively,
    misspelled names are matched with :func:`thefuzz.fuzz.ratio`.

    Args:
        entries: The entries.
        query: The name to look up.

    Returns:
        :class:`CatalogEntry`: The best matching entry.

    Raises:
        UnknownCatalogEntryError: If no entry is close enough.
    """
    wanted = query.strip().lower()
    for entry in entries:
        if wanted in (entry.name.lower(), entry.stem.lower()):
            return entry

    scored = sorted(
        ((_score(wanted, entry), index) for index, entry in enumerate(entries)),
        key=lambda pair: (-pair[0], pair[1]),
    )
    if scored and scored[0][0] >= FUZZY_MATCH_THRESHOLD:
        entry = entries[scored[0][1]]
        logger.debug("Fuzzy match %r → %s (score %d)", query, entry.name, scored[0][0])
        return entry
    raise UnknownCatalogEntryError(
        query, [entries[index].name for _, index in scored[:FUZZY_SUGGESTIONS]]
    )


def _score(wanted: str, entry: CatalogEntry) -> int:
    return max(fuzz.ratio(wanted, entry.name.lower()), fuzz.ratio(wanted, entry.stem.lower()))


class Check(NamedTuple):
    """Outcome of comparing one value with its recomputation.

    Attributes:
        subject: What was compared, e.g. ``aut_order`` or ``generator β1``.
        expected: The stored value.
        computed: The recomputed value, or the error message.
        status: One of ``pass``/``fail``/``error`` for structural checks and
            ``agrees``/``disagrees``/``error`` for published claims.
    """

    subject: str
    expected: Any
    computed: Any
    status: str

    def to_json(self) -> Dict[str, Any]:
        """The check as JSON object."""
        return {
            "subject": self.subject,
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status,
        }


class _Recomputation:
    """Lazily recomputed properties of a map. Failures surface in the checks using them."""

    def __init__(self, pmap: PolyhedralMap, cap: int):
        self.pmap = pmap
        self.cap = cap

    @cached_property
    def group(self) -> PermutationGroup:
        return automorphism_group(self.pmap)

    @cached_property
    def group_id(self) -> GroupId:
        return identify_group(self.group, self.cap)

    @cached_property
    def orbits(self) -> List[Orbit]:
        return face_orbits(self.group, self.pmap)

    @cached_property
    def orbit_of_face(self) -> Dict[tuple, int]:
        sizes = {}
        for orbit in self.orbits:
            members = {orbit.representative}
            for element in self.group.generate():
                members.add(canonical_face([element(vertex) for vertex in orbit.representative]))
            for face in members:
                sizes[face] = orbit.size
        return sizes

    @cached_property
    def char_poly(self) -> str:
        return format_poly(char_poly(edge_graph(self.pmap)))


def _run(
    subject: str,
    expected: Any,
    compute: Callable[[], Any],
    good: str,
    bad: str,
    agree: Optional[Callable[[Any, Any], bool]] = None,
) -> Check:
    try:
        computed = compute()
    except Exception as exc:  # pylint: disable=broad-except
        logger.debug("Check %s failed with an exception", subject, exc_info=exc)
        return Check(subject, expected, str(exc), ERROR)
    matches = agree(expected, computed) if agree else expected == computed
    return Check(subject, expected, computed, good if matches else bad)


def _orbit_claim(recomputed: _Recomputation, claim: str) -> str:
    # the claimed face as written, with the size of its computed orbit
    match = _ORBIT_CLAIM.match(claim.replace(" ", ""))
    if not match:
        raise ValueError(f"can not read orbit {claim!r}")
    written = [int(label) for label in match.group(1).split(",")]
    sizes = recomputed.orbit_of_face
    face = canonical_face(written)
    if face not in sizes:
        raise ValueError(f"{format_face(written)} is not a face of the map")
    return f"{format_face(written)}_{sizes[face]}"


def _faces_at(pmap: PolyhedralMap, vertex: int) -> List[Face]:
    faces = pmap.incidence.faces_at(vertex)
    return sorted(canonical_face(pmap.faces[face_id]) for face_id, _ in faces)


def _link_agrees(pmap: PolyhedralMap, vertex: int, text: str) -> bool:
    return sorted(canonical_face(face) for face in parse_link(vertex, text)) == _faces_at(
        pmap, vertex
    )


def _is_true(_: Any, computed: Any) -> bool:
    return computed is True


def structural_checks(entry: CatalogEntry, recomputed: _Recomputation) -> List[Check]:
    """Recomputes the ``expected`` values of an entry. These checks decide the verification
    verdict.

    Args:
        entry: The entry.
        recomputed: The lazily recomputed properties of the map.

    Returns:
        List[:class:`Check`]: One check per expected value, plus validity, type, link
        notation and the Burnside cross check of the face orbits.
    """
    pmap = entry.pmap
    checks = [
        _run("valid", True, lambda: validate(pmap).ok, PASS, FAIL),
        _run("type", True, lambda: is_sem(pmap, entry.t), PASS, FAIL),
        _run(
            "link_notation",
            True,
            lambda: all(
                _link_agrees(pmap, vertex, format_link(pmap, vertex))
                for vertex in range(pmap.n_vertices)
            ),
            PASS,
            FAIL,
        ),
    ]
    computations: Dict[str, Callable[[], Any]] = {
        "euler_characteristic": lambda: euler_characteristic(pmap),
        "orientable": lambda: orientability(pmap) is Orientability.ORIENTABLE,
        "aut_order": lambda: int(recomputed.group.order()),
        "group": lambda: recomputed.group_id.name,
        "vertex_transitive": lambda: len(vertex_orbits(recomputed.group)) == 1,
        "isohedral": lambda: len(recomputed.orbits),
        "char_poly": lambda: recomputed.char_poly,
    }
    for key, compute in computations.items():
        if key in entry.expected:
            checks.append(_run(key, entry.expected[key], compute, PASS, FAIL))
    checks.append(
        _run(
            "burnside",
            True,
            lambda: burnside_face_orbit_count(recomputed.group, pmap)
            == len(recomputed.orbits),
            PASS,
            FAIL,
        )
    )
    return checks


def claim_checks(entry: CatalogEntry, recomputed: _Recomputation) -> List[Check]:
    """Compares the published claims of an entry with the recomputation.

    Args:
        entry: The entry.
        recomputed: The lazily recomputed properties of the map.

    Returns:
        List[:class:`Check`]: One check per claim with status ``agrees``, ``disagrees`` or
        ``error``.
    """
    pmap = entry.pmap
    published = entry.published
    checks = []
    if "group" in published:
        checks.append(
            _run("group", published["group"], lambda: recomputed.group_id.name, AGREES, DISAGREES)
        )
    if "isohedral" in published:
        checks.append(
            _run(
                "isohedral",
                published["isohedral"],
                lambda: len(recomputed.orbits),
                AGREES,
                DISAGREES,
            )
        )
    for claim in published.get("orbits", []):
        checks.append(
            _run(
                f"orbit {claim}",
                claim,
                partial(_orbit_claim, recomputed, claim),
                AGREES,
                DISAGREES,
                agree=lambda wanted, computed: wanted.replace(" ", "") == computed,
            )
        )
    if "charpoly" in published:
        checks.append(
            _run(
                "charpoly",
                published["charpoly"],
                lambda: recomputed.char_poly,
                AGREES,
                DISAGREES,
                agree=lambda wanted, computed: format_poly(parse_poly(wanted)) == computed,
            )
        )
    for generator in published.get("generators", []):
        checks.append(
            _run(
                f"generator {generator['name']}",
                generator["cycles"],
                partial(_automorphism_claim, pmap, generator["cycles"]),
                AGREES,
                DISAGREES,
                agree=_is_true,
            )
        )
    for listing in published.get("common_neighbor_graphs", []):
        index = int(listing["i"])
        checks.append(
            _run(
                f"G{index}",
                listing["listing"],
                partial(_listing_claim, pmap, index, listing["listing"]),
                AGREES,
                DISAGREES,
                agree=_is_true,
            )
        )
    for link in published.get("links", []):
        vertex = int(link["vertex"])
        checks.append(
            _run(
                f"lk({vertex})",
                link["link"],
                partial(_link_agrees, pmap, vertex, link["link"]),
                AGREES,
                DISAGREES,
                agree=_is_true,
            )
        )
    return checks


def _automorphism_claim(pmap: PolyhedralMap, text: str) -> bool:
    return check_witness(pmap, pmap, parse_cycles(text, pmap.n_vertices))


def _listing_claim(pmap: PolyhedralMap, index: int, text: str) -> bool:
    return same_edges(
        parse_graph_listing(text, pmap.n_vertices), common_neighbor_graph(pmap, index)
    )


class EntryReport(NamedTuple):
    """Verification of one catalog entry."""

    name: str
    checks: List[Check]
    claims: List[Check]
    fingerprint: Optional[list]

    @property
    def ok(self) -> bool:
        """:obj:`bool`: Whether all structural checks pass."""
        return all(check.status == PASS for check in self.checks)

    def to_json(self) -> Dict[str, Any]:
        """The report as JSON object."""
        return {
            "name": self.name,
            "ok": self.ok,
            "checks": [check.to_json() for check in self.checks],
            "claims": [check.to_json() for check in self.claims],
            "fingerprint": self.fingerprint,
        }


class CatalogReport(NamedTuple):
    """Verification of a whole catalog."""

    entries: List[EntryReport]
    pairwise: List[Check]

    @property
    def ok(self) -> bool:
        """:obj:`bool`: Whether all structural checks of all entries and all pairwise
        non-isomorphism checks pass."""
        return all(entry.ok for entry in self.entries) and all(
            check.status == PASS for check in self.pairwise
        )

    @property
    def discrepancies(self) -> List[Dict[str, Any]]:
        """List[Dict[str, Any]]: The published claims that disagree or could not be checked."""
        return [
            dict(check.to_json(), entry=entry.name)
            for entry in self.entries
            for check in entry.claims
            if check.status != AGREES
        ]

    def to_json(self) -> Dict[str, Any]:
        """The report as JSON object."""
        claims = [check for entry in self.entries for check in entry.claims]
        return {
            "ok": self.ok,
            "entries": [entry.to_json() for entry in self.entries],
            "pairwise": [check.to_json() for check in self.pairwise],
            "discrepancies": self.discrepancies,
            "summary": {
                "entries": len(self.entries),
                "structural_checks": sum(len(entry.checks) for entry in self.entries)
                + len(self.pairwise),
                "failed": sum(
                    check.status != PASS for entry in self.entries for check in entry.checks
                )
                + sum(check.status != PASS for check in self.pairwise),
                "claims": len(claims),
                "agreeing_claims": sum(check.status == AGREES for check in claims),
            },
        }


def verify_entry(entry: CatalogEntry, cap: int = DEFAULT_GROUP_ORDER_CAP) -> EntryReport:
    """Recomputes everything stored with a catalog entry. Never raises for a broken entry.

    Args:
        entry: The entry.
        cap: Optional. The group order cap for group identification.

    Returns:
        :class:`EntryReport`: The report.
    """
    recomputed = _Recomputation(entry.pmap, cap)
    checks = structural_checks(entry, recomputed)
    claims = claim_checks(entry, recomputed)
    try:
        fingerprint: Optional[list] = invariant_fingerprint(entry.pmap).to_json()
    except Exception as exc:  # pylint: disable=broad-except
        logger.debug("No fingerprint for %s", entry.name, exc_info=exc)
        fingerprint = None
    report = EntryReport(entry.name, checks, claims, fingerprint)
    logger.info(
        "%s: %s, %d of %d published claims agree",
        entry.name,
        "ok" if report.ok else "FAILED",
        sum(check.status == AGREES for check in claims),
        len(claims),
    )
    for check in claims:
        if check.status != AGREES:
            logger.warning("%s: %s %s", entry.name, check.subject, check.status)
    return report


def _isomorphism_verdict(first: PolyhedralMap, second: PolyhedralMap) -> str:
    witness = are_isomorphic(first, second)
    return "not isomorphic" if witness is None else format_cycles(witness)


def pairwise_checks(entries: Iterable[CatalogEntry]) -> List[Check]:
    """Checks that entries of the same type are pairwise non-isomorphic.

    Args:
        entries: The entries.

    Returns:
        List[:class:`Check`]: One check per pair of entries of equal type. A failing check
        shows the isomorphism found.
    """
    by_type: Dict[FaceSequence, List[CatalogEntry]] = {}
    for entry in entries:
        by_type.setdefault(entry.t, []).append(entry)
    return [
        _run(
            f"{first.name} ≇ {second.name}",
            "not isomorphic",
            partial(_isomorphism_verdict, first.pmap, second.pmap),
            PASS,
            FAIL,
        )
        for t in sorted(by_type)
        for first, second in combinations(by_type[t], 2)
    ]


def verify_catalog(
    entries: Sequence[CatalogEntry], cap: int = DEFAULT_GROUP_ORDER_CAP
) -> CatalogReport:
    """Verifies all entries of a catalog and their pairwise non-isomorphism.

    Args:
        entries: The entries.
        cap: Optional. The group order cap for group identification.

    Returns:
        :class:`CatalogReport`: The report. Its verdict only depends on the structural checks.
    """
    return CatalogReport([verify_entry(entry, cap) for entry in entries], pairwise_checks(entries))

#!/usr/bin/env python3
import json
from pathlib import Path
from typing import Dict, List

import pytest
from hypothesis import HealthCheck, settings

from semcensus.catalog import CatalogEntry, CatalogReport, load_catalog, verify_catalog
from semcensus.constants import CATALOG_DIRECTORY
from semcensus.linknotation import faces_from_links
from semcensus.polyhedralmap import PolyhedralMap

DATA_DIRECTORY = Path(__file__).resolve().parent / "data"

TETRAHEDRON = PolyhedralMap(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
OCTAHEDRON = PolyhedralMap(
    6,
    [
        (0, 1, 2),
        (0, 2, 3),
        (0, 3, 4),
        (0, 4, 1),
        (5, 1, 2),
        (5, 2, 3),
        (5, 3, 4),
        (5, 4, 1),
    ],
)
CUBE = PolyhedralMap(
    8,
    [
        (0, 1, 2, 3),
        (4, 5, 6, 7),
        (0, 1, 5, 4),
        (1, 2, 6, 5),
        (2, 3, 7, 6),
        (3, 0, 4, 7),
    ],
)
PRISM = PolyhedralMap(6, [(0, 1, 2), (3, 4, 5), (0, 1, 4, 3), (1, 2, 5, 4), (2, 0, 3, 5)])
# the six vertex real projective plane
PROJECTIVE_PLANE = PolyhedralMap(
    6,
    [
        (0, 1, 2),
        (0, 2, 3),
        (0, 3, 4),
        (0, 4, 5),
        (0, 5, 1),
        (1, 2, 4),
        (2, 3, 5),
        (3, 4, 1),
        (4, 5, 2),
        (5, 1, 3),
    ],
)
# the seven vertex torus
TORUS = PolyhedralMap(
    7,
    [((i, (i + 1) % 7, (i + 3) % 7)) for i in range(7)]
    + [((i, (i + 2) % 7, (i + 3) % 7)) for i in range(7)],
)

SMALL_MAPS: Dict[str, PolyhedralMap] = {
    "tetrahedron": TETRAHEDRON,
    "octahedron": OCTAHEDRON,
    "cube": CUBE,
    "prism": PRISM,
    "projective_plane": PROJECTIVE_PLANE,
    "torus": TORUS,
}

# every shipped catalog map and the vertex transitive map, all on twelve vertices
TWELVE_VERTEX_MAPS = sorted(path.stem for path in CATALOG_DIRECTORY.glob("*.json")) + [
    "vertex_transitive"
]

RELABELLING_SETTINGS = settings(
    max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)


def read_data(name: str) -> dict:
    return json.loads((DATA_DIRECTORY / name).read_text(encoding="utf-8"))


@pytest.fixture(params=sorted(SMALL_MAPS))
def small_map(request) -> PolyhedralMap:
    return SMALL_MAPS[request.param]


@pytest.fixture(scope="session")
def catalog() -> List[CatalogEntry]:
    return load_catalog()


@pytest.fixture(scope="session")
def entries(catalog) -> Dict[str, CatalogEntry]:
    return {entry.name: entry for entry in catalog}


@pytest.fixture(scope="session")
def catalog_report(catalog) -> CatalogReport:
    return verify_catalog(catalog)


@pytest.fixture(scope="session")
def link_map() -> PolyhedralMap:
    """The (3,4^4) map rebuilt from eight vertex links and one more triangle."""
    data = read_data("k1_links.json")
    links = {int(vertex): text for vertex, text in data["links"].items()}
    faces = faces_from_links(links) + [tuple(face) for face in data["extra_faces"]]
    return PolyhedralMap(data["vertices"], faces)


@pytest.fixture(scope="session")
def transitive_map() -> PolyhedralMap:
    data = read_data("vertex_transitive_3-3-3-4-3-4.json")
    return PolyhedralMap(data["vertices"], data["faces"])


@pytest.fixture(scope="session", params=TWELVE_VERTEX_MAPS)
def twelve_vertex_map(request, catalog, transitive_map) -> PolyhedralMap:
    if request.param == "vertex_transitive":
        return transitive_map
    (entry,) = [entry for entry in catalog if entry.stem == request.param]
    return entry.pmap

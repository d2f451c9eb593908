#!/usr/bin/env python3
"""Handlers of the sub-commands. Every handler takes the parsed arguments and the settings and
returns the exit code."""
import argparse
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

from semcensus.catalog import find_entry, load_catalog, load_map, verify_catalog
from semcensus.constants import EXIT_NEGATIVE, EXIT_SUCCESS, GRAPH_EDGE, MAP_FILE_SUFFIX
from semcensus.enumerator import enumerate_sems, sweep
from semcensus.error import FaceSequenceError, GroupTooLargeError, NonIntegralError
from semcensus.facesequence import euler_of_type, parse_face_sequence
from semcensus.invariants import (
    char_poly,
    common_neighbor_graph,
    edge_graph,
    format_poly,
    invariant_fingerprint,
)
from semcensus.isomorphism import are_isomorphic
from semcensus.linknotation import format_link
from semcensus.orientation import Orientability, orientability
from semcensus.polyhedralmap import PolyhedralMap, euler_characteristic
from semcensus.settings import Settings
from semcensus.symmetry import automorphism_group, face_orbits, identify_group, vertex_orbits
from semcensus.utils import dumps, format_cycles, graph_to_dot

logger = logging.getLogger(__name__)


def resolve_map(reference: str, settings: Settings) -> PolyhedralMap:
    """Loads the map a command line argument refers to. Existing files and arguments ending in
    ``.json`` are read as map files, everything else is looked up in the catalog.

    Args:
        reference: The argument.
        settings: The settings, for the catalog directory.

    Returns:
        :class:`semcensus.polyhedralmap.PolyhedralMap`: The validated map.

    Raises:
        MapFormatError: If the file can not be read.
        InvalidMapError: If the file holds no valid map.
        UnknownCatalogEntryError: If no catalog entry matches.
    """
    path = Path(reference)
    if path.suffix == MAP_FILE_SUFFIX or path.is_file():
        return load_map(path)
    return find_entry(load_catalog(settings.catalog_directory), reference).pmap


def _is_orientable(pmap: PolyhedralMap) -> bool:
    return orientability(pmap) is Orientability.ORIENTABLE


def _emit(document: Any, out: Optional[str] = None) -> None:
    text = dumps(document)
    if out is None:
        print(text, end="")
    else:
        Path(out).write_text(text, encoding="utf-8")
        logger.info("Wrote %s", out)


def enumerate_command(args: argparse.Namespace, settings: Settings) -> int:
    """Runs a census and prints one representative per isomorphism class."""
    t = parse_face_sequence(args.type)
    if args.chi is not None:
        try:
            chi = euler_of_type(t, args.vertices)
        except NonIntegralError:
            # no maps at all, the census below is empty
            chi = None
        if chi is not None and chi != args.chi:
            raise FaceSequenceError(
                args.type, f"maps on {args.vertices} vertices have χ = {chi}, not {args.chi}"
            )

    budget = args.budget
    if budget is None:
        budget = settings.default_budget(t.degree, args.vertices)
    result = enumerate_sems(
        t, args.vertices, limit=budget, jobs=args.jobs or settings.jobs, seed=args.seed
    )

    representatives = [
        {"faces": [list(face) for face in pmap.faces], "orientable": _is_orientable(pmap)}
        for pmap in result.representatives
    ]
    orientable = sum(entry["orientable"] for entry in representatives)
    _emit(
        {
            "type": str(t),
            "vertices": args.vertices,
            "count": result.count,
            "orientable": orientable,
            "non_orientable": result.count - orientable,
            "nodes": result.stats.nodes,
            "representatives": representatives,
        },
        args.out,
    )
    return EXIT_SUCCESS


def sweep_command(args: argparse.Namespace, settings: Settings) -> int:
    """Runs the censuses of all admissible types up to a vertex count. Cells whose census runs
    out of budget are printed as ``null`` and listed under ``exhausted``."""
    table = sweep(
        args.max_vertices,
        args.chi,
        limit=args.budget,
        jobs=args.jobs or settings.jobs,
        budget=lambda t, n_vertices: settings.default_budget(t.degree, n_vertices),
    )
    rows = [
        {"vertices": vertices, "counts": {str(t): count for t, count in row.items()}}
        for vertices, row in sorted(table.items())
    ]
    exhausted = [
        {"type": str(t), "vertices": vertices}
        for vertices, row in sorted(table.items())
        for t, count in row.items()
        if count is None
    ]
    total = sum(count for row in table.values() for count in row.values() if count is not None)
    _emit(
        {
            "chi": args.chi,
            "max_vertices": args.max_vertices,
            "rows": rows,
            "exhausted": exhausted,
            "total": total,
            "all_zero": total == 0 and not exhausted,
        }
    )
    return EXIT_NEGATIVE if exhausted else EXIT_SUCCESS


def invariants_command(args: argparse.Namespace, settings: Settings) -> int:
    """Prints χ, the vertex, edge and face counts and orientability, plus the requested
    common neighbour graphs, characteristic polynomial and fingerprint."""
    pmap = resolve_map(args.map, settings)
    document: Dict[str, Any] = {
        "euler_characteristic": euler_characteristic(pmap),
        "vertices": pmap.n_vertices,
        "edges": len(pmap.edges),
        "faces": len(pmap.faces),
        "orientable": _is_orientable(pmap),
    }
    if args.gi:
        document["common_neighbor_graphs"] = [
            {
                "i": index,
                "edges": sorted(
                    sorted(edge) for edge in common_neighbor_graph(pmap, index).edges
                ),
            }
            for index in sorted(set(args.gi))
        ]
    if args.charpoly:
        document["char_poly"] = format_poly(char_poly(edge_graph(pmap)))
    if args.fingerprint:
        document["fingerprint"] = invariant_fingerprint(pmap).to_json()
    _emit(document)
    return EXIT_SUCCESS


def isomorphic_command(args: argparse.Namespace, settings: Settings) -> int:
    """Decides isomorphism of two maps and prints a witness if there is one."""
    witness = are_isomorphic(
        resolve_map(args.first, settings), resolve_map(args.second, settings)
    )
    if witness is None:
        _emit({"isomorphic": False})
        return EXIT_NEGATIVE
    _emit({"isomorphic": True, "witness": format_cycles(witness)})
    return EXIT_SUCCESS


def aut_command(args: argparse.Namespace, settings: Settings) -> int:
    """Prints the automorphism group of a map with its orbits."""
    pmap = resolve_map(args.map, settings)
    group = automorphism_group(pmap)
    try:
        name: Optional[str] = identify_group(group, cap=args.cap or settings.group_order_cap).name
    except GroupTooLargeError as exc:
        logger.warning("%s", exc)
        name = None
    vertices = vertex_orbits(group)
    faces = face_orbits(group, pmap)
    _emit(
        {
            "order": int(group.order()),
            "group": name,
            "generators": [
                format_cycles(generator)
                for generator in group.generators
                if not generator.is_Identity
            ],
            "vertex_orbits": [str(orbit) for orbit in vertices],
            "face_orbits": [str(orbit) for orbit in faces],
            "vertex_transitive": len(vertices) == 1,
            "isohedral": len(faces),
        }
    )
    return EXIT_SUCCESS


def orientable_command(args: argparse.Namespace, settings: Settings) -> int:
    """Prints whether a map is orientable. Non-orientable maps give exit code 1."""
    result = orientability(resolve_map(args.map, settings))
    _emit({"orientability": str(result)})
    return EXIT_SUCCESS if result is Orientability.ORIENTABLE else EXIT_NEGATIVE


def verify_catalog_command(args: argparse.Namespace, settings: Settings) -> int:
    """Verifies the catalog. Exit code 1 if a structural check does not pass."""
    del args
    report = verify_catalog(load_catalog(settings.catalog_directory), settings.group_order_cap)
    _emit(report.to_json())
    return EXIT_SUCCESS if report.ok else EXIT_NEGATIVE


def export_dot_command(args: argparse.Namespace, settings: Settings) -> int:
    """Writes the edge graph or a common neighbour graph in the DOT language."""
    pmap = resolve_map(args.map, settings)
    if args.graph == GRAPH_EDGE:
        text = graph_to_dot(edge_graph(pmap), GRAPH_EDGE)
    else:
        index = int(args.graph[1:])
        text = graph_to_dot(common_neighbor_graph(pmap, index), args.graph, {"i": index})
    if args.out is None:
        print(text, end="")
    else:
        Path(args.out).write_text(text, encoding="utf-8")
    return EXIT_SUCCESS


def catalog_command(args: argparse.Namespace, settings: Settings) -> int:
    """Lists the catalog or shows a single entry with the links of all vertices."""
    entries = load_catalog(settings.catalog_directory)
    if args.name is None:
        listing: List[Dict[str, Any]] = [
            {
                "name": entry.name,
                "type": entry.t.pretty(),
                "file": entry.path.name if entry.path else None,
            }
            for entry in entries
        ]
        _emit({"entries": listing})
        return EXIT_SUCCESS

    entry = find_entry(entries, args.name)
    _emit(
        {
            "name": entry.name,
            "type": entry.t.pretty(),
            "vertices": entry.pmap.n_vertices,
            "faces": [list(face) for face in entry.pmap.faces],
            "links": [
                {"vertex": vertex, "link": format_link(entry.pmap, vertex)}
                for vertex in range(entry.pmap.n_vertices)
            ],
            "expected": entry.expected,
            "provenance": entry.provenance,
        }
    )
    return EXIT_SUCCESS

#!/usr/bin/env python3
"""Methods for building the command line interface."""
import argparse
import re

from semcensus.commands import (
    aut_command,
    catalog_command,
    enumerate_command,
    export_dot_command,
    invariants_command,
    isomorphic_command,
    orientable_command,
    sweep_command,
    verify_catalog_command,
)
from semcensus.constants import CONFIG_FILE, GRAPH_EDGE, SEED_MODES, SEED_STAR

_COMMON_NEIGHBOR_GRAPH = re.compile(r"^g(\d+)$")


def _integer(text: str, least: int) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from exc
    if value < least:
        raise argparse.ArgumentTypeError(f"{value} is smaller than {least}")
    return value


def positive_int(text: str) -> int:
    """Argument type for counts that must be at least 1."""
    return _integer(text, 1)


def non_negative_int(text: str) -> int:
    """Argument type for indices that must be at least 0."""
    return _integer(text, 0)


def graph_choice(text: str) -> str:
    """Argument type for ``--graph``: ``edge`` or ``g<i>`` for the common neighbour graph
    ``G_i``."""
    value = text.strip().lower()
    if value == GRAPH_EDGE or _COMMON_NEIGHBOR_GRAPH.match(value):
        return value
    raise argparse.ArgumentTypeError(f"expected {GRAPH_EDGE} or g<i>, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    """Builds the argument parser with one sub-command per operation. Every sub-parser sets
    its handler as default ``handler``.

    Returns:
        :class:`argparse.ArgumentParser`: The parser.
    """
    parser = argparse.ArgumentParser(
        prog="semcensus",
        description="Census, invariants and symmetries of semi-equivelar maps.",
    )
    parser.add_argument(
        "--config", default=CONFIG_FILE, help=f"configuration file (default: {CONFIG_FILE})"
    )
    parser.add_argument("--catalog", help="catalog directory, overrides the configuration")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    census = subparsers.add_parser("enumerate", help="all maps of a type up to isomorphism")
    census.add_argument(
        "--type", required=True, help="face sequence, e.g. 3,4,4,4,4 or 3^3,4,3,4"
    )
    census.add_argument("--vertices", required=True, type=positive_int)
    census.add_argument("--chi", type=int, help="Euler characteristic the type must give")
    census.add_argument("--budget", type=positive_int, help="node budget of the search")
    census.add_argument("--jobs", type=positive_int, help="number of worker processes")
    census.add_argument("--seed", choices=SEED_MODES, default=SEED_STAR)
    census.add_argument("--out", help="write the census to this file instead of stdout")
    census.set_defaults(handler=enumerate_command)

    table = subparsers.add_parser("sweep", help="censuses of all admissible types")
    table.add_argument("--max-vertices", required=True, type=positive_int)
    table.add_argument("--chi", required=True, type=int)
    table.add_argument("--budget", type=positive_int, help="node budget of every census")
    table.add_argument("--jobs", type=positive_int, help="number of worker processes")
    table.set_defaults(handler=sweep_command)

    invariants = subparsers.add_parser("invariants", help="invariants of a map")
    invariants.add_argument("map", help="map file or catalog name")
    invariants.add_argument(
        "--gi", type=non_negative_int, action="append", default=[], metavar="I", help="print G_I"
    )
    invariants.add_argument("--charpoly", action="store_true")
    invariants.add_argument("--fingerprint", action="store_true")
    invariants.set_defaults(handler=invariants_command)

    isomorphic = subparsers.add_parser("isomorphic", help="decide isomorphism of two maps")
    isomorphic.add_argument("first", help="map file or catalog name")
    isomorphic.add_argument("second", help="map file or catalog name")
    isomorphic.set_defaults(handler=isomorphic_command)

    aut = subparsers.add_parser("aut", help="automorphism group and orbits of a map")
    aut.add_argument("map", help="map file or catalog name")
    aut.add_argument("--cap", type=positive_int, help="largest group order to identify")
    aut.set_defaults(handler=aut_command)

    orientable = subparsers.add_parser("orientable", help="orientability of a map")
    orientable.add_argument("map", help="map file or catalog name")
    orientable.set_defaults(handler=orientable_command)

    verify = subparsers.add_parser("verify-catalog", help="recompute all catalog claims")
    verify.set_defaults(handler=verify_catalog_command)

    dot = subparsers.add_parser("export-dot", help="edge graph or G_i in the DOT language")
    dot.add_argument("map", help="map file or catalog name")
    dot.add_argument("--graph", type=graph_choice, default=GRAPH_EDGE, help="edge or g<i>")
    dot.add_argument("--out", help="write to this file instead of stdout")
    dot.set_defaults(handler=export_dot_command)

    catalog = subparsers.add_parser("catalog", help="list the catalog or show one entry")
    catalog.add_argument("name", nargs="?", help="entry name, misspellings are tolerated")
    catalog.set_defaults(handler=catalog_command)

    return parser

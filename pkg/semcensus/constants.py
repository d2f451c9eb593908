#!/usr/bin/env python3
"""Constants for the census engine."""
from pathlib import Path

PACKAGE_DIRECTORY: Path = Path(__file__).resolve().parent
""":class:`pathlib.Path`: Directory of the :mod:`semcensus` package."""
CATALOG_DIRECTORY: Path = PACKAGE_DIRECTORY.parent / "catalog"
""":class:`pathlib.Path`: Directory containing the catalog files of the named maps."""
MAP_FILE_SUFFIX: str = ".json"
""":obj:`str`: Suffix of map files."""

CONFIG_FILE: str = "semcensus.ini"
""":obj:`str`: Name of the configuration file read at start-up."""
CONFIG_SECTION: str = "SemCensus"
""":obj:`str`: Section of :attr:`CONFIG_FILE` holding the settings."""
LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
""":obj:`str`: Format of the log records."""
DEFAULT_LOG_FILE: str = "semcensus.log"
""":obj:`str`: File the log is written to unless configured otherwise."""
DEFAULT_LOG_LEVEL: str = "INFO"
""":obj:`str`: Default log level."""

EXIT_SUCCESS: int = 0
""":obj:`int`: Exit code for success and positive answers."""
EXIT_NEGATIVE: int = 1
""":obj:`int`: Exit code for negative answers of predicates and for incomplete censuses."""
EXIT_USAGE: int = 2
""":obj:`int`: Exit code for usage, parse and configuration errors."""

MIN_GON: int = 3
""":obj:`int`: Smallest face size."""
MIN_DEGREE: int = 3
""":obj:`int`: Smallest vertex degree."""

DEFAULT_GROUP_ORDER_CAP: int = 10_000
""":obj:`int`: Largest group order :func:`semcensus.symmetry.identify_group` accepts by
default."""
BURNSIDE_ORDER_LIMIT: int = 100
""":obj:`int`: Largest group order for which orbits are cross-checked by Burnside's lemma."""
DEFAULT_HIGH_DEGREE_BUDGET: int = 2_000_000
""":obj:`int`: Node budget used for expensive censuses when none is given explicitly."""
HIGH_DEGREE: int = 7
""":obj:`int`: Types of at least this degree count as expensive."""
UNBUDGETED_VERTICES: int = 12
""":obj:`int`: Censuses on more vertices than this count as expensive."""

SEED_STAR: str = "star"
""":obj:`str`: Seeding mode fixing all faces around vertex 0."""
SEED_FACE: str = "face"
""":obj:`str`: Seeding mode fixing a single face of maximal size."""
SEED_MODES = (SEED_STAR, SEED_FACE)
""":obj:`tuple`: All seeding modes."""

FUZZY_MATCH_THRESHOLD: int = 70
""":obj:`int`: Minimal :func:`thefuzz.fuzz.ratio` score for a fuzzy catalog match."""
FUZZY_SUGGESTIONS: int = 3
""":obj:`int`: Number of suggestions given when no catalog entry matches."""

GRAPH_EDGE: str = "edge"
""":obj:`str`: Name of the edge graph for graph exports."""

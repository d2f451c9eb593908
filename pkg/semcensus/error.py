#!/usr/bin/env python3
"""Exceptions raised by the census engine and the error reporter of the command line tool."""
import logging
import sys
import traceback
from typing import TYPE_CHECKING, Optional, Sequence, TextIO

from semcensus.constants import EXIT_NEGATIVE, EXIT_USAGE

if TYPE_CHECKING:
    from semcensus.enumerator import CensusStats
    from semcensus.polyhedralmap import ValidationReport

logger = logging.getLogger(__name__)


class SemCensusError(Exception):
    """Base class for all exceptions raised by :mod:`semcensus`."""


class ConfigurationError(SemCensusError):
    """Raised when a value in the configuration file can not be used.

    Args:
        key: The offending key.
        value: The configured value.
        reason: What is wrong with it.
    """

    def __init__(self, key: str, value: object, reason: str) -> None:
        self.key = key
        self.value = value
        super().__init__(f"Invalid configuration value {key} = {value!r}: {reason}.")


class FaceSequenceError(SemCensusError, ValueError):
    """Raised for face sequences that are not a valid vertex type.

    Args:
        raw: The offending input.
        reason: What is wrong with it.
    """

    def __init__(self, raw: object, reason: str) -> None:
        self.raw = raw
        super().__init__(f"Invalid face sequence {raw!r}: {reason}.")


class NonIntegralError(SemCensusError):
    """Raised when the number of faces of some size would not be an integer.

    Args:
        gon: The face size ``a`` with ``a ∤ v·n_a``.
        vertices: The vertex count.
        multiplicity: The multiplicity ``n_a`` of ``gon`` in the type.
    """

    def __init__(self, gon: int, vertices: int, multiplicity: int) -> None:
        self.gon = gon
        self.vertices = vertices
        self.multiplicity = multiplicity
        super().__init__(
            f"{vertices} vertices with {multiplicity} {gon}-gon(s) each need "
            f"{vertices * multiplicity}/{gon} {gon}-gons, which is not an integer."
        )


class MapFormatError(SemCensusError):
    """Raised when a map file can not be parsed.

    Args:
        source: The file (or other source) that was read.
        field: The field or line the problem was found in.
        reason: What is wrong with it.
    """

    def __init__(self, source: object, field: str, reason: str) -> None:
        self.source = source
        self.field = field
        super().__init__(f"{source}: field {field}: {reason}.")


class InvalidMapError(SemCensusError):
    """Raised when an operation needs a valid map but got one violating polyhedrality.

    Args:
        report: The validation report listing the violations.
        source: Optional. Where the map came from.
    """

    def __init__(self, report: "ValidationReport", source: object = None) -> None:
        self.report = report
        self.source = source
        prefix = f"{source}: " if source is not None else ""
        super().__init__(f"{prefix}invalid map: {'; '.join(report.messages())}")


class LinkError(SemCensusError):
    """Raised when the link of a vertex can not be formed or parsed.

    Args:
        vertex: The center of the link.
        reason: What is wrong with it.
    """

    def __init__(self, vertex: int, reason: str) -> None:
        self.vertex = vertex
        super().__init__(f"Link of vertex {vertex}: {reason}.")


class CycleNotationError(SemCensusError, ValueError):
    """Raised for permutations in cycle notation that can not be read.

    Args:
        text: The offending text.
        reason: What is wrong with it.
    """

    def __init__(self, text: str, reason: str) -> None:
        self.text = text
        super().__init__(f"Invalid permutation {text!r}: {reason}.")


class NotAnAutomorphismError(SemCensusError):
    """Raised when a group is asked to act on the faces of a map it does not preserve.

    Args:
        permutation: The offending group element in cycle notation.
    """

    def __init__(self, permutation: str) -> None:
        self.permutation = permutation
        super().__init__(f"{permutation} does not map the face set onto itself.")


class GroupTooLargeError(SemCensusError):
    """Raised when a group is too large to be identified by its element orders.

    Args:
        order: The group order.
        cap: The configured cap.
    """

    def __init__(self, order: int, cap: int) -> None:
        self.order = order
        self.cap = cap
        super().__init__(f"Group of order {order} exceeds the identification cap {cap}.")


class BudgetExhausted(SemCensusError):
    """Raised when a census explores more search nodes than allowed. The census is incomplete.

    Args:
        stats: The statistics gathered until the budget ran out.
        limit: The node budget.
    """

    def __init__(self, stats: "CensusStats", limit: int) -> None:
        self.stats = stats
        self.limit = limit
        super().__init__(
            f"Node budget of {limit} exhausted after {stats.nodes} nodes; "
            f"the census is incomplete."
        )


class UnknownCatalogEntryError(SemCensusError):
    """Raised when no catalog entry matches a query.

    Args:
        query: The name that was looked up.
        suggestions: The closest entry names.
    """

    def __init__(self, query: str, suggestions: Sequence[str] = ()) -> None:
        self.query = query
        self.suggestions = tuple(suggestions)
        hint = f" Did you mean {', '.join(self.suggestions)}?" if self.suggestions else ""
        super().__init__(f"No catalog entry matches {query!r}.{hint}")


def report_error(exc: SemCensusError, stream: Optional[TextIO] = None) -> int:
    """Logs an error raised while running a sub-command and tells the user about it.

    Args:
        exc: The exception.
        stream: Optional. Where to print the short message. Defaults to :obj:`sys.stderr`.

    Returns:
        int: The exit code for the error. :class:`BudgetExhausted` means that the answer is not
        established and gives :attr:`semcensus.constants.EXIT_NEGATIVE`, everything else is an
        input problem and gives :attr:`semcensus.constants.EXIT_USAGE`.
    """
    # Log the error before we do anything else, so we can see it even if something breaks.
    logger.error(msg="Exception while running the command:", exc_info=exc)
    tb_string = "".join(traceback.format_exception(None, exc, exc.__traceback__))
    logger.debug("Full traceback:\n%s", tb_string)

    print(f"error: {exc}", file=stream or sys.stderr)
    if isinstance(exc, BudgetExhausted):
        return EXIT_NEGATIVE
    return EXIT_USAGE

#!/usr/bin/env python3
"""The script that runs the census engine."""
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from semcensus.constants import DEFAULT_LOG_LEVEL, LOG_FORMAT
from semcensus.error import ConfigurationError, SemCensusError, report_error
from semcensus.settings import Settings
from semcensus.setup import build_parser

logger = logging.getLogger(__name__)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run a sub-command.

    Args:
        argv: Optional. The arguments. Defaults to :obj:`sys.argv`.

    Returns:
        int: The exit code.
    """
    args = build_parser().parse_args(argv)

    # Read configuration values from semcensus.ini
    try:
        settings = Settings.load(args.config)
    except ConfigurationError as exc:
        # No usable log settings, log to standard error
        logging.basicConfig(format=LOG_FORMAT, level=DEFAULT_LOG_LEVEL)
        return report_error(exc)
    if args.catalog:
        settings.catalog_directory = Path(args.catalog)

    # Enable logging
    logging.basicConfig(format=LOG_FORMAT, level=settings.log_level, filename=settings.log_file)
    logger.debug("Running %s with %s", args.command, vars(args))

    try:
        return args.handler(args, settings)
    except SemCensusError as exc:
        return report_error(exc)


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""The settings read from the configuration file."""
import logging
from configparser import ConfigParser, SectionProxy
from configparser import Error as ConfigParserError
from pathlib import Path
from typing import Optional, Union

from semcensus.constants import (
    CATALOG_DIRECTORY,
    CONFIG_FILE,
    CONFIG_SECTION,
    DEFAULT_GROUP_ORDER_CAP,
    DEFAULT_HIGH_DEGREE_BUDGET,
    DEFAULT_LOG_FILE,
    DEFAULT_LOG_LEVEL,
    HIGH_DEGREE,
    UNBUDGETED_VERTICES,
)
from semcensus.error import ConfigurationError

logger = logging.getLogger(__name__)


class Settings:  # pylint: disable=R0902
    """Settings of a run of the census engine.

    Args:
        catalog_directory: Directory holding the catalog files.
        jobs: Default number of worker processes for censuses. Defaults to ``1``.
        group_order_cap: Largest group order that is identified.
        high_degree_budget: Node budget applied to expensive censuses if none is given.
        log_file: File to write the log to. :obj:`None` logs to standard error.
        log_level: Name of the log level.

    Attributes:
        catalog_directory: Directory holding the catalog files.
        jobs: Default number of worker processes for censuses.
        group_order_cap: Largest group order that is identified.
        high_degree_budget: Node budget applied to expensive censuses if none is given.
        log_file: File to write the log to. :obj:`None` logs to standard error.
        log_level: Name of the log level.
    """

    __slots__ = (
        "catalog_directory",
        "jobs",
        "group_order_cap",
        "high_degree_budget",
        "log_file",
        "log_level",
    )

    def __init__(  # pylint: disable=R0913
        self,
        catalog_directory: Union[str, Path] = CATALOG_DIRECTORY,
        jobs: int = 1,
        group_order_cap: int = DEFAULT_GROUP_ORDER_CAP,
        high_degree_budget: int = DEFAULT_HIGH_DEGREE_BUDGET,
        log_file: Optional[str] = DEFAULT_LOG_FILE,
        log_level: str = DEFAULT_LOG_LEVEL,
    ):
        self.catalog_directory = Path(catalog_directory)
        self.jobs = jobs
        self.group_order_cap = group_order_cap
        self.high_degree_budget = high_degree_budget
        self.log_file = log_file
        self.log_level = log_level

    @classmethod
    def from_config(cls, config: ConfigParser) -> "Settings":
        """Builds the settings from a parsed configuration. Missing keys keep their defaults.

        Args:
            config: The parsed configuration.

        Returns:
            :class:`Settings`: The settings.

        Raises:
            ConfigurationError: If a value is malformed.
        """
        if not config.has_section(CONFIG_SECTION):
            return cls()
        section = config[CONFIG_SECTION]

        settings = cls(
            jobs=_positive_int(section, "jobs", 1),
            group_order_cap=_positive_int(section, "group_order_cap", DEFAULT_GROUP_ORDER_CAP),
            high_degree_budget=_positive_int(
                section, "high_degree_budget", DEFAULT_HIGH_DEGREE_BUDGET
            ),
        )
        if "catalog_directory" in section:
            settings.catalog_directory = Path(section["catalog_directory"]).expanduser()
        if "log_file" in section:
            settings.log_file = section["log_file"].strip() or None

        level = section.get("log_level", DEFAULT_LOG_LEVEL).strip().upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ConfigurationError("log_level", level, "unknown log level")
        settings.log_level = level
        return settings

    @classmethod
    def load(cls, path: Union[str, Path] = CONFIG_FILE) -> "Settings":
        """Reads the configuration file. A missing file gives the default settings.

        Args:
            path: The configuration file.

        Returns:
            :class:`Settings`: The settings.

        Raises:
            ConfigurationError: If the file can not be parsed or a value is malformed.
        """
        config = ConfigParser()
        try:
            config.read(path, encoding="utf-8")
        except ConfigParserError as exc:
            raise ConfigurationError("file", str(path), exc.message) from exc
        return cls.from_config(config)

    def default_budget(self, degree: int, vertices: int) -> Optional[int]:
        """The node budget for a census that was started without an explicit budget.

        Args:
            degree: Degree of the face sequence.
            vertices: The vertex count.

        Returns:
            Optional[int]: :attr:`high_degree_budget` for expensive censuses, :obj:`None`
            (unlimited) otherwise.
        """
        if degree >= HIGH_DEGREE or vertices > UNBUDGETED_VERTICES:
            return self.high_degree_budget
        return None


def _positive_int(section: SectionProxy, key: str, default: int) -> int:
    try:
        value = section.getint(key, default)
    except ValueError as exc:
        raise ConfigurationError(key, section.get(key), "not an integer") from exc
    if value < 1:
        raise ConfigurationError(key, value, "must be at least 1")
    return value

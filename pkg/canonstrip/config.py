"""Provides the code to load canonstrip's configuration file ``canonstrip.ini``."""
import configparser
import os
from fractions import Fraction
from threading import Lock
from typing import Any, Callable, Dict, List, Optional

from .exceptions import InvalidInput
from .util.rational import parse_rational, parse_rational_list

USER_CONFIG_DIRS = (
    ("APPDATA", None),  # Windows
    ("XDG_CONFIG_HOME", None),
    ("HOME", ".config"),
)


class _NotSet:
    def __bool__(self):
        return False

    def __str__(self):
        return "NotSet"


def boolean(item) -> bool:
    if isinstance(item, bool):
        return item
    return item.lower() in {"1", "yes", "true", "on"}


def positive_int(item) -> int:
    value = int(item)
    if value <= 0:
        raise ValueError
    return value


def positive_rational(item) -> Fraction:
    value = parse_rational(item)
    if value <= 0:
        raise ValueError
    return value


def rational_list(item) -> List[Fraction]:
    if isinstance(item, (list, tuple)):
        return [parse_rational(value) for value in item]
    return parse_rational_list(item)


def config_locations() -> List[str]:
    """Return the ``canonstrip.ini`` files to read, lowest priority first.

    The copy shipped with the package comes first, then the one in the user's
    configuration directory, then the one in the working directory.

    """
    locations = [os.path.join(os.path.dirname(__file__), "canonstrip.ini")]
    for variable, subdirectory in USER_CONFIG_DIRS:
        if variable in os.environ:
            directory = os.environ[variable]
            if subdirectory:
                directory = os.path.join(directory, subdirectory)
            locations.append(os.path.join(directory, "canonstrip.ini"))
            break
    locations.append("canonstrip.ini")
    return locations


class Config:
    """A class containing the configuration for a canonstrip site.

    Every option is looked up in the keyword ``settings`` first, then in the
    environment variable ``canonstrip_<option>``, then in the ``canonstrip.ini``
    section ``site_name``.

    """

    CONFIG = None
    CONFIG_NOT_SET = _NotSet()  # Represents a config value that is not set.
    LOCK = Lock()
    INTERPOLATION_LEVEL = {
        "basic": configparser.BasicInterpolation,
        "extended": configparser.ExtendedInterpolation,
    }
    OPTIONS: Dict[str, Callable[[Any], Any]] = {
        "approx_tolerance": positive_rational,
        "approx_iteration_cap": positive_int,
        "facet_subset_cap": positive_int,
        "max_workers": positive_int,
        "batch_size": positive_int,
        "svg_panel_width": float,
        "svg_panel_height": float,
        "lemma_cases": positive_int,
        "lemma_max_degree": positive_int,
        "lemma_s_values": rational_list,
        "lemma_seed": int,
    }

    @classmethod
    def _load_config(cls, config_interpolation: Optional[str] = None):
        """Read every ``canonstrip.ini`` returned by :func:`.config_locations`."""
        interpolation = None
        if config_interpolation is not None:
            interpolation = cls.INTERPOLATION_LEVEL[config_interpolation]()
        config = configparser.ConfigParser(interpolation=interpolation)
        config.read(config_locations())
        cls.CONFIG = config

    def __init__(
        self,
        site_name: str,
        config_interpolation: Optional[str] = None,
        **settings,
    ):
        """Initialize a :class:`.Config` instance."""
        with Config.LOCK:
            if Config.CONFIG is None:
                self._load_config(config_interpolation)

        self._settings = settings
        self.custom = dict(Config.CONFIG.items(site_name), **settings)

        self.approx_tolerance = self.approx_iteration_cap = None
        self.facet_subset_cap = self.max_workers = self.batch_size = None
        self.svg_panel_width = self.svg_panel_height = None
        self.lemma_cases = self.lemma_max_degree = self.lemma_seed = None
        self.lemma_s_values = None

        timestamp = self._lookup("timestamp")
        self.timestamp = boolean(True if timestamp is None else timestamp)
        self.catalog_path = self._lookup("catalog_path") or self.CONFIG_NOT_SET
        for option, conversion in self.OPTIONS.items():
            raw = self._lookup(option)
            try:
                setattr(self, option, conversion(raw))
            except (ValueError, TypeError, ArithmeticError, InvalidInput) as exc:
                expected = conversion.__name__.replace("_", " ")
                raise ValueError(
                    f"An incorrect config type was given for option {option}. The"
                    f" expected type is {expected}, but the given value is {raw}."
                ) from exc

    def _lookup(self, key: str):
        """Remove ``key`` from :attr:`.custom` and return its effective value."""
        ini_value = self.custom.pop(key, None)
        if key in self._settings:
            return self._settings[key]
        return os.getenv(f"canonstrip_{key}") or ini_value

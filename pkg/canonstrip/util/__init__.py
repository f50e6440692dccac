"""Package imports for utilities."""

from .random import SplitMix64  # noqa: F401
from .rational import (  # noqa: F401
    format_rational,
    parse_range,
    parse_rational,
    parse_rational_list,
)

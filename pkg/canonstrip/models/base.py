"""Provide the CanonStripBase superclass."""
from typing import TYPE_CHECKING

if TYPE_CHECKING:  # pragma: no cover
    import canonstrip


class CanonStripBase:
    """Superclass for all models in canonstrip."""

    def __init__(self, workbench: "canonstrip.Workbench"):
        """Initialize a :class:`.CanonStripBase` instance.

        :param workbench: The :class:`.Workbench` whose config and executor are used.

        """
        self._workbench = workbench

"""Provide the ScanGenerator and CatalogGenerator classes."""
import asyncio
from logging import getLogger
from typing import TYPE_CHECKING, Any, AsyncIterator, List, Optional

from ..ehrhart import ConjectureReport, LatticePolytope
from ..hilbert import ScanRow, ScanSummary, scan_points, scan_row
from .base import CanonStripBase

if TYPE_CHECKING:  # pragma: no cover
    import canonstrip

logger = getLogger("canonstrip")


class BatchGenerator(CanonStripBase, AsyncIterator):
    """Serve results computed ``batch_size`` at a time.

    .. warning::

        This class should not be directly utilized. Use
        :meth:`.HilbertHelper.scan` or :meth:`.EhrhartHelper.catalog` instead.

    """

    def __init__(self, workbench: "canonstrip.Workbench", limit: Optional[int] = None):
        """Initialize a :class:`.BatchGenerator` instance.

        :param workbench: An instance of :class:`.Workbench`.
        :param limit: The largest number of results to yield, or ``None`` for all of
            them (default: ``None``).

        """
        super().__init__(workbench)
        self._exhausted = False
        self._listing: Optional[List[Any]] = None
        self._list_index = None
        self._position = 0
        self.limit = limit
        self.yielded = 0

    def __aiter__(self) -> AsyncIterator[Any]:
        """Permit :class:`.BatchGenerator` to operate as an async iterator."""
        return self

    async def __anext__(self) -> Any:
        """Permit :class:`.BatchGenerator` to operate as a async generator."""
        if self.limit is not None and self.yielded >= self.limit:
            raise StopAsyncIteration()

        if self._listing is None or self._list_index >= len(self._listing):
            await self._next_batch()

        self._list_index += 1
        self.yielded += 1
        item = self._listing[self._list_index - 1]
        self._served(item)
        return item

    async def _items(self) -> List[Any]:
        raise NotImplementedError

    async def _compute(self, batch: List[Any]) -> List[Any]:
        raise NotImplementedError

    def _served(self, item: Any):
        pass

    async def _next_batch(self):
        if self._exhausted:
            raise StopAsyncIteration()

        items = await self._items()
        end = self._position + self._workbench.config.batch_size
        batch = items[self._position : end]
        self._position += len(batch)
        if self._position >= len(items):
            self._exhausted = True
        if not batch:
            raise StopAsyncIteration()

        self._listing = await self._compute(batch)
        self._list_index = 0
        logger.debug(f"Computed {self._position} of {len(items)} results")


class ScanGenerator(BatchGenerator):
    """Instances of this class generate :class:`.ScanRow` instances in range order.

    Each batch of Chern data is classified concurrently on the workbench executor;
    :attr:`.summary` tallies the rows yielded so far.

    """

    def __init__(
        self,
        workbench: "canonstrip.Workbench",
        family: str,
        limit: Optional[int] = None,
        **ranges: Optional[str],
    ):
        """Initialize a :class:`.ScanGenerator` instance.

        :param workbench: An instance of :class:`.Workbench`.
        :param family: One of ``dp``, ``fano3``, ``surface`` and ``threefold``.
        :param limit: The largest number of rows to yield (default: ``None``).
        :param ranges: Range texts keyed by ``c1sq``, ``c2``, ``c1cube`` or ``c1c2``.

        :raises: :class:`.InvalidRange` immediately for an unusable range.

        """
        super().__init__(workbench, limit)
        self.family = family
        self.points = scan_points(family, **ranges)
        self.summary = ScanSummary()

    async def _items(self) -> List[Any]:
        return self.points

    async def _compute(self, batch: List[Any]) -> List[ScanRow]:
        options = self._workbench.classify_options
        return await self._workbench.run_many(
            lambda datum: scan_row(datum, False, **options), batch
        )

    def _served(self, item: ScanRow):
        self.summary.add(item)


class CatalogGenerator(BatchGenerator):
    """Instances of this class generate :class:`.ConjectureReport` in catalog order."""

    def __init__(
        self,
        workbench: "canonstrip.Workbench",
        name: str,
        limit: Optional[int] = None,
    ):
        """Initialize a :class:`.CatalogGenerator` instance.

        :param workbench: An instance of :class:`.Workbench`.
        :param name: A built-in catalog name or a catalog file.
        :param limit: The largest number of reports to yield (default: ``None``).

        """
        super().__init__(workbench, limit)
        self.name = name
        self.polytopes: Optional[List[LatticePolytope]] = None

    async def _items(self) -> List[Any]:
        if self.polytopes is None:
            self.polytopes = await self._workbench.ehrhart.load_catalog(self.name)
        return self.polytopes

    async def _compute(self, batch: List[Any]) -> List[ConjectureReport]:
        verdict = self._workbench.ehrhart.verdict
        return list(await asyncio.gather(*(verdict(polytope) for polytope in batch)))

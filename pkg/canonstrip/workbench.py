"""Provide the Workbench class."""
import asyncio
import configparser
import os
from concurrent.futures import Executor, ThreadPoolExecutor
from functools import partial
from logging import getLogger
from typing import Any, Callable, Iterable, List, Optional, Union

from . import models
from .config import Config
from .ratpoly import RationalPolynomial
from .rootloc import ApproximateRoot, StripVerdict, approx_roots, classify_strip

logger = getLogger("canonstrip")


class Workbench:
    """The Workbench class is the gateway to canonstrip's computations.

    Every exact computation is a plain function; the workbench runs them on an
    executor sized by the ``max_workers`` option and applies the configured tolerances.
    The canonical way to obtain an instance of this class is via:

    .. code-block:: python

        import canonstrip

        async with canonstrip.Workbench() as workbench:
            result = await workbench.hilbert.grassmannian(2, 4)
            print(result.verdict.ncs)

    """

    async def __aenter__(self):
        """Handle the context manager open."""
        return self

    async def __aexit__(self, *_args):
        """Handle the context manager close."""
        await self.close()

    async def close(self):
        """Shut the executor down once queued computations finish."""
        if self._owns_executor:
            self._executor.shutdown(wait=True)

    def __init__(
        self,
        site_name: Optional[str] = None,
        config_interpolation: Optional[str] = None,
        *,
        executor: Optional[Executor] = None,
        **config_settings: Union[str, int, bool],
    ):
        """Initialize a :class:`.Workbench` instance.

        :param site_name: The name of a section in your ``canonstrip.ini`` file from
            which to load settings. If ``site_name`` is ``None``, then the site name
            will be looked for in the environment variable ``canonstrip_site``. If it is
            not found there, the ``DEFAULT`` site will be used.
        :param config_interpolation: Config parser interpolation type, ``"basic"`` or
            ``"extended"`` (default: ``None``).
        :param executor: An executor to run computations on. When omitted, a
            :class:`~concurrent.futures.ThreadPoolExecutor` with ``max_workers``
            threads is created and shut down by :meth:`.close`.

        Additional keyword arguments override options of the :class:`.Config`, for
        example:

        .. code-block:: python

            workbench = Workbench(approx_tolerance="1/1000000", batch_size=8)

        """
        try:
            config_section = site_name or os.getenv("canonstrip_site") or "DEFAULT"
            self.config = Config(
                config_section, config_interpolation, **config_settings
            )
        except configparser.NoSectionError as exc:
            help_message = (
                "You provided the name of a canonstrip.ini section which does not"
                " exist.\n\nFor help on configuring canonstrip, see"
                " docs/getting_started/configuration.rst"
            )
            if site_name is not None:
                exc.message += f"\n{help_message}"
            raise

        self._owns_executor = executor is None
        self._executor = executor or ThreadPoolExecutor(
            max_workers=self.config.max_workers, thread_name_prefix="canonstrip"
        )

        self.hilbert = models.HilbertHelper(self)
        """An instance of :class:`.HilbertHelper`.

        Provides the Hilbert polynomial constructors and the Chern number scans:

        .. code-block:: python

            result = await workbench.hilbert.surface(9, 3)
            async for row in workbench.hilbert.scan("dp"):
                print(row.datum, row.verdict.cl)

        """

        self.embedded = models.EmbeddedHelper(self)
        """An instance of :class:`.EmbeddedHelper`.

        Provides restricted Hilbert polynomials of anticanonical sections and the
        randomized section lemma suite.

        """

        self.ehrhart = models.EhrhartHelper(self)
        """An instance of :class:`.EhrhartHelper`.

        Provides polytope loading and Ehrhart polynomial verdicts:

        .. code-block:: python

            async for report in workbench.ehrhart.catalog("smooth-dim3"):
                print(report.name, report.cl)

        """

    @property
    def classify_options(self):
        """Return the configured tolerance and iteration cap of the display roots."""
        return {
            "tolerance": self.config.approx_tolerance,
            "iteration_cap": self.config.approx_iteration_cap,
        }

    async def run(self, function: Callable, *args: Any, **kwargs: Any) -> Any:
        """Run ``function(*args, **kwargs)`` on the workbench executor."""
        loop = asyncio.get_running_loop()
        return await loop.run_in_executor(
            self._executor, partial(function, *args, **kwargs)
        )

    async def run_many(self, function: Callable, items: Iterable[Any]) -> List[Any]:
        """Return ``[function(item) for item in items]`` computed concurrently.

        Results keep the order of ``items``.

        """
        return list(
            await asyncio.gather(*(self.run(function, item) for item in items))
        )

    async def strip(
        self, polynomial: RationalPolynomial, dim: int, approximate: bool = True
    ) -> StripVerdict:
        """Return the canonical strip verdicts of ``polynomial`` in dimension ``dim``.

        :param polynomial: A nonzero :class:`.RationalPolynomial`.
        :param dim: The dimension that fixes the narrowed strip.
        :param approximate: Whether to attach display roots (default: ``True``).

        """
        logger.debug(f"Classifying {polynomial} in dimension {dim}")
        return await self.run(
            classify_strip,
            polynomial,
            dim,
            approximate=approximate,
            **self.classify_options,
        )

    async def approximate(
        self, polynomial: RationalPolynomial
    ) -> List[ApproximateRoot]:
        """Return display approximations of the roots of ``polynomial``."""
        return await self.run(approx_roots, polynomial, **self.classify_options)

"""Provide the helper classes."""
from logging import getLogger
from typing import TYPE_CHECKING, Iterable, List, Optional, Sequence, Tuple

import aiofiles

from ..ehrhart import (
    ConjectureReport,
    FacetRep,
    LatticePolytope,
    catalog_path,
    conjecture_verdict,
    count_slab,
    dilations,
    ehrhart_polynomial,
    facet_representation,
    parse_catalog,
    parse_polytope,
    slab_values,
)
from ..embedded import (
    CanonicalLineCheck,
    LemmaCaseResult,
    LemmaSuiteSummary,
    case_seeds,
    finish_suite,
    lemma_case,
    probe_case,
    restricted_hilbert,
    validate_suite_parameters,
    verify_canonical_line,
)
from ..hilbert import Classification, Construction, construct
from ..ratpoly import Number, RationalPolynomial
from .base import CanonStripBase
from .generator import CatalogGenerator, ScanGenerator

if TYPE_CHECKING:  # pragma: no cover
    from ..embedded import EmbeddedSection

logger = getLogger("canonstrip")


class HilbertHelper(CanonStripBase):
    """Provide the Hilbert polynomial constructors with their exact verdicts.

    Each constructor returns a :class:`.Classification`, for example:

    .. code-block:: python

        result = await workbench.hilbert.projective(3)
        print(result.construction.polynomial)
        print(result.verdict.ncs)  # True

    """

    async def classify(self, construction: Construction) -> Classification:
        """Return ``construction`` together with its :class:`.StripVerdict`."""
        verdict = await self._workbench.strip(
            construction.polynomial, construction.dim
        )
        return Classification(construction, verdict)

    async def construct(self, spec: str) -> Classification:
        """Build and classify a constructor spec such as ``grassmannian:2,4``."""
        return await self.classify(construct(spec))

    async def curve(self, genus: int) -> Classification:
        """Classify the curve of genus ``genus``.

        :raises: :class:`.GenusOneCurve` for ``genus == 1``.

        """
        return await self.construct(f"curve:{genus}")

    async def grassmannian(self, k: int, n: int) -> Classification:
        """Classify the Grassmannian ``G(k, N)``.

        :raises: :class:`.InvalidGrassmannian` unless ``N >= 2k >= 2``.

        """
        return await self.construct(f"grassmannian:{k},{n}")

    async def k3(self, h2: Number) -> Classification:
        """Classify the K3 surface polarized with ``h**2 = h2``."""
        return await self.construct(f"k3:{h2}")

    async def projective(self, n: int) -> Classification:
        """Classify the projective space ``P^n``."""
        return await self.construct(f"projective:{n}")

    async def surface(self, c1sq: Number, c2: Number) -> Classification:
        """Classify the surface with Chern numbers ``c1sq`` and ``c2``."""
        return await self.construct(f"surface:{c1sq},{c2}")

    async def threefold(self, c1cube: Number, c1c2: Number) -> Classification:
        """Classify the threefold with Chern numbers ``c1cube`` and ``c1c2``."""
        return await self.construct(f"threefold:{c1cube},{c1c2}")

    def scan(self, family: str, **ranges: Optional[str]) -> ScanGenerator:
        """Return a :class:`.ScanGenerator` over a Chern number family.

        :param family: One of ``dp``, ``fano3``, ``surface`` and ``threefold``.
        :param ranges: Range texts such as ``c1sq="1..10"`` or ``c2="-12..12:2"``.

        :raises: :class:`.InvalidRange` for an unknown family or an empty range.

        .. code-block:: python

            async for row in workbench.hilbert.scan("fano3", c1cube="2..64"):
                print(row.datum.c1cube, row.verdict.cl)

        """
        return ScanGenerator(self._workbench, family, **ranges)


class EmbeddedHelper(CanonStripBase):
    """Provide restricted Hilbert polynomials and the section lemma suite."""

    async def section(
        self, ambient: RationalPolynomial, multiple: Number
    ) -> Tuple["EmbeddedSection", CanonicalLineCheck]:
        """Return the section of ``-sK`` and its exact canonical line check.

        .. code-block:: python

            projective = await workbench.hilbert.projective(3)
            section, check = await workbench.embedded.section(
                projective.construction.polynomial, 2
            )
            print(section.line, check.holds)  # 1/2 True

        """
        section = restricted_hilbert(ambient, multiple)
        check = await self._workbench.run(verify_canonical_line, section)
        return section, check

    async def lemma_suite(
        self,
        cases: Optional[int] = None,
        max_degree: Optional[int] = None,
        s_values: Optional[Iterable[Number]] = None,
        seed: Optional[int] = None,
        probes: int = 0,
    ) -> LemmaSuiteSummary:
        """Run the section lemma suite with cases computed concurrently.

        :param cases: The number of generated polynomials (default: ``lemma_cases``).
        :param max_degree: The largest generated degree (default:
            ``lemma_max_degree``).
        :param s_values: The multiples checked per case (default: ``lemma_s_values``).
        :param seed: The master seed (default: ``lemma_seed``).
        :param probes: The number of off-strip probes (default: ``0``).

        Cases are dispatched in batches of ``batch_size``. The summary equals the one
        :func:`.lemma_property_suite` returns for the same parameters.

        :raises: :class:`.LemmaSuiteFailure` carrying every failed case.

        """
        config = self._workbench.config
        cases = config.lemma_cases if cases is None else cases
        max_degree = config.lemma_max_degree if max_degree is None else max_degree
        seed = config.lemma_seed if seed is None else seed
        s_values = validate_suite_parameters(
            cases,
            max_degree,
            config.lemma_s_values if s_values is None else s_values,
            probes,
        )
        seeds = case_seeds(seed, cases + probes)
        jobs = [(case_seed, index >= cases) for index, case_seed in enumerate(seeds)]
        summary = LemmaSuiteSummary()

        def run_job(job: Tuple[int, bool]) -> LemmaCaseResult:
            case_seed, probe = job
            check = probe_case if probe else lemma_case
            return check(case_seed, max_degree, s_values)

        for start in range(0, len(jobs), config.batch_size):
            batch = jobs[start : start + config.batch_size]
            results = await self._workbench.run_many(run_job, batch)
            for (_, probe), result in zip(batch, results):
                if probe:
                    summary.merge_probe(result)
                else:
                    summary.merge(result)
            logger.debug(f"Section lemma suite: {start + len(batch)} cases checked")
        finish_suite(summary)
        return summary


class EhrhartHelper(CanonStripBase):
    """Provide polytope loading and Ehrhart polynomial verdicts."""

    async def _read(self, path: str) -> str:
        async with aiofiles.open(path, encoding="utf-8") as stream:
            return await stream.read()

    async def load(self, path: str) -> LatticePolytope:
        """Load a polytope file ``{"dim": d, "vertices": [...]}``.

        :raises: :class:`.MalformedInput` with file and line context.

        """
        return parse_polytope(await self._read(path), path)

    async def load_catalog(self, name: str) -> List[LatticePolytope]:
        """Load a built-in catalog or a ``<catalog_path>/<name>.json`` file."""
        search_path = self._workbench.config.catalog_path or None
        path = catalog_path(name, search_path)
        polytopes = parse_catalog(await self._read(path), path)
        logger.debug(f"Loaded {len(polytopes)} polytopes from {path}")
        return polytopes

    def catalog(self, name: str) -> CatalogGenerator:
        """Return a :class:`.CatalogGenerator` over the catalog called ``name``.

        Reports are produced in catalog order.

        .. code-block:: python

            async for report in workbench.ehrhart.catalog("smooth-dim2"):
                print(report.name, report.result.polynomial)

        """
        return CatalogGenerator(self._workbench, name)

    async def facets(self, polytope: LatticePolytope) -> FacetRep:
        """Return the facet representation using the ``facet_subset_cap`` option."""
        return await self._workbench.run(
            facet_representation, polytope, self._workbench.config.facet_subset_cap
        )

    async def counts(
        self, polytope: LatticePolytope, rep: FacetRep, factors: Sequence[int]
    ) -> List[Tuple[int, int]]:
        """Return ``(t, #(tP cap Z^d))`` for each ``t`` in ``factors``.

        Every slab of every dilation is counted as a separate executor job.

        """
        slabs = [(t, first) for t in factors for first in slab_values(polytope, t)]
        values = await self._workbench.run_many(
            lambda slab: count_slab(polytope, rep, slab[0], slab[1]), slabs
        )
        totals = {t: 0 for t in factors}
        for (t, _), value in zip(slabs, values):
            totals[t] += value
        return sorted(totals.items())

    async def verdict(self, polytope: LatticePolytope) -> ConjectureReport:
        """Return the Ehrhart polynomial, flags and conjecture label of ``polytope``.

        .. code-block:: python

            segment = LatticePolytope(1, [[-1], [1]])
            report = await workbench.ehrhart.verdict(segment)
            print(report.result.polynomial)  # 2*z + 1

        """
        rep = await self.facets(polytope)
        counts = dict(await self.counts(polytope, rep, dilations(polytope)))
        result = await self._workbench.run(
            ehrhart_polynomial,
            polytope,
            rep,
            counts,
            approximate=True,
            **self._workbench.classify_options,
        )
        return await self._workbench.run(conjecture_verdict, polytope, rep, result)

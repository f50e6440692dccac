from fractions import Fraction

import pytest

from canonstrip.ehrhart import LatticePolytope
from canonstrip.embedded import lemma_property_suite
from canonstrip.exceptions import (
    GenusOneCurve,
    InvalidGrassmannian,
    MalformedInput,
    SubsetLimitExceeded,
)
from canonstrip.hilbert import GrassmannianSpec, hilbert_grassmannian
from canonstrip.ratpoly import RationalPolynomial

from .. import UnitTest

SEGMENT = LatticePolytope(1, [[-1], [1]])


class TestHilbertHelper(UnitTest):
    async def test_projective(self):
        result = await self.workbench.hilbert.projective(3)
        assert result.construction.dim == 3
        assert result.construction.polynomial(1) == 35
        assert result.verdict.cs and result.verdict.ncs
        assert not result.verdict.cl

    async def test_grassmannian(self):
        result = await self.workbench.hilbert.grassmannian(2, 4)
        assert result.construction.polynomial == hilbert_grassmannian(
            GrassmannianSpec(2, 4)
        )
        assert result.construction.dim == 4
        assert result.verdict.ncs
        assert result.verdict.report(Fraction(-1, 2)).on_count == 2

    async def test_grassmannian__invalid(self):
        with pytest.raises(InvalidGrassmannian):
            await self.workbench.hilbert.grassmannian(3, 4)

    async def test_curve(self):
        result = await self.workbench.hilbert.curve(0)
        assert result.construction.polynomial == RationalPolynomial([1, 2])
        assert result.verdict.cl
        with pytest.raises(GenusOneCurve):
            await self.workbench.hilbert.curve(1)

    async def test_surface(self):
        result = await self.workbench.hilbert.surface(9, 3)
        assert result.construction.polynomial == RationalPolynomial.from_roots(
            [Fraction(-1, 3), Fraction(-2, 3)], Fraction(9, 2)
        )
        assert result.verdict.ncs
        assert not result.verdict.cl

    async def test_threefold(self):
        result = await self.workbench.hilbert.threefold(64, 24)
        assert result.verdict.cs
        assert result.verdict.approx_roots

    async def test_k3(self):
        result = await self.workbench.hilbert.k3(2)
        assert result.construction.polynomial(0) == 2

    async def test_construct__unknown(self):
        with pytest.raises(MalformedInput):
            await self.workbench.hilbert.construct("torus:1")


class TestEmbeddedHelper(UnitTest):
    async def test_section(self):
        projective = await self.workbench.hilbert.projective(3)
        section, check = await self.workbench.embedded.section(
            projective.construction.polynomial, 2
        )
        assert section.line == Fraction(1, 2)
        assert check.holds
        assert check.report.on_count == section.restricted.degree

    async def test_lemma_suite__matches_plain_function(self):
        summary = await self.workbench.embedded.lemma_suite(
            cases=8, max_degree=6, s_values=[1, 2], seed=11, probes=2
        )
        assert summary == lemma_property_suite(8, 6, [1, 2], 11, probes=2)
        assert summary.cases == 8
        assert summary.checks == 16
        assert summary.probes == 2

    async def test_lemma_suite__config_defaults(self):
        self.workbench.config.lemma_cases = 4
        self.workbench.config.lemma_max_degree = 4
        summary = await self.workbench.embedded.lemma_suite()
        assert summary.cases == 4
        assert summary.checks == 4 * len(self.workbench.config.lemma_s_values)


class TestEhrhartHelper(UnitTest):
    async def test_load(self, write_json):
        path = write_json("segment.json", SEGMENT.to_dict())
        assert await self.workbench.ehrhart.load(path) == SEGMENT

    async def test_load__malformed(self, write_json):
        path = write_json("bad.json", '{"dim": 1,\n "vertices": [[1], [1]]}')
        with pytest.raises(MalformedInput) as excinfo:
            await self.workbench.ehrhart.load(path)
        assert excinfo.value.source == path

    async def test_load_catalog__search_path(self, write_json, tmp_path):
        write_json("segments.json", [SEGMENT.to_dict()])
        self.workbench.config.catalog_path = str(tmp_path)
        assert await self.workbench.ehrhart.load_catalog("segments") == [SEGMENT]

    async def test_counts(self):
        rep = await self.workbench.ehrhart.facets(SEGMENT)
        counts = await self.workbench.ehrhart.counts(SEGMENT, rep, [0, 1, 2, 3])
        assert counts == [(0, 1), (1, 3), (2, 5), (3, 7)]

    async def test_facets__subset_cap(self):
        self.workbench.config.facet_subset_cap = 2
        square = LatticePolytope(2, [(1, 1), (1, -1), (-1, 1), (-1, -1)])
        with pytest.raises(SubsetLimitExceeded):
            await self.workbench.ehrhart.facets(square)

    async def test_verdict(self):
        report = await self.workbench.ehrhart.verdict(SEGMENT)
        assert report.result.polynomial == RationalPolynomial([1, 2])
        assert report.result.counts[2] == (2, 5)
        assert report.cl
        assert report.conjecture == "smooth-fano"

"""Test canonstrip.models.generator."""
import mock
import pytest

from canonstrip.exceptions import InvalidRange
from canonstrip.hilbert import Surface, scan
from canonstrip.models import CatalogGenerator, ScanGenerator

from .. import UnitTest


class TestScanGenerator(UnitTest):
    async def test_rows_in_range_order(self):
        rows = [row async for row in self.workbench.hilbert.scan("dp")]
        assert [row.datum for row in rows] == [
            Surface(c1sq, 12 - c1sq) for c1sq in range(1, 10)
        ]

    async def test_summary(self):
        generator = self.workbench.hilbert.scan("dp")
        async for _ in generator:
            pass
        assert generator.summary.to_dict() == {
            "total": 9,
            "cs": 9,
            "ncs": 9,
            "cl": 8,
        }

    async def test_matches_plain_scan(self):
        generator = self.workbench.hilbert.scan("surface", c1sq="1..3", c2="-4..4")
        rows = [row async for row in generator]
        plain = scan("surface", c1sq="1..3", c2="-4..4")
        assert [(row.datum, row.ratio) for row in rows] == [
            (row.datum, row.ratio) for row in plain
        ]
        assert [row.verdict.cl for row in rows] == [row.verdict.cl for row in plain]

    async def test_batches(self):
        with mock.patch.object(
            self.workbench, "run_many", wraps=self.workbench.run_many
        ) as run_many:
            rows = [row async for row in self.workbench.hilbert.scan("dp")]
        assert len(rows) == 9
        assert run_many.await_count == 3

    async def test_limit(self):
        generator = ScanGenerator(self.workbench, "fano3", limit=4)
        rows = [row async for row in generator]
        assert [int(row.datum.c1cube) for row in rows] == [2, 3, 4, 5]
        assert generator.summary.total == 4
        assert generator.yielded == 4

    def test_invalid_range(self):
        with pytest.raises(InvalidRange):
            ScanGenerator(self.workbench, "surface", c1sq="1..3")
        with pytest.raises(InvalidRange):
            ScanGenerator(self.workbench, "dp", c1sq="3..1")

    async def test_no_approximate_roots(self):
        rows = [row async for row in self.workbench.hilbert.scan("dp")]
        assert all(row.verdict.approx_roots == [] for row in rows)


class TestCatalogGenerator(UnitTest):
    async def test_catalog_order(self):
        generator = self.workbench.ehrhart.catalog("smooth-dim2")
        reports = [report async for report in generator]
        names = [report.name for report in reports]
        assert names == ["P2", "P1xP1", "F1", "dP7", "dP6"]
        assert all(report.cl and report.predicted for report in reports)

    async def test_limit(self):
        generator = CatalogGenerator(self.workbench, "smooth-dim2", limit=2)
        names = [report.name async for report in generator]
        assert names == ["P2", "P1xP1"]
        assert len(generator.polytopes) == 5

    async def test_missing_catalog(self):
        with pytest.raises(OSError):
            async for _ in self.workbench.ehrhart.catalog("no-such-catalog"):
                pass

"""Build, serialize and parse the JSON documents the command line prints."""
import csv
import io
import json
import os
from dataclasses import dataclass, field
from datetime import datetime, timezone
from logging import getLogger
from typing import Any, Dict, List, Optional

import aiofiles
from asyncio_extras import async_contextmanager

from .const import __version__
from .exceptions import InvalidInput, MalformedInput
from .hilbert import ChernData, ScanRow, ScanSummary, closed_form_roots
from .ratpoly import RationalPolynomial
from .rootloc import ApproximateRoot, RootReport, StripVerdict
from .util.rational import format_rational, parse_rational

logger = getLogger("canonstrip")

SCAN_FORMATS = (".csv", ".json")


def _root_to_dict(root: ApproximateRoot) -> Dict[str, Any]:
    return {
        "re": root.value.real,
        "im": root.value.imag,
        "residual": root.residual,
        "multiplicity": root.multiplicity,
    }


def _root_from_dict(data: Dict[str, Any]) -> ApproximateRoot:
    return ApproximateRoot(
        complex(data["re"], data["im"]), data["residual"], data["multiplicity"]
    )


def _report_from_dict(data: Dict[str, Any]) -> RootReport:
    return RootReport(
        parse_rational(data["line"]), data["left"], data["on"], data["right"]
    )


@dataclass
class VerdictDocument:
    """The machine readable result of one command.

    ``flags`` always come from the exact engine; ``approx_roots`` carry their scaled
    residuals and are for display only.

    """

    command: str
    input: Dict[str, Any]
    polynomial: RationalPolynomial
    flags: Dict[str, bool]
    reports: List[RootReport]
    approx_roots: List[ApproximateRoot] = field(default_factory=list)
    dim: Optional[int] = None
    details: Dict[str, Any] = field(default_factory=dict)
    seed: Optional[int] = None
    timestamp: Optional[str] = None
    version: str = __version__

    @classmethod
    def from_verdict(
        cls,
        command: str,
        input: Dict[str, Any],
        verdict: StripVerdict,
        **kwargs: Any,
    ) -> "VerdictDocument":
        """Return the document of a :class:`.StripVerdict`."""
        return cls(
            command,
            input,
            verdict.polynomial,
            {"cs": verdict.cs, "ncs": verdict.ncs, "cl": verdict.cl},
            [verdict.reports[line] for line in sorted(verdict.reports)],
            list(verdict.approx_roots),
            dim=verdict.dim,
            **kwargs,
        )

    @classmethod
    def from_dict(cls, data: Dict[str, Any], source: str = "<document>"):
        """Parse a document written by :meth:`.to_dict`.

        :raises: :class:`.MalformedInput` when a field is missing or malformed.

        """
        try:
            return cls(
                data["command"],
                data["input"],
                RationalPolynomial.from_dict(data["polynomial"], source),
                dict(data["verdict"]),
                [_report_from_dict(report) for report in data["reports"]],
                [_root_from_dict(root) for root in data["approx_roots"]],
                dim=data.get("dim"),
                details=data.get("details", {}),
                seed=data.get("seed"),
                timestamp=data.get("timestamp"),
                version=data["version"],
            )
        except (KeyError, TypeError) as exc:
            raise MalformedInput(f"document field {exc} is missing or invalid.", source)

    def to_dict(self) -> Dict[str, Any]:
        """Return the JSON mapping in a fixed key order."""
        data = {
            "command": self.command,
            "input": self.input,
            "polynomial": self.polynomial.to_dict(),
            "degree": self.polynomial.degree,
            "dim": self.dim,
            "verdict": self.flags,
            "reports": [report.to_dict() for report in self.reports],
            "approx_roots": [_root_to_dict(root) for root in self.approx_roots],
            "details": self.details,
            "version": self.version,
        }
        if self.seed is not None:
            data["seed"] = self.seed
        if self.timestamp is not None:
            data["timestamp"] = self.timestamp
        return data

    def to_json(self) -> str:
        """Return the document as indented JSON."""
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        """Return a human readable table of the document."""
        lines = [f"{self.command}: {self.polynomial}"]
        if self.dim is not None:
            lines.append(f"  dimension {self.dim}, degree {self.polynomial.degree}")
        lines.append(
            "  "
            + "  ".join(
                f"{flag}={'yes' if value else 'no'}"
                for flag, value in self.flags.items()
            )
        )
        for key, value in self.details.items():
            lines.append(f"  {key}: {value}")
        lines.append(f"  {'line':>8} {'left':>5} {'on':>5} {'right':>5}")
        for report in self.reports:
            lines.append(
                f"  {str(report.line):>8} {report.left_count:>5} {report.on_count:>5}"
                f" {report.right_count:>5}"
            )
        for root in self.approx_roots:
            lines.append(
                f"  root {root.value.real:+.6f} {root.value.imag:+.6f}i"
                f"  residual {root.residual:.1e}"
            )
        return "\n".join(lines)


def polynomial_from_document(data: Dict[str, Any], source: str = "<document>"):
    """Return the exact polynomial stored in a parsed JSON document."""
    if not isinstance(data, dict) or "polynomial" not in data:
        raise MalformedInput('expected a document with a "polynomial" field.', source)
    return RationalPolynomial.from_dict(data["polynomial"], source)


def timestamp(enabled: bool) -> Optional[str]:
    """Return the current UTC time in ISO format, or ``None`` when disabled."""
    if not enabled:
        return None
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def root_summary(datum: ChernData) -> str:
    """Return the closed form roots of ``datum`` as text."""
    roots = closed_form_roots(datum)
    parts = [format_rational(root) for root in roots.isolated]
    for real, radicand in roots.pairs:
        parts.append(f"{format_rational(real)} +- sqrt({format_rational(radicand)})/2")
    return "; ".join(parts)


def scan_record(family: str, row: ScanRow) -> Dict[str, Any]:
    """Return the results file record of one scan row."""
    return {
        "family": family,
        **row.datum.to_dict(),
        "cs": row.verdict.cs,
        "ncs": row.verdict.ncs,
        "cl": row.verdict.cl,
        "ratio": format_rational(row.ratio),
        "roots": root_summary(row.datum),
    }


class ScanResults:
    """Collect scan records and render them as CSV or JSON."""

    def __init__(self, path: str, family: str):
        """Initialize a :class:`.ScanResults` instance.

        :raises: :class:`.InvalidInput` unless ``path`` ends in ``.csv`` or ``.json``.

        """
        self.format = os.path.splitext(path)[1].lower()
        if self.format not in SCAN_FORMATS:
            raise InvalidInput(
                f"The results file must end in .csv or .json, got {path!r}."
            )
        self.path = path
        self.family = family
        self.records: List[Dict[str, Any]] = []

    def add(self, row: ScanRow):
        """Record ``row``."""
        self.records.append(scan_record(self.family, row))

    def render(self, summary: ScanSummary) -> str:
        """Return the file contents."""
        if self.format == ".json":
            data = {"family": self.family, "summary": summary.to_dict()}
            data["rows"] = self.records
            return json.dumps(data, indent=2) + "\n"
        stream = io.StringIO()
        if self.records:
            writer = csv.DictWriter(
                stream, fieldnames=list(self.records[0]), lineterminator="\n"
            )
            writer.writeheader()
            writer.writerows(self.records)
        return stream.getvalue()


@async_contextmanager
async def scan_results(path: str, family: str, summary: ScanSummary):
    """Provide a :class:`.ScanResults` that is written to ``path`` on success.

    .. code-block:: python

        async with scan_results("dp.csv", "dp", generator.summary) as results:
            async for row in generator:
                results.add(row)

    """
    results = ScanResults(path, family)
    yield results
    await write_text(path, results.render(summary))
    logger.debug(f"Wrote {len(results.records)} scan rows to {path}")


async def write_text(path: str, text: str):
    """Write ``text`` to ``path`` with UTF-8 encoding."""
    async with aiofiles.open(path, "w", encoding="utf-8") as stream:
        await stream.write(text)


"""Provide the ``canonstrip`` command line interface."""
import argparse
import asyncio
import configparser
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

from .const import (
    EXIT_FAILURE,
    EXIT_IO,
    EXIT_OK,
    EXIT_USAGE,
    SCAN_FAMILIES,
    TOOL_NAME,
    __version__,
)
from .document import ScanResults, VerdictDocument, scan_results, timestamp
from .ehrhart import ConjectureReport
from .exceptions import CanonStripException, InvalidInput, LemmaSuiteFailure
from .hilbert import Construction, construct, serre_check
from .ratpoly import RationalPolynomial
from .render import write_svg
from .util.rational import format_rational, parse_rational, parse_rational_list
from .workbench import Workbench

logger = logging.getLogger("canonstrip")


def _add_svg(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--svg", metavar="PATH", help="also write an SVG scatter of the roots"
    )


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser of the ``canonstrip`` command."""
    parser = argparse.ArgumentParser(
        prog=TOOL_NAME,
        description=(
            "Decide exactly whether the roots of Hilbert and Ehrhart polynomials lie"
            " in the canonical strip, the narrowed strip or on the canonical line."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--site", help="the canonstrip.ini section to use")
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log to standard error; repeat for debug output",
    )
    parser.add_argument(
        "--no-timestamp", action="store_true", help="omit the timestamp field"
    )
    parser.add_argument(
        "--pretty", action="store_true", help="print a table instead of JSON"
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    strip = commands.add_parser("strip", help="classify one polynomial")
    source = strip.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "--coeffs", metavar="A,B,...", help="ascending rational coefficients"
    )
    source.add_argument("--surface", nargs=2, metavar=("C1SQ", "C2"))
    source.add_argument("--threefold", nargs=2, metavar=("C1CUBE", "C1C2"))
    source.add_argument("--curve", metavar="GENUS")
    source.add_argument(
        "--constructor",
        metavar="SPEC",
        help="projective:n, grassmannian:k,N, k3:h2, curve:g, surface:.., threefold:..",
    )
    strip.add_argument("--dim", type=int, help="the dimension of the narrowed strip")
    _add_svg(strip)
    strip.set_defaults(handler=run_strip)

    grassmannian = commands.add_parser("grassmannian", help="classify G(k, N)")
    grassmannian.add_argument("k", type=int)
    grassmannian.add_argument("n", type=int, metavar="N")
    grassmannian.add_argument(
        "--section", type=int, metavar="M", help="restrict to a section of -MK"
    )
    _add_svg(grassmannian)
    grassmannian.set_defaults(handler=run_grassmannian)

    embedded = commands.add_parser("embedded", help="check a section of -sK")
    embedded.add_argument(
        "--ambient", required=True, metavar="SPEC", help="a constructor or coeffs:.."
    )
    embedded.add_argument("--s", required=True, dest="multiple", metavar="RATIONAL")
    _add_svg(embedded)
    embedded.set_defaults(handler=run_embedded)

    ehrhart = commands.add_parser("ehrhart", help="Ehrhart polynomial verdicts")
    polytopes = ehrhart.add_mutually_exclusive_group(required=True)
    polytopes.add_argument("--file", metavar="PATH", help="a polytope JSON file")
    polytopes.add_argument("--catalog", metavar="NAME", help="a catalog name or file")
    _add_svg(ehrhart)
    ehrhart.set_defaults(handler=run_ehrhart)

    scan = commands.add_parser("scan", help="scan a family of Chern numbers")
    scan.add_argument("--family", required=True, choices=SCAN_FAMILIES)
    for key in ("c1sq", "c2", "c1cube", "c1c2"):
        scan.add_argument(f"--{key}", metavar="A..B[:STEP]")
    scan.add_argument("--out", metavar="PATH", help="a .csv or .json results file")
    scan.set_defaults(handler=run_scan)

    lemma = commands.add_parser("lemma-test", help="run the section lemma suite")
    lemma.add_argument("--cases", type=int)
    lemma.add_argument("--max-degree", type=int)
    lemma.add_argument("--s-list", metavar="S1,S2,...")
    lemma.add_argument("--seed", type=int)
    lemma.add_argument("--probes", type=int, default=0)
    lemma.set_defaults(handler=run_lemma_test)
    return parser


def _emit(args: argparse.Namespace, documents: Sequence[VerdictDocument], many=False):
    if args.pretty:
        print("\n\n".join(document.to_text() for document in documents))
    elif many:
        print(json.dumps([document.to_dict() for document in documents], indent=2))
    else:
        print(documents[0].to_json())


async def _finish(
    args: argparse.Namespace,
    workbench: Workbench,
    documents: List[VerdictDocument],
    many: bool = False,
) -> int:
    if getattr(args, "svg", None):
        config = workbench.config
        await write_svg(
            args.svg, documents, config.svg_panel_width, config.svg_panel_height
        )
    _emit(args, documents, many)
    return EXIT_OK


def _stamp(args: argparse.Namespace, workbench: Workbench) -> Optional[str]:
    return timestamp(workbench.config.timestamp and not args.no_timestamp)


def _coefficients(text: str, source: str) -> RationalPolynomial:
    return RationalPolynomial(parse_rational_list(text, source))


def _strip_construction(args: argparse.Namespace) -> Construction:
    if args.coeffs is not None:
        polynomial = _coefficients(args.coeffs, "--coeffs")
        dim = max(polynomial.degree, 1) if args.dim is None else args.dim
        return Construction(
            "coeffs", {"coeffs": polynomial.to_strings()}, polynomial, dim
        )
    if args.surface is not None:
        return construct(f"surface:{','.join(args.surface)}")
    if args.threefold is not None:
        return construct(f"threefold:{','.join(args.threefold)}")
    if args.curve is not None:
        return construct(f"curve:{args.curve}")
    return construct(args.constructor)


def _construction_input(construction: Construction) -> Dict[str, Any]:
    if construction.name == "coeffs":
        return dict(construction.parameters)
    return {"constructor": construction.name, "parameters": construction.parameters}


def _construction_details(construction: Construction) -> Dict[str, Any]:
    details: Dict[str, Any] = {
        "serre_symmetric": serre_check(construction.polynomial, construction.dim)
    }
    datum = construction.datum
    if datum is not None and hasattr(datum, "table_verdict"):
        details["table"] = datum.table_verdict()._asdict()
        details["extremal_ratio"] = format_rational(datum.extremal_ratio())
    return details


async def run_strip(args: argparse.Namespace, workbench: Workbench) -> int:
    """Classify one polynomial and print its document."""
    construction = _strip_construction(args)
    dim = construction.dim if args.dim is None else args.dim
    verdict = await workbench.strip(construction.polynomial, dim)
    document = VerdictDocument.from_verdict(
        "strip",
        _construction_input(construction),
        verdict,
        details=_construction_details(construction),
        timestamp=_stamp(args, workbench),
    )
    return await _finish(args, workbench, [document])


async def _section_document(
    args: argparse.Namespace,
    workbench: Workbench,
    command: str,
    input: Dict[str, Any],
    ambient: RationalPolynomial,
    multiple,
) -> VerdictDocument:
    section, check = await workbench.embedded.section(ambient, multiple)
    roots = []
    if section.restricted.degree > 0:
        roots = await workbench.approximate(section.restricted)
    return VerdictDocument(
        command,
        input,
        section.restricted,
        {"on_line": check.holds},
        [check.report],
        roots,
        dim=max(section.restricted.degree, 1),
        details={
            "ambient": ambient.to_dict(),
            "s": format_rational(section.multiple),
            "line": format_rational(section.line),
            "symmetry_sign": section.symmetry_sign(),
        },
        timestamp=_stamp(args, workbench),
    )


async def run_grassmannian(args: argparse.Namespace, workbench: Workbench) -> int:
    """Classify ``G(k, N)`` or one of its anticanonical sections."""
    result = await workbench.hilbert.grassmannian(args.k, args.n)
    construction = result.construction
    input = _construction_input(construction)
    if args.section is not None:
        input["section"] = args.section
        document = await _section_document(
            args,
            workbench,
            "grassmannian",
            input,
            construction.polynomial,
            args.section,
        )
    else:
        details = _construction_details(construction)
        details["value_at_1"] = format_rational(construction.polynomial(1))
        document = VerdictDocument.from_verdict(
            "grassmannian",
            input,
            result.verdict,
            details=details,
            timestamp=_stamp(args, workbench),
        )
    return await _finish(args, workbench, [document])


def _ambient(spec: str) -> RationalPolynomial:
    name, _, arguments = spec.partition(":")
    if name.strip().lower() == "coeffs":
        return _coefficients(arguments, spec)
    return construct(spec).polynomial


async def run_embedded(args: argparse.Namespace, workbench: Workbench) -> int:
    """Check the canonical line of a section of ``-sK``."""
    multiple = parse_rational(args.multiple, "--s")
    input = {"ambient": args.ambient, "s": format_rational(multiple)}
    document = await _section_document(
        args, workbench, "embedded", input, _ambient(args.ambient), multiple
    )
    return await _finish(args, workbench, [document])


def _ehrhart_document(
    args: argparse.Namespace, workbench: Workbench, report: ConjectureReport, source
) -> VerdictDocument:
    result = report.result
    return VerdictDocument.from_verdict(
        "ehrhart",
        {"source": source, "name": report.name},
        result.verdict,
        details={
            "reflexive": report.reflexive,
            "smooth": report.smooth,
            "terminal": report.terminal,
            "conjecture": report.conjecture,
            "vertices": len(report.polytope.vertices),
            "counts": {str(t): count for t, count in result.counts},
        },
        timestamp=_stamp(args, workbench),
    )


async def run_ehrhart(args: argparse.Namespace, workbench: Workbench) -> int:
    """Print one document per polytope, in file or catalog order."""
    if args.file is not None:
        polytope = await workbench.ehrhart.load(args.file)
        reports = [await workbench.ehrhart.verdict(polytope)]
        source = args.file
    else:
        reports = [report async for report in workbench.ehrhart.catalog(args.catalog)]
        source = args.catalog
    documents = [
        _ehrhart_document(args, workbench, report, source) for report in reports
    ]
    return await _finish(args, workbench, documents, many=True)


async def run_scan(args: argparse.Namespace, workbench: Workbench) -> int:
    """Scan a family and write the results file."""
    ranges = {key: getattr(args, key) for key in ("c1sq", "c2", "c1cube", "c1c2")}
    generator = workbench.hilbert.scan(args.family, **ranges)
    if args.out is None:
        results = ScanResults("<stdout>.json", args.family)
        async for row in generator:
            results.add(row)
        print(results.render(generator.summary), end="")
        return EXIT_OK
    async with scan_results(args.out, args.family, generator.summary) as results:
        async for row in generator:
            results.add(row)
    summary = generator.summary
    print(
        f"{args.family}: {summary.total} rows, cs {summary.cs}, ncs {summary.ncs},"
        f" cl {summary.cl} -> {args.out}"
    )
    return EXIT_OK


async def run_lemma_test(args: argparse.Namespace, workbench: Workbench) -> int:
    """Run the section lemma suite and print its tally."""
    s_values = None
    if args.s_list is not None:
        s_values = parse_rational_list(args.s_list, "--s-list")
    config = workbench.config
    seed = config.lemma_seed if args.seed is None else args.seed
    status = EXIT_OK
    try:
        summary = await workbench.embedded.lemma_suite(
            args.cases, args.max_degree, s_values, seed, args.probes
        )
    except LemmaSuiteFailure as exc:
        summary = exc.summary
        print(str(exc), file=sys.stderr)
        status = EXIT_FAILURE
    tally = {"seed": seed, **summary.to_dict()}
    if args.pretty:
        print(
            f"{summary.passed}/{summary.checks} checks passed over {summary.cases}"
            f" cases (seed {seed})"
        )
        if summary.failures:
            print(f"failing seeds: {tally['failing_seeds']}")
    else:
        print(json.dumps(tally, indent=2))
    return status


_HANDLER = logging.StreamHandler(sys.stderr)
_HANDLER.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))

# Options whose values may start with a minus sign, such as "-12..12".
VALUE_OPTIONS = ("--c1sq", "--c2", "--c1cube", "--c1c2", "--coeffs", "--s", "--s-list")


def _attach_values(argv: Sequence[str]) -> List[str]:
    """Rewrite ``--c2 -12..12`` as ``--c2=-12..12`` so argparse keeps the value."""
    result: List[str] = []
    index = 0
    while index < len(argv):
        token = argv[index]
        if token in VALUE_OPTIONS and index + 1 < len(argv):
            value = argv[index + 1]
            if value.startswith("-") and not value.startswith("--"):
                result.append(f"{token}={value}")
                index += 2
                continue
        result.append(token)
        index += 1
    return result


def _configure_logging(verbosity: int):
    if not verbosity:
        return
    if _HANDLER not in logger.handlers:
        logger.addHandler(_HANDLER)
    logger.setLevel(logging.INFO if verbosity == 1 else logging.DEBUG)


async def _run(args: argparse.Namespace) -> int:
    async with Workbench(site_name=args.site) as workbench:
        return await args.handler(args, workbench)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line interface and return the process exit code.

    ``0`` means the verdict was computed, ``1`` an assertion or suite failure, ``2`` a
    usage error and ``3`` an I/O error.

    """
    parser = build_parser()
    try:
        args = parser.parse_args(
            _attach_values(sys.argv[1:] if argv is None else list(argv))
        )
    except SystemExit as exc:
        return EXIT_OK if not exc.code else EXIT_USAGE
    _configure_logging(args.verbose)
    try:
        return asyncio.run(_run(args))
    except OSError as exc:
        print(f"{TOOL_NAME}: error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (InvalidInput, configparser.Error, ValueError) as exc:
        print(f"{TOOL_NAME}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CanonStripException as exc:
        print(f"{TOOL_NAME}: failure: {exc}", file=sys.stderr)
        return EXIT_FAILURE

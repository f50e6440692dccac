"""Restricted Hilbert polynomials of anticanonical sections.

If ``X`` is a section of ``-sK`` on a Fano variety ``F``, its Hilbert polynomial is
``H_F(z) - H_F(z - s)``. When the roots of ``H_F`` lie in the canonical strip and are
symmetric about ``-1/2``, every root of the difference lies on ``Re z = (s - 1)/2``.
This module builds the difference, checks the line exactly, and runs randomized suites
over generated strip-symmetric polynomials.

"""
from dataclasses import dataclass, field
from fractions import Fraction
from logging import getLogger
from typing import Iterable, List, Sequence

from .exceptions import (
    InvalidInput,
    InvalidSectionMultiple,
    LemmaFailureItem,
    LemmaSuiteFailure,
)
from .ratpoly import Number, RationalPolynomial
from .rootloc import RootReport, line_split
from .util.random import SplitMix64

logger = getLogger("canonstrip")

HALF = Fraction(1, 2)
# Ranges for the numerators and denominators of generated roots.
REAL_DENOMINATORS = (3, 12)
IMAGINARY_NUMERATORS = (1, 12)
IMAGINARY_DENOMINATORS = (1, 6)


@dataclass(frozen=True)
class EmbeddedSection:
    """A section of ``-sK`` together with the ambient and restricted polynomials."""

    ambient: RationalPolynomial
    multiple: Fraction
    restricted: RationalPolynomial

    @property
    def line(self) -> Fraction:
        """Return ``(s - 1) / 2``, the line the restricted roots should lie on."""
        return (self.multiple - 1) / 2

    def symmetry_sign(self) -> int:
        """Return ``+1`` or ``-1`` when ``restricted(s - 1 - z) = +-restricted(z)``.

        Returns ``0`` when neither identity holds.

        """
        mirrored = self.restricted.reflect_about(self.line)
        if mirrored == self.restricted:
            return 1
        if mirrored == -self.restricted:
            return -1
        return 0


@dataclass(frozen=True)
class CanonicalLineCheck:
    """The result of :func:`.verify_canonical_line`."""

    holds: bool
    report: RootReport


@dataclass(frozen=True)
class LemmaCaseResult:
    """The checks of one generated polynomial."""

    seed: int
    degree: int
    polynomial: RationalPolynomial
    checks: int
    failures: List[LemmaFailureItem] = field(default_factory=list)


@dataclass
class LemmaSuiteSummary:
    """Tallies of a section lemma suite run.

    Probe polynomials have roots outside the strip; their line failures are recorded
    as observations only.

    """

    cases: int = 0
    checks: int = 0
    passed: int = 0
    failures: List[LemmaFailureItem] = field(default_factory=list)
    probes: int = 0
    probe_checks: int = 0
    probe_violations: int = 0

    def merge(self, result: LemmaCaseResult):
        """Add the tallies of one case."""
        self.cases += 1
        self.checks += result.checks
        self.passed += result.checks - len(result.failures)
        self.failures.extend(result.failures)
        self.failures.sort(key=lambda item: (item.seed, item.multiple))

    def merge_probe(self, result: LemmaCaseResult):
        """Add the tallies of one probe."""
        self.probes += 1
        self.probe_checks += result.checks
        self.probe_violations += len(result.failures)

    def to_dict(self):
        """Return a JSON friendly mapping."""
        return {
            "cases": self.cases,
            "checks": self.checks,
            "passed": self.passed,
            "failed": len(self.failures),
            "failing_seeds": sorted({item.seed for item in self.failures}),
            "probes": self.probes,
            "probe_checks": self.probe_checks,
            "probe_violations": self.probe_violations,
        }


def restricted_hilbert(
    ambient: RationalPolynomial, multiple: Number
) -> EmbeddedSection:
    """Return the section of ``-sK`` with Hilbert polynomial ``H_F(z) - H_F(z - s)``.

    :param ambient: The Hilbert polynomial ``H_F`` of the ambient variety, of degree at
        least 1.
    :param multiple: The rational multiple ``s >= 1``.

    :raises: :class:`.InvalidInput` for a constant ambient polynomial and
        :class:`.InvalidSectionMultiple` for ``s < 1``.

    .. code-block:: python

        section = restricted_hilbert(hilbert_projective(2), 1)
        print(section.restricted)  # 9*z

    """
    multiple = Fraction(multiple)
    if ambient.degree < 1:
        raise InvalidInput("The ambient polynomial must have degree at least 1.")
    if multiple < 1:
        raise InvalidSectionMultiple(multiple)
    restricted = ambient - ambient.shift(-multiple)
    return EmbeddedSection(ambient, multiple, restricted)


def verify_canonical_line(section: EmbeddedSection) -> CanonicalLineCheck:
    """Check exactly whether every restricted root lies on ``Re z = (s - 1)/2``."""
    report = line_split(section.restricted, section.line)
    return CanonicalLineCheck(report.on_count == section.restricted.degree, report)


def _real_part(rng: SplitMix64) -> Fraction:
    """Return ``-k/q`` strictly between ``-1/2`` and ``0``."""
    q = rng.randint(*REAL_DENOMINATORS)
    k = rng.randint(1, (q - 1) // 2)
    return Fraction(-k, q)


def _imaginary_part(rng: SplitMix64) -> Fraction:
    numerator = rng.randint(*IMAGINARY_NUMERATORS)
    return Fraction(numerator, rng.randint(*IMAGINARY_DENOMINATORS))


def _real_pair(a: Fraction) -> RationalPolynomial:
    """Return ``(z - a)(z + 1 + a)``."""
    return RationalPolynomial.from_roots([a, -1 - a])


def _quadruple(a: Fraction, b: Fraction) -> RationalPolynomial:
    """Return the factor with roots ``a +- bi`` and ``-1 - a +- bi``."""
    near = RationalPolynomial([a * a + b * b, -2 * a, 1])
    far = RationalPolynomial([(1 + a) ** 2 + b * b, 2 * (1 + a), 1])
    return near * far


def _self_pair(b: Fraction) -> RationalPolynomial:
    """Return the factor with roots ``-1/2 +- bi``."""
    return RationalPolynomial([HALF * HALF + b * b, 1, 1])


def _symmetric_factors(rng: SplitMix64, degree: int) -> List[RationalPolynomial]:
    factors = []
    if degree % 2:
        factors.append(RationalPolynomial([HALF, 1]))
        degree -= 1
    while degree:
        choice = rng.randbelow(3 if degree >= 4 else 2)
        if choice == 0:
            factors.append(_real_pair(_real_part(rng)))
            degree -= 2
        elif choice == 1:
            # b = 0 gives the double root -1/2.
            b = Fraction(rng.randbelow(13), 4)
            factors.append(_self_pair(b))
            degree -= 2
        else:
            factors.append(_quadruple(_real_part(rng), _imaginary_part(rng)))
            degree -= 4
    return factors


def random_strip_symmetric(degree: int, seed: int) -> RationalPolynomial:
    """Return a monic polynomial meeting the section lemma hypotheses.

    The root multiset is closed under conjugation and under ``z -> -1 - z``, and every
    root satisfies ``-1 < Re z < 0``. Roots come from real pairs ``a, -1 - a``,
    quadruples ``a +- bi, -1 - a +- bi`` and self-symmetric pairs ``-1/2 +- bi``, with
    ``-1/2 < a < 0``. Odd degrees add the root ``-1/2``.

    :param degree: The degree, at least 1.
    :param seed: The :class:`.SplitMix64` seed that fixes the output.

    """
    if degree < 1:
        raise InvalidInput(f"The degree must be at least 1, got {degree}.")
    result = RationalPolynomial([1])
    for factor in _symmetric_factors(SplitMix64(seed), degree):
        result = result * factor
    return result


def random_off_strip_symmetric(degree: int, seed: int) -> RationalPolynomial:
    """Return a symmetric polynomial with a real root pair outside the strip.

    The pair is ``a, -1 - a`` with ``a < -1``, so the strip hypothesis fails. Used for
    probes; the line conclusion may or may not survive.

    """
    if degree < 2:
        raise InvalidInput(f"Probe polynomials need degree at least 2, got {degree}.")
    rng = SplitMix64(seed)
    outside = _real_pair(-1 + _real_part(rng) - rng.randint(0, 2))
    rest = RationalPolynomial([1])
    for factor in _symmetric_factors(rng, degree - 2):
        rest = rest * factor
    return outside * rest


def case_seeds(seed: int, count: int) -> List[int]:
    """Return ``count`` case seeds drawn from a master generator seeded by ``seed``."""
    master = SplitMix64(seed)
    return [master.next_u64() for _ in range(count)]


def case_degree(case_seed: int, max_degree: int) -> int:
    """Return the degree of the case seeded by ``case_seed``, in ``1..max_degree``."""
    return 1 + SplitMix64(case_seed).randbelow(max_degree)


def check_polynomial(
    seed: int,
    polynomial: RationalPolynomial,
    s_values: Sequence[Fraction],
) -> LemmaCaseResult:
    """Check the canonical line conclusion of ``polynomial`` at every ``s``."""
    failures = []
    for multiple in s_values:
        section = restricted_hilbert(polynomial, multiple)
        check = verify_canonical_line(section)
        if not check.holds:
            failures.append(
                LemmaFailureItem(
                    seed, polynomial.degree, section.multiple, polynomial, check.report
                )
            )
    return LemmaCaseResult(seed, polynomial.degree, polynomial, len(s_values), failures)


def lemma_case(
    case_seed: int, max_degree: int, s_values: Sequence[Fraction]
) -> LemmaCaseResult:
    """Generate and check the case seeded by ``case_seed``."""
    degree = case_degree(case_seed, max_degree)
    return check_polynomial(
        case_seed, random_strip_symmetric(degree, case_seed), s_values
    )


def probe_case(
    probe_seed: int, max_degree: int, s_values: Sequence[Fraction]
) -> LemmaCaseResult:
    """Generate and check an off-strip probe seeded by ``probe_seed``."""
    degree = max(2, case_degree(probe_seed, max_degree))
    return check_polynomial(
        probe_seed, random_off_strip_symmetric(degree, probe_seed), s_values
    )


def validate_suite_parameters(
    cases: int, max_degree: int, s_values: Iterable[Number], probes: int = 0
) -> List[Fraction]:
    """Validate suite parameters and return the multiples as fractions."""
    s_values = [Fraction(value) for value in s_values]
    if cases < 1 or max_degree < 1 or probes < 0:
        raise InvalidInput(
            "The suite needs positive cases and max_degree and nonnegative probes."
        )
    if not s_values:
        raise InvalidInput("The suite needs at least one multiple s.")
    for value in s_values:
        if value < 1:
            raise InvalidSectionMultiple(value)
    return s_values


def lemma_property_suite(
    cases: int,
    max_degree: int,
    s_values: Iterable[Number],
    seed: int,
    probes: int = 0,
) -> LemmaSuiteSummary:
    """Check the section lemma on ``cases`` generated polynomials.

    :param cases: The number of generated polynomials.
    :param max_degree: The largest degree generated.
    :param s_values: The multiples ``s >= 1`` each polynomial is checked at.
    :param seed: The master :class:`.SplitMix64` seed.
    :param probes: The number of off-strip probe polynomials (default: ``0``).

    :returns: A :class:`.LemmaSuiteSummary`.

    :raises: :class:`.LemmaSuiteFailure` carrying every failed case.

    """
    s_values = validate_suite_parameters(cases, max_degree, s_values, probes)
    summary = LemmaSuiteSummary()
    seeds = case_seeds(seed, cases + probes)
    for case_seed in seeds[:cases]:
        summary.merge(lemma_case(case_seed, max_degree, s_values))
    for probe_seed in seeds[cases:]:
        summary.merge_probe(probe_case(probe_seed, max_degree, s_values))
    finish_suite(summary)
    return summary


def finish_suite(summary: LemmaSuiteSummary):
    """Log the outcome of a suite and raise on failures."""
    if summary.probe_violations:
        logger.info(
            f"{summary.probe_violations} of {summary.probe_checks} probe checks left"
            " the line"
        )
    logger.debug(f"Section lemma suite: {summary.passed}/{summary.checks} passed")
    if summary.failures:
        raise LemmaSuiteFailure(list(summary.failures), summary)


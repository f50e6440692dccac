"""Locate the complex roots of rational polynomials relative to vertical lines.

All verdicts come from exact counts. :func:`.line_split` is the workhorse: it counts
the roots left of, on, and right of ``Re z = a`` with multiplicity, and
:func:`.classify_strip` combines a handful of such counts into the canonical strip
verdicts. :func:`.approx_roots` produces floating point roots for display only.

"""
from dataclasses import dataclass, field
from fractions import Fraction
from logging import getLogger
from typing import Dict, List, Tuple

import numpy as np
import sympy

from .exceptions import (
    ConsistencyError,
    ConvergenceError,
    InvalidInput,
    ZeroPolynomialError,
)
from .ratpoly import (
    Interval,
    Number,
    RationalPolynomial,
    cauchy_index,
    count_real_roots,
    divide,
    gcd,
    squarefree_decomposition,
)

logger = getLogger("canonstrip")

DEFAULT_TOLERANCE = Fraction(1, 10**12)
DEFAULT_ITERATION_CAP = 1000
SEED_ANGLE = 0.4


@dataclass(frozen=True)
class RootReport:
    """Root counts, with multiplicity, relative to the line ``Re z = line``."""

    line: Fraction
    left_count: int
    on_count: int
    right_count: int

    @property
    def degree(self) -> int:
        """Return the degree of the polynomial the report describes."""
        return self.left_count + self.on_count + self.right_count

    def to_dict(self) -> Dict:
        """Return a JSON friendly mapping."""
        return {
            "line": f"{self.line.numerator}/{self.line.denominator}",
            "left": self.left_count,
            "on": self.on_count,
            "right": self.right_count,
        }


@dataclass(frozen=True)
class ApproximateRoot:
    """A floating point root for display, with its scaled residual."""

    value: complex
    residual: float
    multiplicity: int = 1


@dataclass(frozen=True)
class StripVerdict:
    """Exact canonical strip verdicts for one polynomial.

    ``cs``, ``ncs`` and ``cl`` derive only from the exact :class:`.RootReport` values in
    ``reports``; ``approx_roots`` is for display.

    """

    polynomial: RationalPolynomial
    dim: int
    cs: bool
    ncs: bool
    cl: bool
    reports: Dict[Fraction, RootReport]
    approx_roots: List[ApproximateRoot] = field(default_factory=list)

    @property
    def degree(self) -> int:
        """Return the degree of the classified polynomial."""
        return self.polynomial.degree

    def report(self, line: Number) -> RootReport:
        """Return the report at ``line``, which must be one of the verdict lines."""
        return self.reports[Fraction(line)]


def verdict_lines(dim: int) -> Tuple[Fraction, ...]:
    """Return the abscissas a verdict in dimension ``dim`` is computed on.

    Duplicates are removed, so dimension 1 has three lines.

    """
    lines = (
        Fraction(-1),
        Fraction(0),
        Fraction(-1) + Fraction(1, dim + 1),
        Fraction(-1, dim + 1),
        Fraction(-1, 2),
    )
    return tuple(dict.fromkeys(lines))


def _axis_parts(
    q: RationalPolynomial,
) -> Tuple[RationalPolynomial, RationalPolynomial]:
    """Return ``A, B`` with ``q(iy) = A(y) + i B(y)`` for real ``y``."""
    real, imaginary = [], []
    for power, value in enumerate(q):
        # i**power cycles through 1, i, -1, -i.
        unit = power % 4
        real.append(value if unit == 0 else -value if unit == 2 else 0)
        imaginary.append(value if unit == 1 else -value if unit == 3 else 0)
    return RationalPolynomial(real), RationalPolynomial(imaginary)


def _from_axis(g: RationalPolynomial) -> RationalPolynomial:
    """Return the real polynomial with roots ``iy`` for the roots ``y`` of ``g``.

    ``g`` must be even or odd, which holds for ``gcd(A, B)``.

    """
    values = []
    for power, value in enumerate(g):
        exponent = power // 2
        values.append(value if exponent % 2 == 0 else -value)
    return RationalPolynomial(values)


def _axis_count(symmetric: RationalPolynomial) -> int:
    """Count roots of ``symmetric`` on the imaginary axis, with multiplicity.

    ``symmetric`` has its roots closed under ``z -> -z``, so it is ``z**k * e(z**2)``
    and its nonzero axis roots come from the negative real roots of ``e``.

    """
    values = list(symmetric.coefficients)
    zero_order = 0
    while values and values[0] == 0:
        values.pop(0)
        zero_order += 1
    even = RationalPolynomial(values[::2])
    count = zero_order
    for factor, multiplicity in squarefree_decomposition(even):
        negatives = count_real_roots(factor, Interval.open(None, 0))
        count += 2 * multiplicity * negatives
    return count


def _half_plane_difference(f: RationalPolynomial) -> int:
    """Return ``left - right`` for ``f`` with no root pairs ``z, -z``.

    Follows from the argument principle along the imaginary axis.

    """
    if f.degree < 1:
        return 0
    a, b = _axis_parts(f)
    if f.degree % 2 == 0:
        return -cauchy_index(b, a)
    return cauchy_index(a, b)


def line_split(p: RationalPolynomial, line: Number) -> RootReport:
    """Count the roots of ``p`` left of, on and right of ``Re z = line``.

    :param p: A nonzero polynomial.
    :param line: The abscissa of the vertical line.

    :returns: A :class:`.RootReport` whose counts include multiplicity.

    :raises: :class:`.ZeroPolynomialError` when ``p`` is zero.

    The polynomial is shifted so that the line becomes the imaginary axis. Writing
    ``q(iy) = A(y) + i B(y)``, the common roots of ``A`` and ``B`` are the root pairs
    ``z, -z`` of ``q``; every root on the axis is among them. That factor is divided
    out first, its axis roots are counted by Sturm sequences, and the remaining
    polynomial is split between the half planes by a Cauchy index.

    """
    if p.is_zero:
        raise ZeroPolynomialError("line_split")
    line = Fraction(line)
    q = p.shift(line)
    if q.degree < 1:
        return RootReport(line, 0, 0, 0)
    a, b = _axis_parts(q)
    symmetric = _from_axis(gcd(a, b)).monic()
    rest, remainder = divide(q, symmetric)
    if remainder:
        raise ConsistencyError(  # pragma: no cover
            f"{symmetric} does not divide {q}"
        )
    on = _axis_count(symmetric)
    paired = (symmetric.degree - on) // 2
    difference = _half_plane_difference(rest)
    left = paired + (rest.degree + difference) // 2
    right = paired + (rest.degree - difference) // 2
    logger.debug(
        f"line_split at {line}: symmetric factor degree {symmetric.degree},"
        f" left {left}, on {on}, right {right}"
    )
    return RootReport(line, left, on, right)


def hurwitz_stable(p: RationalPolynomial) -> bool:
    """Return whether every root of ``p`` has negative real part.

    Roots on the imaginary axis make ``p`` unstable; they are detected exactly before
    any Routh-Hurwitz style count.

    """
    report = line_split(p, 0)
    return report.on_count == 0 and report.right_count == 0


def hurwitz_minors(p: RationalPolynomial) -> List[Fraction]:
    """Return the leading principal minors of the Hurwitz matrix of ``p``.

    The polynomial is first scaled to a positive leading coefficient. All minors are
    positive exactly when :func:`.hurwitz_stable` holds.

    """
    if p.is_zero:
        raise ZeroPolynomialError("hurwitz_minors")
    if p.leading < 0:
        p = -p
    n = p.degree
    descending = list(reversed(p.coefficients))

    def entry(row, column):
        index = 2 * column - row + 1
        if 0 <= index <= n:
            value = descending[index]
            return sympy.Rational(value.numerator, value.denominator)
        return sympy.Integer(0)

    matrix = sympy.Matrix(n, n, lambda row, column: entry(row, column))
    minors = []
    for size in range(1, n + 1):
        value = matrix[:size, :size].det()
        minors.append(Fraction(int(value.p), int(value.q)))
    return minors


def strip_hurwitz_conditions(
    p: RationalPolynomial,
) -> Tuple[List[Fraction], List[Fraction]]:
    """Return the Hurwitz minors of ``p`` and of ``p(-1 - z)``.

    All roots lie in the open canonical strip exactly when both lists are positive.

    """
    return hurwitz_minors(p), hurwitz_minors(p.reflect())


def classify_strip(
    p: RationalPolynomial,
    dim: int,
    tolerance: Number = DEFAULT_TOLERANCE,
    iteration_cap: int = DEFAULT_ITERATION_CAP,
    approximate: bool = True,
) -> StripVerdict:
    """Return the canonical strip verdicts of ``p`` in dimension ``dim``.

    :param p: A nonzero polynomial.
    :param dim: The dimension that fixes the narrowed strip.
    :param tolerance: The scaled residual for the display roots (default:
        ``1/10**12``).
    :param iteration_cap: The iteration cap for the display roots (default: ``1000``).
    :param approximate: Whether to compute the display roots at all (default:
        ``True``).

    The canonical strip is open, the narrowed strip closed, and the canonical line is
    ``Re z = -1/2`` exactly.

    """
    if p.is_zero:
        raise ZeroPolynomialError("classify_strip")
    if dim < 1:
        raise InvalidInput(f"The dimension must be at least 1, got {dim}.")
    reports = {line: line_split(p, line) for line in verdict_lines(dim)}
    low = Fraction(-1) + Fraction(1, dim + 1)
    high = Fraction(-1, dim + 1)
    cs = (
        reports[Fraction(-1)].left_count == reports[Fraction(-1)].on_count == 0
        and reports[Fraction(0)].right_count == reports[Fraction(0)].on_count == 0
    )
    ncs = reports[low].left_count == 0 and reports[high].right_count == 0
    cl = reports[Fraction(-1, 2)].on_count == p.degree
    roots = approx_roots(p, tolerance, iteration_cap) if approximate else []
    return StripVerdict(p, dim, cs, ncs, cl, reports, roots)


def _scaled_residual(coefficients: np.ndarray, z: np.ndarray) -> np.ndarray:
    value = np.abs(np.polyval(coefficients, z))
    magnitude = np.polyval(np.abs(coefficients), np.abs(z))
    return np.divide(value, magnitude, out=np.zeros_like(value), where=magnitude > 0)


def _aberth(factor: RationalPolynomial, tolerance: float, cap: int) -> np.ndarray:
    coefficients = np.array([float(value) for value in reversed(factor.coefficients)])
    coefficients = coefficients / coefficients[0]
    n = factor.degree
    if n == 1:
        return np.array([-coefficients[1] + 0j])
    derivative = np.polyder(coefficients)
    radius = 1 + np.max(np.abs(coefficients[1:]))
    angles = 2 * np.pi * np.arange(n) / n + SEED_ANGLE
    z = radius * np.exp(1j * angles)
    for iteration in range(cap):
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.polyval(coefficients, z) / np.polyval(derivative, z)
            differences = z[:, None] - z[None, :]
            np.fill_diagonal(differences, np.inf)
            repulsion = np.sum(1 / differences, axis=1)
            step = ratio / (1 - ratio * repulsion)
        step = np.where(np.isfinite(step), step, 1e-8)
        z = z - step
        if np.max(_scaled_residual(coefficients, z)) <= tolerance and np.all(
            np.abs(step) <= 1e-12 * (1 + np.abs(z))
        ):
            logger.debug(f"Aberth iteration converged after {iteration + 1} steps")
            return z
    if np.max(_scaled_residual(coefficients, z)) <= tolerance:
        return z
    raise ConvergenceError(cap, n)


def approx_roots(
    p: RationalPolynomial,
    tolerance: Number = DEFAULT_TOLERANCE,
    iteration_cap: int = DEFAULT_ITERATION_CAP,
) -> List[ApproximateRoot]:
    """Return floating point approximations of every root of ``p``.

    :param p: A nonzero polynomial.
    :param tolerance: The largest scaled residual ``|p(z)| / sum |a_k| |z|**k``
        accepted (default: ``1/10**12``).
    :param iteration_cap: The iteration cap of the simultaneous iteration (default:
        ``1000``).

    :returns: One :class:`.ApproximateRoot` per root counted with multiplicity, sorted
        by real then imaginary part.

    :raises: :class:`.ConvergenceError` when the cap is reached.

    Each factor of the squarefree decomposition is solved separately with the
    Aberth-Ehrlich iteration, so repeated roots do not slow convergence.

    """
    if p.is_zero:
        raise ZeroPolynomialError("approx_roots")
    tolerance = Fraction(tolerance)
    if tolerance <= 0:
        raise InvalidInput(f"The tolerance must be positive, got {tolerance}.")
    full = np.array([float(value) for value in reversed(p.coefficients)])
    roots: List[ApproximateRoot] = []
    for factor, multiplicity in squarefree_decomposition(p):
        for value in _aberth(factor, float(tolerance), iteration_cap):
            residual = float(_scaled_residual(full, np.array([value]))[0])
            roots.extend(
                ApproximateRoot(complex(value), residual, multiplicity)
                for _ in range(multiplicity)
            )
    roots.sort(key=lambda root: (round(root.value.real, 12), root.value.imag))
    return roots


"""Build anticanonical Hilbert polynomials ``H(z) = chi(-zK)``.

The constructors cover curves, surfaces and threefolds through their Chern numbers,
projective spaces, Grassmannians, polarized K3 surfaces and products. Surfaces and
threefolds also expose their roots in closed form, and :func:`.scan` walks families of
Chern data for canonical strip counterexamples.

"""
from dataclasses import dataclass, field
from fractions import Fraction
from logging import getLogger
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .exceptions import (
    GenusOneCurve,
    InvalidChernData,
    InvalidGrassmannian,
    InvalidInput,
    InvalidRange,
    MalformedInput,
)
from .ratpoly import Number, RationalPolynomial
from .rootloc import StripVerdict, classify_strip
from .util.rational import parse_range, parse_rational_list

logger = getLogger("canonstrip")

HALF = Fraction(1, 2)

# del Pezzo surfaces satisfy c1**2 + c2 = 12 and Fano threefolds c1 * c2 = 24.
DEL_PEZZO_SUM = 12
FANO_THREEFOLD_C1C2 = 24

FAMILY_DEFAULTS = {
    "dp": {"c1sq": "1..9"},
    "fano3": {"c1cube": "2..64"},
    "surface": {},
    "threefold": {},
}


class TableVerdict(NamedTuple):
    """Canonical strip verdicts read off the Chern number inequalities."""

    cs: bool
    ncs: bool
    cl: bool


@dataclass(frozen=True)
class ChernData:
    """Base class for dimension tagged Chern numbers."""

    dim = 0

    def hilbert(self) -> RationalPolynomial:
        """Return the anticanonical Hilbert polynomial."""
        raise NotImplementedError

    def to_dict(self) -> Dict[str, str]:
        """Return a JSON friendly mapping of the Chern numbers."""
        raise NotImplementedError


@dataclass(frozen=True)
class Curve(ChernData):
    """A smooth projective curve of genus ``genus``."""

    genus: int
    dim = 1

    def __post_init__(self):
        """Validate the genus."""
        if int(self.genus) != self.genus or self.genus < 0:
            raise InvalidChernData(
                f"The genus must be a nonnegative integer, got {self.genus}."
            )

    def hilbert(self) -> RationalPolynomial:
        """Return ``(2 - 2g)(z + 1/2)``."""
        return hilbert_curve(self.genus)

    def to_dict(self) -> Dict[str, str]:
        """Return a JSON friendly mapping of the genus."""
        return {"genus": str(self.genus)}


@dataclass(frozen=True)
class Surface(ChernData):
    """A surface given by ``c1**2`` and ``c2``."""

    c1sq: Fraction
    c2: Fraction
    dim = 2

    def __post_init__(self):
        """Normalize to fractions and validate ``c1**2 != 0``."""
        object.__setattr__(self, "c1sq", Fraction(self.c1sq))
        object.__setattr__(self, "c2", Fraction(self.c2))
        if self.c1sq == 0:
            raise InvalidChernData("The surface formulas need c1^2 != 0.")

    def hilbert(self) -> RationalPolynomial:
        """Return the surface Riemann-Roch polynomial."""
        return hilbert_surface(self)

    def extremal_ratio(self) -> Fraction:
        """Return ``3 - 6 c2 / c1**2``, at most 1 for del Pezzo surfaces."""
        return 3 - 6 * self.c2 / self.c1sq

    def table_verdict(self) -> TableVerdict:
        """Return the verdicts predicted by the Chern number inequalities.

        With ``r = c2 / c1**2``: the strip holds iff ``r > -1``, the narrowed strip iff
        ``r >= 1/3`` and the line iff ``r >= 1/2``. For ``c1**2 > 0`` these read
        ``c1**2 > -c2``, ``c1**2 <= 3 c2`` and ``c1**2 <= 2 c2``.

        """
        ratio = self.c2 / self.c1sq
        return TableVerdict(ratio > -1, ratio >= Fraction(1, 3), ratio >= HALF)

    def to_dict(self) -> Dict[str, str]:
        """Return a JSON friendly mapping of the Chern numbers."""
        return {"c1sq": str(self.c1sq), "c2": str(self.c2)}


@dataclass(frozen=True)
class Threefold(ChernData):
    """A threefold given by ``c1**3`` and ``c1 * c2``."""

    c1cube: Fraction
    c1c2: Fraction
    dim = 3

    def __post_init__(self):
        """Normalize to fractions and validate ``c1**3 != 0``."""
        object.__setattr__(self, "c1cube", Fraction(self.c1cube))
        object.__setattr__(self, "c1c2", Fraction(self.c1c2))
        if self.c1cube == 0:
            raise InvalidChernData("The threefold formulas need c1^3 != 0.")

    def hilbert(self) -> RationalPolynomial:
        """Return the threefold Riemann-Roch polynomial."""
        return hilbert_threefold(self)

    def extremal_ratio(self) -> Fraction:
        """Return ``-2 c1 c2 / c1**3``, at most -3/4 for Fano threefolds."""
        return -2 * self.c1c2 / self.c1cube

    def table_verdict(self) -> TableVerdict:
        """Return the verdicts predicted by the thresholds 0, -3/4 and -1."""
        ratio = self.extremal_ratio()
        return TableVerdict(ratio < 0, ratio <= Fraction(-3, 4), ratio <= -1)

    def to_dict(self) -> Dict[str, str]:
        """Return a JSON friendly mapping of the Chern numbers."""
        return {"c1cube": str(self.c1cube), "c1c2": str(self.c1c2)}


@dataclass(frozen=True)
class GrassmannianSpec:
    """The Grassmannian ``G(k, N)`` of ``k``-planes in an ``N``-dimensional space."""

    k: int
    n: int

    def __post_init__(self):
        """Validate ``N >= 2k >= 2``."""
        if self.k < 1 or self.n < 2 * self.k:
            raise InvalidGrassmannian(self.k, self.n)

    @property
    def dim(self) -> int:
        """Return ``k (N - k)``."""
        return self.k * (self.n - self.k)

    def multiplicity(self, i: int) -> int:
        """Return the multiplicity of the root ``-i / N``."""
        return min(self.k, i, self.n - i)


@dataclass(frozen=True)
class ClosedFormRoots:
    """Roots written as ``real +- sqrt(radicand) / 2`` pairs plus isolated roots.

    A negative radicand is a complex conjugate pair on ``Re z = real``.

    """

    pairs: Tuple[Tuple[Fraction, Fraction], ...]
    isolated: Tuple[Fraction, ...] = ()

    @property
    def degree(self) -> int:
        """Return the number of roots with multiplicity."""
        return 2 * len(self.pairs) + len(self.isolated)

    def on_line_count(self, line: Number) -> int:
        """Return the number of roots with ``Re z = line`` exactly."""
        line = Fraction(line)
        count = sum(1 for root in self.isolated if root == line)
        for real, radicand in self.pairs:
            if radicand <= 0:
                count += 2 if real == line else 0
            elif 4 * (line - real) ** 2 == radicand:
                count += 1
        return count

    def approximations(self) -> List[complex]:
        """Return floating point values of the roots."""
        values = [complex(float(root)) for root in self.isolated]
        for real, radicand in self.pairs:
            half = complex(float(radicand)) ** 0.5 / 2
            values.extend([float(real) - half, float(real) + half])
        return sorted(values, key=lambda value: (value.real, value.imag))


@dataclass(frozen=True)
class Construction:
    """A named polynomial constructor with its parameters and dimension."""

    name: str
    parameters: Dict[str, str]
    polynomial: RationalPolynomial
    dim: int
    datum: Optional[ChernData] = field(default=None, compare=False)


@dataclass(frozen=True)
class Classification:
    """A construction together with its exact strip verdict."""

    construction: Construction
    verdict: StripVerdict


@dataclass(frozen=True)
class ScanRow:
    """One scanned datum with its exact verdict."""

    datum: ChernData
    verdict: StripVerdict
    ratio: Fraction

    @property
    def table(self) -> TableVerdict:
        """Return the verdict predicted by the Chern number inequalities."""
        return self.datum.table_verdict()


@dataclass
class ScanSummary:
    """Counts of scanned data per verdict class."""

    total: int = 0
    cs: int = 0
    ncs: int = 0
    cl: int = 0

    def add(self, row: ScanRow):
        """Count ``row``."""
        self.total += 1
        self.cs += row.verdict.cs
        self.ncs += row.verdict.ncs
        self.cl += row.verdict.cl

    def to_dict(self) -> Dict[str, int]:
        """Return a JSON friendly mapping."""
        return {"total": self.total, "cs": self.cs, "ncs": self.ncs, "cl": self.cl}


def hilbert_curve(genus: int) -> RationalPolynomial:
    """Return ``(2 - 2g)(z + 1/2)``.

    :raises: :class:`.GenusOneCurve` for ``genus == 1``.

    """
    if genus == 1:
        raise GenusOneCurve()
    if int(genus) != genus or genus < 0:
        raise InvalidChernData(
            f"The genus must be a nonnegative integer, got {genus}."
        )
    return RationalPolynomial([HALF, 1]).scale(2 - 2 * genus)


def hilbert_surface(chern: Surface) -> RationalPolynomial:
    """Return ``c1^2/2 z^2 + c1^2/2 z + (c1^2 + c2)/12``."""
    c1sq, c2 = chern.c1sq, chern.c2
    return RationalPolynomial([(c1sq + c2) / 12, c1sq / 2, c1sq / 2])


def hilbert_threefold(chern: Threefold) -> RationalPolynomial:
    """Return ``c1^3/6 z^3 + c1^3/4 z^2 + (c1^3 + c1 c2)/12 z + c1 c2/24``."""
    c1cube, c1c2 = chern.c1cube, chern.c1c2
    return RationalPolynomial(
        [c1c2 / 24, (c1cube + c1c2) / 12, c1cube / 4, c1cube / 6]
    )


def hilbert_projective(n: int) -> RationalPolynomial:
    """Return the Hilbert polynomial of ``P^n``: ``prod ((n+1) z + i) / i``."""
    if n < 1:
        raise InvalidInput(f"The projective dimension must be at least 1, got {n}.")
    return _product(
        RationalPolynomial([1, Fraction(n + 1, i)]) for i in range(1, n + 1)
    )


def hilbert_grassmannian(spec: GrassmannianSpec) -> RationalPolynomial:
    """Return the Hilbert polynomial of ``G(k, N)``.

    The roots are ``-i/N`` for ``0 < i < N`` with multiplicity ``min(k, i, N - i)``,
    and the constant is fixed by ``H(0) = 1``.

    """
    return _product(
        RationalPolynomial([1, Fraction(spec.n, i)]) ** spec.multiplicity(i)
        for i in range(1, spec.n)
    )


def hilbert_k3(h2: Number) -> RationalPolynomial:
    """Return ``h^2/2 z^2 + 2`` for a K3 surface polarized by ``h``."""
    h2 = Fraction(h2)
    if h2 <= 0:
        raise InvalidChernData(f"The polarization needs h^2 > 0, got {h2}.")
    return RationalPolynomial([2, 0, h2 / 2])


def hilbert_product(*polynomials: RationalPolynomial) -> RationalPolynomial:
    """Return the Hilbert polynomial of a product of varieties."""
    if not polynomials:
        raise InvalidInput("A product needs at least one factor.")
    return _product(polynomials)


def _product(polynomials) -> RationalPolynomial:
    result = RationalPolynomial([1])
    for polynomial in polynomials:
        result = result * polynomial
    return result


def closed_form_roots(chern: ChernData) -> ClosedFormRoots:
    """Return the roots of the Hilbert polynomial of ``chern`` in closed form."""
    if isinstance(chern, Curve):
        if chern.genus == 1:
            raise GenusOneCurve()
        return ClosedFormRoots((), (-HALF,))
    if isinstance(chern, Surface):
        radicand = (chern.c1sq - 2 * chern.c2) / (3 * chern.c1sq)
        return ClosedFormRoots(((-HALF, radicand),))
    if isinstance(chern, Threefold):
        radicand = 1 - 2 * chern.c1c2 / chern.c1cube
        return ClosedFormRoots(((-HALF, radicand),), (-HALF,))
    raise InvalidChernData(f"No closed form roots for {chern!r}.")


def serre_check(p: RationalPolynomial, dim: int) -> bool:
    """Return whether ``p(-1 - z) = (-1)**dim p(z)`` exactly."""
    return p.reflect() == p.scale((-1) ** dim)


def construct(text: str) -> Construction:
    """Build a polynomial from a constructor spec such as ``projective:3``.

    Recognized specs are ``projective:n``, ``grassmannian:k,N``, ``curve:g``,
    ``surface:c1sq,c2``, ``threefold:c1cube,c1c2`` and ``k3:h2``.

    :raises: :class:`.MalformedInput` for an unknown or malformed spec.

    """
    name, _, arguments = text.partition(":")
    name = name.strip().lower()
    values = parse_rational_list(arguments, text) if arguments.strip() else []
    expected = {
        "projective": 1,
        "grassmannian": 2,
        "curve": 1,
        "surface": 2,
        "threefold": 2,
        "k3": 1,
    }
    if name not in expected:
        raise MalformedInput(f"unknown constructor {name!r}.", text)
    if len(values) != expected[name]:
        raise MalformedInput(
            f"constructor {name!r} takes {expected[name]} parameter(s).", text
        )
    if name in {"projective", "grassmannian", "curve"}:
        if any(value.denominator != 1 for value in values):
            raise MalformedInput(f"constructor {name!r} takes integers.", text)
        values = [int(value) for value in values]
    if name == "projective":
        (n,) = values
        return Construction(name, {"n": str(n)}, hilbert_projective(n), n)
    if name == "grassmannian":
        spec = GrassmannianSpec(*values)
        parameters = {"k": str(spec.k), "N": str(spec.n)}
        return Construction(name, parameters, hilbert_grassmannian(spec), spec.dim)
    if name == "k3":
        (h2,) = values
        return Construction(name, {"h2": str(h2)}, hilbert_k3(h2), 2)
    datum = {"curve": Curve, "surface": Surface, "threefold": Threefold}[name](*values)
    return Construction(name, datum.to_dict(), datum.hilbert(), datum.dim, datum)


def scan_points(family: str, **ranges: Optional[str]) -> List[ChernData]:
    """Return the Chern data of a scan family in ascending range order.

    :param family: One of ``dp``, ``fano3``, ``surface`` and ``threefold``.
    :param ranges: Range texts keyed by ``c1sq``, ``c2``, ``c1cube`` or ``c1c2``.

    Points with ``c1**2 = 0`` or ``c1**3 = 0`` are skipped.

    :raises: :class:`.InvalidRange` for an unknown family, a missing range or a range
        without any usable point.

    """
    if family not in FAMILY_DEFAULTS:
        raise InvalidRange(f"Unknown scan family {family!r}.")
    ranges = {key: value for key, value in ranges.items() if value is not None}
    ranges = {**FAMILY_DEFAULTS[family], **ranges}

    def values(key: str) -> Sequence[Fraction]:
        if key not in ranges:
            raise InvalidRange(f"The {family} scan needs a --{key} range.")
        return parse_range(ranges[key], key)

    if family == "dp":
        grid = [(c1sq, DEL_PEZZO_SUM - c1sq) for c1sq in values("c1sq")]
        kind = Surface
    elif family == "fano3":
        grid = [(c1cube, FANO_THREEFOLD_C1C2) for c1cube in values("c1cube")]
        kind = Threefold
    elif family == "surface":
        grid = [(c1sq, c2) for c1sq in values("c1sq") for c2 in values("c2")]
        kind = Surface
    else:
        grid = [
            (c1cube, c1c2) for c1cube in values("c1cube") for c1c2 in values("c1c2")
        ]
        kind = Threefold
    points = [kind(first, second) for first, second in grid if first != 0]
    if len(points) < len(grid):
        logger.debug(f"Skipped {len(grid) - len(points)} scan point(s) with c1 = 0")
    if not points:
        raise InvalidRange(f"The {family} scan range contains no usable point.")
    return points


def scan_row(datum: ChernData, approximate: bool = False, **options) -> ScanRow:
    """Classify one scan point."""
    verdict = classify_strip(
        datum.hilbert(), datum.dim, approximate=approximate, **options
    )
    return ScanRow(datum, verdict, datum.extremal_ratio())


def scan(family: str, **ranges: Optional[str]) -> Iterator[ScanRow]:
    """Yield :class:`.ScanRow` instances for a scan family in ascending range order.

    .. code-block:: python

        summary = ScanSummary()
        for row in scan("dp"):
            summary.add(row)
        print(summary.ncs)  # 9

    """
    for datum in scan_points(family, **ranges):
        yield scan_row(datum)

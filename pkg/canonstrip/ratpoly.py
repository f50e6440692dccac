"""Provide exact univariate polynomials over the rationals.

Every Hilbert and Ehrhart polynomial handled by canonstrip is a
:class:`.RationalPolynomial`. Coefficients are :class:`fractions.Fraction` instances
stored in ascending degree, so arithmetic never rounds. The module also carries the
Sturm and Cauchy index machinery the root location code relies on.

"""
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from logging import getLogger
from math import gcd as integer_gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .exceptions import InvalidInput, MalformedInput, ZeroPolynomialError
from .util.rational import format_rational, parse_rational

logger = getLogger("canonstrip")

Number = Union[int, Fraction]


class RationalPolynomial:
    """An immutable polynomial with exact rational coefficients.

    Instances are built from ascending coefficients and normalized on construction:
    trailing zero coefficients are stripped, so the zero polynomial has no coefficients
    and degree ``-1``.

    .. code-block:: python

        p = RationalPolynomial([2, 9, 9])  # 9*z**2 + 9*z + 2
        p(Fraction(1, 3))  # Fraction(6, 1)
        p.shift(-1)  # 9*z**2 - 9*z + 2

    """

    __slots__ = ("_coefficients",)

    @classmethod
    def constant(cls, value: Number) -> "RationalPolynomial":
        """Return the constant polynomial ``value``."""
        return cls([value])

    @classmethod
    def monomial(cls, degree: int, coefficient: Number = 1) -> "RationalPolynomial":
        """Return ``coefficient * z**degree``."""
        return cls([0] * degree + [coefficient])

    @classmethod
    def from_roots(
        cls, roots: Iterable[Number], leading: Number = 1
    ) -> "RationalPolynomial":
        """Return ``leading * prod(z - root)`` over the given rational roots."""
        result = cls.constant(leading)
        for root in roots:
            result = result * cls([-Fraction(root), 1])
        return result

    @classmethod
    def from_strings(
        cls, coefficients: Sequence[str], source: Optional[str] = None
    ) -> "RationalPolynomial":
        """Parse ascending ``"num/den"`` coefficient strings.

        :raises: :class:`.MalformedInput` when a coefficient is not a rational.

        """
        return cls(parse_rational(value, source) for value in coefficients)

    @classmethod
    def from_dict(cls, data: Dict, source: Optional[str] = None):
        """Parse the ``{"coeffs": [...]}`` serialization."""
        if not isinstance(data, dict) or not isinstance(data.get("coeffs"), list):
            raise MalformedInput('expected an object with a "coeffs" list.', source)
        return cls.from_strings(data["coeffs"], source)

    def __init__(self, coefficients: Iterable[Number] = ()):
        """Initialize a :class:`.RationalPolynomial` instance.

        :param coefficients: The coefficients in ascending degree. Integers and
            :class:`fractions.Fraction` instances are accepted.

        """
        values = [Fraction(value) for value in coefficients]
        while values and values[-1] == 0:
            values.pop()
        self._coefficients = tuple(values)

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        """Return the coefficients in ascending degree."""
        return self._coefficients

    @property
    def degree(self) -> int:
        """Return the degree, ``-1`` for the zero polynomial."""
        return len(self._coefficients) - 1

    @property
    def leading(self) -> Fraction:
        """Return the leading coefficient, ``0`` for the zero polynomial."""
        return self._coefficients[-1] if self._coefficients else Fraction(0)

    @property
    def is_zero(self) -> bool:
        """Return whether this is the zero polynomial."""
        return not self._coefficients

    def __bool__(self) -> bool:
        """Return ``False`` for the zero polynomial."""
        return not self.is_zero

    def __eq__(self, other) -> bool:
        """Check coefficient-wise equality."""
        if isinstance(other, RationalPolynomial):
            return self._coefficients == other._coefficients
        if isinstance(other, (int, Fraction)):
            return self._coefficients == RationalPolynomial([other])._coefficients
        return NotImplemented

    def __hash__(self) -> int:
        """Return the hash of the coefficients."""
        return hash(self._coefficients)

    def __repr__(self) -> str:
        """Return an object initialization representation of the instance."""
        values = ", ".join(f"'{format_rational(value)}'" for value in self)
        return f"{self.__class__.__name__}.from_strings([{values}])"

    def __str__(self) -> str:
        """Return the polynomial in ``z`` with descending powers."""
        if self.is_zero:
            return "0"
        terms = []
        for power in range(self.degree, -1, -1):
            value = self._coefficients[power]
            if value == 0:
                continue
            sign = "-" if value < 0 else "+"
            magnitude = abs(value)
            if power == 0:
                body = str(magnitude)
            else:
                variable = "z" if power == 1 else f"z**{power}"
                body = variable if magnitude == 1 else f"{magnitude}*{variable}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = f"-{first_body}" if first_sign == "-" else first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def __iter__(self):
        """Iterate over the coefficients in ascending degree."""
        return iter(self._coefficients)

    def __neg__(self) -> "RationalPolynomial":
        """Return ``-self``."""
        return RationalPolynomial(-value for value in self)

    def __add__(self, other) -> "RationalPolynomial":
        """Return ``self + other``."""
        other = _coerce(other)
        if other is None:
            return NotImplemented
        size = max(len(self._coefficients), len(other._coefficients))
        left = self._coefficients + (Fraction(0),) * (size - len(self._coefficients))
        right = other._coefficients + (Fraction(0),) * (
            size - len(other._coefficients)
        )
        return RationalPolynomial(a + b for a, b in zip(left, right))

    __radd__ = __add__

    def __sub__(self, other) -> "RationalPolynomial":
        """Return ``self - other``."""
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalPolynomial":
        """Return ``other - self``."""
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RationalPolynomial":
        """Return ``self * other``."""
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RationalPolynomial()
        product = [Fraction(0)] * (self.degree + other.degree + 1)
        for i, a in enumerate(self._coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other._coefficients):
                product[i + j] += a * b
        return RationalPolynomial(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RationalPolynomial":
        """Return ``self ** exponent`` for a nonnegative integer exponent."""
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        result = RationalPolynomial([1])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __call__(self, x: Number) -> Fraction:
        """Evaluate the polynomial at ``x`` (see :meth:`.evaluate`)."""
        return self.evaluate(x)

    def evaluate(self, x: Number) -> Fraction:
        """Return the exact value at the rational ``x`` by Horner's rule."""
        x = Fraction(x)
        result = Fraction(0)
        for value in reversed(self._coefficients):
            result = result * x + value
        return result

    def scale(self, factor: Number) -> "RationalPolynomial":
        """Return ``factor * self``."""
        factor = Fraction(factor)
        return RationalPolynomial(value * factor for value in self)

    def compose(self, inner: "RationalPolynomial") -> "RationalPolynomial":
        """Return ``self(inner(z))``."""
        result = RationalPolynomial()
        for value in reversed(self._coefficients):
            result = result * inner + value
        return result

    def shift(self, offset: Number) -> "RationalPolynomial":
        """Return the polynomial ``z -> self(z + offset)``.

        ``p.shift(-n)`` is ``p(z - n)``.

        """
        return self.compose(RationalPolynomial([offset, 1]))

    def reflect_about(self, center: Number) -> "RationalPolynomial":
        """Return the polynomial ``z -> self(2 * center - z)``."""
        return self.compose(RationalPolynomial([2 * Fraction(center), -1]))

    def reflect(self) -> "RationalPolynomial":
        """Return the polynomial ``z -> self(-1 - z)``, the mirror about ``-1/2``."""
        return self.reflect_about(Fraction(-1, 2))

    def negate_variable(self) -> "RationalPolynomial":
        """Return the polynomial ``z -> self(-z)``."""
        return RationalPolynomial(
            -value if power % 2 else value for power, value in enumerate(self)
        )

    def derivative(self) -> "RationalPolynomial":
        """Return the formal derivative."""
        return RationalPolynomial(
            power * value for power, value in enumerate(self) if power
        )

    def monic(self) -> "RationalPolynomial":
        """Return the polynomial divided by its leading coefficient."""
        if self.is_zero:
            raise ZeroPolynomialError("monic")
        return self.scale(1 / self.leading)

    def content(self) -> Fraction:
        """Return the positive rational ``c`` such that ``self / c`` is primitive.

        A primitive polynomial has coprime integer coefficients; its sign is kept.

        """
        if self.is_zero:
            return Fraction(0)
        denominator = reduce(
            lambda a, b: a * b // integer_gcd(a, b),
            (value.denominator for value in self),
        )
        numerator = reduce(
            integer_gcd,
            (abs(value * denominator).numerator for value in self),
        )
        return Fraction(numerator, denominator)

    def primitive(self) -> "RationalPolynomial":
        """Return the primitive integer polynomial with the same sign and roots."""
        if self.is_zero:
            return self
        return self.scale(1 / self.content())

    def sign_at(self, x: Number) -> int:
        """Return the sign of the value at ``x``."""
        value = self.evaluate(x)
        return (value > 0) - (value < 0)

    def sign_at_infinity(self, positive: bool = True) -> int:
        """Return the sign of the polynomial as ``z`` tends to ``+inf`` or ``-inf``."""
        if self.is_zero:
            return 0
        sign = 1 if self.leading > 0 else -1
        if not positive and self.degree % 2:
            sign = -sign
        return sign

    def to_strings(self) -> List[str]:
        """Return ascending ``"num/den"`` coefficient strings."""
        return [format_rational(value) for value in self]

    def to_dict(self) -> Dict[str, List[str]]:
        """Return the ``{"coeffs": [...]}`` serialization."""
        return {"coeffs": self.to_strings()}


def _coerce(value) -> Optional[RationalPolynomial]:
    if isinstance(value, RationalPolynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return RationalPolynomial([value])
    return None


@dataclass(frozen=True)
class Interval:
    """A real interval with rational endpoints.

    ``None`` for an endpoint means the interval is unbounded on that side. Closed flags
    are ignored for unbounded sides.

    """

    low: Optional[Fraction] = None
    high: Optional[Fraction] = None
    low_closed: bool = False
    high_closed: bool = False

    @classmethod
    def open(cls, low: Optional[Number], high: Optional[Number]) -> "Interval":
        """Return the open interval ``(low, high)``."""
        return cls(low, high, False, False)

    @classmethod
    def closed(cls, low: Number, high: Number) -> "Interval":
        """Return the closed interval ``[low, high]``."""
        return cls(low, high, True, True)

    @classmethod
    def point(cls, value: Number) -> "Interval":
        """Return the degenerate interval ``[value, value]``."""
        return cls.closed(value, value)

    def __post_init__(self):
        """Normalize endpoints to fractions and validate ``low <= high``."""
        for name in ("low", "high"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, Fraction(value))
        if self.low is not None and self.high is not None and self.low > self.high:
            raise InvalidInput(
                f"Interval bounds out of order: {self.low} > {self.high}."
            )


def add(p: RationalPolynomial, q: RationalPolynomial) -> RationalPolynomial:
    """Return ``p + q``."""
    return p + q


def sub(p: RationalPolynomial, q: RationalPolynomial) -> RationalPolynomial:
    """Return ``p - q``."""
    return p - q


def mul(p: RationalPolynomial, q: RationalPolynomial) -> RationalPolynomial:
    """Return ``p * q``."""
    return p * q


def scale(p: RationalPolynomial, factor: Number) -> RationalPolynomial:
    """Return ``factor * p``."""
    return p.scale(factor)


def evaluate(p: RationalPolynomial, x: Number) -> Fraction:
    """Return ``p(x)`` exactly."""
    return p.evaluate(x)


def shift(p: RationalPolynomial, offset: Number) -> RationalPolynomial:
    """Return ``z -> p(z + offset)``."""
    return p.shift(offset)


def reflect(p: RationalPolynomial) -> RationalPolynomial:
    """Return ``z -> p(-1 - z)``."""
    return p.reflect()


def derivative(p: RationalPolynomial) -> RationalPolynomial:
    """Return ``p'``."""
    return p.derivative()


def divide(
    dividend: RationalPolynomial, divisor: RationalPolynomial
) -> Tuple[RationalPolynomial, RationalPolynomial]:
    """Return the quotient and remainder of Euclidean division.

    :raises: :class:`.ZeroPolynomialError` when ``divisor`` is zero.

    """
    if divisor.is_zero:
        raise ZeroPolynomialError("Division")
    remainder = list(dividend.coefficients)
    quotient = [Fraction(0)] * max(dividend.degree - divisor.degree + 1, 0)
    lead = divisor.leading
    for power in range(dividend.degree - divisor.degree, -1, -1):
        factor = remainder[power + divisor.degree] / lead
        quotient[power] = factor
        if factor:
            for offset, value in enumerate(divisor.coefficients):
                remainder[power + offset] -= factor * value
    return RationalPolynomial(quotient), RationalPolynomial(remainder)


def exact_quotient(
    dividend: RationalPolynomial, divisor: RationalPolynomial
) -> RationalPolynomial:
    """Return ``dividend / divisor`` when the division leaves no remainder.

    :raises: :class:`ValueError` when ``divisor`` does not divide ``dividend``.

    """
    quotient, remainder = divide(dividend, divisor)
    if remainder:
        raise ValueError(f"{divisor} does not divide {dividend}")
    return quotient


def gcd(p: RationalPolynomial, q: RationalPolynomial) -> RationalPolynomial:
    """Return the monic greatest common divisor of ``p`` and ``q``.

    :raises: :class:`.ZeroPolynomialError` when both inputs are zero.

    """
    if p.is_zero and q.is_zero:
        raise ZeroPolynomialError("gcd")
    a, b = p.primitive(), q.primitive()
    while b:
        a, b = b, divide(a, b)[1].primitive()
    return a.monic()


def squarefree_part(p: RationalPolynomial) -> RationalPolynomial:
    """Return the monic polynomial with the distinct roots of ``p``, each simple."""
    if p.is_zero:
        raise ZeroPolynomialError("squarefree_part")
    if p.degree < 1:
        return RationalPolynomial([1])
    return exact_quotient(p, gcd(p, p.derivative())).monic()


def squarefree_decomposition(
    p: RationalPolynomial,
) -> List[Tuple[RationalPolynomial, int]]:
    """Return Yun's decomposition of ``p`` as ``(factor, multiplicity)`` pairs.

    The factors are monic, squarefree and pairwise coprime, and ``p`` equals its leading
    coefficient times the product of ``factor ** multiplicity``. Constant factors are
    omitted.

    """
    if p.is_zero:
        raise ZeroPolynomialError("squarefree_decomposition")
    if p.degree < 1:
        return []
    factors = []
    derivative_ = p.derivative()
    common = gcd(p, derivative_)
    b = exact_quotient(p, common)
    c = exact_quotient(derivative_, common)
    d = c - b.derivative()
    multiplicity = 1
    while b.degree > 0:
        a = gcd(b, d)
        if a.degree > 0:
            factors.append((a.monic(), multiplicity))
        b = exact_quotient(b, a)
        c = exact_quotient(d, a)
        d = c - b.derivative()
        multiplicity += 1
    return factors


def interpolate(points: Sequence[Tuple[Number, Number]]) -> RationalPolynomial:
    """Return the unique polynomial of degree below ``len(points)`` through ``points``.

    :param points: ``(x, y)`` pairs with pairwise distinct ``x``.

    """
    nodes = [Fraction(x) for x, _ in points]
    if len(set(nodes)) != len(nodes):
        raise InvalidInput("Interpolation nodes must be pairwise distinct.")
    result = RationalPolynomial()
    for i, (x_i, y_i) in enumerate(points):
        basis = RationalPolynomial([1])
        denominator = Fraction(1)
        for j, x_j in enumerate(nodes):
            if i != j:
                basis = basis * RationalPolynomial([-x_j, 1])
                denominator *= Fraction(x_i) - x_j
        result = result + basis.scale(Fraction(y_i) / denominator)
    return result


def _remainder_sequence(
    first: RationalPolynomial, second: RationalPolynomial
) -> List[RationalPolynomial]:
    """Return ``first, second, -rem, ...`` with positive content removed."""
    chain = [first.primitive(), second.primitive()]
    while chain[-1]:
        remainder = divide(chain[-2], chain[-1])[1]
        if not remainder:
            break
        chain.append((-remainder).primitive())
    return [member for member in chain if member]


def sturm_sequence(p: RationalPolynomial) -> List[RationalPolynomial]:
    """Return the Sturm chain of the squarefree part of ``p``.

    Each member is scaled by a positive constant to keep integer coefficients small;
    sign changes are unaffected.

    """
    base = squarefree_part(p)
    chain = _remainder_sequence(base, base.derivative())
    logger.debug(f"Sturm chain of length {len(chain)} for degree {base.degree}")
    return chain


def sign_changes(signs: Iterable[int]) -> int:
    """Return the number of sign changes in ``signs`` after dropping zeros."""
    changes = 0
    previous = 0
    for sign in signs:
        if sign == 0:
            continue
        if previous and sign != previous:
            changes += 1
        previous = sign
    return changes


def _variations(chain: Sequence[RationalPolynomial], x: Optional[Fraction], side: int):
    if x is None:
        return sign_changes(member.sign_at_infinity(side > 0) for member in chain)
    return sign_changes(member.sign_at(x) for member in chain)


def cauchy_index(
    numerator: RationalPolynomial, denominator: RationalPolynomial
) -> int:
    """Return the Cauchy index of ``numerator / denominator`` over the real line.

    The index counts jumps from ``-inf`` to ``+inf`` minus jumps from ``+inf`` to
    ``-inf``. It is computed from the generalized Sturm sequence of the pair.

    """
    if denominator.is_zero:
        raise ZeroPolynomialError("cauchy_index")
    if numerator.is_zero:
        return 0
    chain = _remainder_sequence(denominator, numerator)
    return _variations(chain, None, -1) - _variations(chain, None, 1)


def count_real_roots(p: RationalPolynomial, interval: Optional[Interval] = None) -> int:
    """Return the number of distinct real roots of ``p`` in ``interval``.

    :param p: A nonzero polynomial.
    :param interval: The range to count in. ``None`` counts over the whole real line
        (default: ``None``).

    :raises: :class:`.ZeroPolynomialError` when ``p`` is zero.

    """
    if p.is_zero:
        raise ZeroPolynomialError("count_real_roots")
    if interval is None:
        interval = Interval()
    base = squarefree_part(p)
    if base.degree < 1:
        return 0
    low, high = interval.low, interval.high
    if low is not None and low == high:
        return int(interval.low_closed and interval.high_closed and not base(low))
    chain = sturm_sequence(base)
    # V(low) - V(high) counts the roots in (low, high].
    count = _variations(chain, low, -1) - _variations(chain, high, 1)
    if high is not None and not base(high):
        count -= 1
        if interval.high_closed:
            count += 1
    if low is not None and interval.low_closed and not base(low):
        count += 1
    return count

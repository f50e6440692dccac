"""canonstrip exception classes.

Includes three main families: :class:`.InvalidInput` for when a caller hands over data
that cannot be processed, :class:`.ConsistencyError` for when an internal self-check
fails, and :class:`.LemmaSuiteFailure` for when a randomized verification suite finds a
counterexample. All of these classes extend :class:`.CanonStripException`.

"""
from typing import TYPE_CHECKING, List, Optional, Union

if TYPE_CHECKING:  # pragma: no cover
    from fractions import Fraction

    from .ratpoly import RationalPolynomial
    from .rootloc import RootReport


class CanonStripException(Exception):
    """The base canonstrip Exception that all other exception classes extend."""


class InvalidInput(CanonStripException):
    """Indicate that the caller supplied data that cannot be processed."""


class ZeroPolynomialError(InvalidInput):
    """Indicate that an operation received the zero polynomial."""

    def __init__(self, operation: str):
        """Initialize a :class:`.ZeroPolynomialError` instance.

        :param operation: The name of the operation that rejected the input.

        """
        super().__init__(f"{operation} is undefined for the zero polynomial.")


class GenusOneCurve(InvalidInput):
    """Indicate that the anticanonical Hilbert polynomial of a genus 1 curve was asked.

    The polynomial vanishes identically, so every downstream verdict is undefined.

    """

    def __init__(self):
        """Initialize a :class:`.GenusOneCurve` instance."""
        super().__init__(
            "A genus 1 curve has the zero anticanonical Hilbert polynomial. Use an"
            " embedded section instead, for example ``embedded --ambient projective:2"
            " --s 1`` for a plane cubic."
        )


class InvalidChernData(InvalidInput):
    """Indicate Chern numbers outside the domain of the Riemann-Roch formulas."""


class InvalidGrassmannian(InvalidInput):
    """Indicate a Grassmannian G(k, N) with parameters outside ``N >= 2k >= 2``."""

    def __init__(self, k: int, n: int):
        """Initialize an :class:`.InvalidGrassmannian` instance."""
        super().__init__(
            f"The Grassmannian G({k},{n}) is not supported: parameters must satisfy"
            " N >= 2k >= 2. Use the isomorphism G(k,N) = G(N-k,N) when N < 2k."
        )


class InvalidRange(InvalidInput):
    """Indicate an empty or malformed parameter range."""


class InvalidSectionMultiple(InvalidInput):
    """Indicate an anticanonical multiple ``s`` smaller than 1."""

    def __init__(self, multiple: "Fraction"):
        """Initialize an :class:`.InvalidSectionMultiple` instance."""
        super().__init__(f"The section multiple must be at least 1, got {multiple}.")


class DegeneratePolytope(InvalidInput):
    """Indicate a vertex set whose affine hull is not full-dimensional."""


class DuplicateVertex(InvalidInput):
    """Indicate that a vertex was listed more than once."""

    def __init__(self, vertex: tuple):
        """Initialize a :class:`.DuplicateVertex` instance."""
        super().__init__(f"The vertex {list(vertex)} is listed more than once.")


class NotAVertex(InvalidInput):
    """Indicate that a listed point lies in the convex hull of the other points."""

    def __init__(self, point: tuple):
        """Initialize a :class:`.NotAVertex` instance."""
        super().__init__(
            f"The point {list(point)} is not a vertex of the convex hull of the listed"
            " points."
        )


class SubsetLimitExceeded(InvalidInput):
    """Indicate that facet enumeration would visit too many vertex subsets."""

    def __init__(self, subsets: int, cap: int):
        """Initialize a :class:`.SubsetLimitExceeded` instance."""
        super().__init__(
            f"Facet enumeration needs {subsets} vertex subsets, which exceeds the"
            f" configured cap of {cap} (option facet_subset_cap)."
        )


class MalformedInput(InvalidInput):
    """Indicate a file or string that does not follow the expected format."""

    def __init__(
        self, message: str, source: Optional[str] = None, line: Optional[int] = None
    ):
        """Initialize a :class:`.MalformedInput` instance.

        :param message: A description of the problem.
        :param source: The file or argument the data came from, if any.
        :param line: The 1-based line number the problem was found at, if known.

        """
        self.source = source
        self.line = line
        location = ""
        if source is not None:
            location = f"{source}"
            if line is not None:
                location += f", line {line}"
            location += ": "
        super().__init__(f"{location}{message}")


class ConvergenceError(CanonStripException):
    """Indicate that the approximate root finder did not converge."""

    def __init__(self, cap: int, degree: int):
        """Initialize a :class:`.ConvergenceError` instance."""
        self.cap = cap
        super().__init__(
            f"Approximate roots of a degree {degree} polynomial did not converge within"
            f" the iteration cap of {cap} (option approx_iteration_cap)."
        )


class ConsistencyError(CanonStripException):
    """Indicate that an internal self-check failed.

    This signals a bug in canonstrip rather than a problem with the input.

    """


class LemmaFailureItem:
    """Represents a single failed case of the section lemma suite."""

    @property
    def error_message(self) -> str:
        """Get the completed error message string."""
        return (
            f"seed {self.seed}, degree {self.degree}, s={self.multiple}: roots of"
            f" {self.polynomial} off the line Re z = {self.report.line}"
            f" (left {self.report.left_count}, on {self.report.on_count},"
            f" right {self.report.right_count})"
        )

    def __init__(
        self,
        seed: int,
        degree: int,
        multiple: "Fraction",
        polynomial: "RationalPolynomial",
        report: "RootReport",
    ):
        """Initialize a :class:`.LemmaFailureItem` instance.

        :param seed: The case seed that reproduces the ambient polynomial.
        :param degree: The degree of the ambient polynomial.
        :param multiple: The shift ``s`` the case was checked at.
        :param polynomial: The ambient polynomial.
        :param report: The root report of the restricted polynomial.

        """
        self.seed = seed
        self.degree = degree
        self.multiple = multiple
        self.polynomial = polynomial
        self.report = report

    def __eq__(self, other: Union["LemmaFailureItem", object]):
        """Check for equality."""
        if isinstance(other, LemmaFailureItem):
            return (self.seed, self.multiple, self.polynomial) == (
                other.seed,
                other.multiple,
                other.polynomial,
            )
        return super().__eq__(other)

    def __repr__(self) -> str:
        """Return an object initialization representation of the instance."""
        return (
            f"{self.__class__.__name__}(seed={self.seed!r}, degree={self.degree!r},"
            f" multiple={self.multiple!r}, polynomial={self.polynomial!r},"
            f" report={self.report!r})"
        )

    def __str__(self):
        """Get the message returned from str(self)."""
        return self.error_message


class LemmaSuiteFailure(CanonStripException):
    """Container for the failed cases of a section lemma suite run."""

    def __init__(self, items: List[LemmaFailureItem], summary=None):
        """Initialize a :class:`.LemmaSuiteFailure` instance.

        :param items: A list of :class:`.LemmaFailureItem` instances.
        :param summary: The suite summary, when the run completed.

        """
        self.items = items
        self.summary = summary
        super().__init__(*self.items)

    def __str__(self):
        """Get the message returned from str(self)."""
        failures = "\n".join(str(item) for item in self.items)
        return f"{len(self.items)} section lemma case(s) failed:\n{failures}"

"""Reference values computed independently of the canonstrip engines."""
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import List, Tuple

from canonstrip.ratpoly import RationalPolynomial


def weyl_dimension(k: int, n: int, degree: int) -> Fraction:
    """Return ``dim H^0(G(k, N), O(degree))`` by the Weyl dimension formula.

    The sections of ``O(degree)`` form the irreducible representation of ``GL_N`` with
    highest weight ``(degree, ..., degree, 0, ..., 0)`` with ``k`` entries ``degree``.

    """
    weights = [degree] * k + [0] * (n - k)
    value = Fraction(1)
    for i, j in combinations(range(n), 2):
        value *= Fraction(weights[i] - weights[j] + j - i, j - i)
    return value


def grassmannian_values(k: int, n: int, count: int) -> List[Fraction]:
    """Return ``chi(-mK)`` for ``m = 0..count-1``; ``-K`` is ``O(N)``."""
    return [weyl_dimension(k, n, n * m) for m in range(count)]


def projective_values(n: int, count: int) -> List[int]:
    """Return ``chi(P^n, O((n + 1) m))``: the monomials of that degree."""
    return [comb((n + 1) * m + n, n) for m in range(count)]


@dataclass(frozen=True)
class Root:
    """A root ``real + imag i``; a nonzero ``imag`` stands for a conjugate pair."""

    real: Fraction
    imag: Fraction
    multiplicity: int = 1

    def factor(self) -> RationalPolynomial:
        if self.imag == 0:
            base = RationalPolynomial([-self.real, 1])
        else:
            base = RationalPolynomial(
                [self.real**2 + self.imag**2, -2 * self.real, 1]
            )
        return base**self.multiplicity

    @property
    def count(self) -> int:
        return self.multiplicity * (1 if self.imag == 0 else 2)


@dataclass(frozen=True)
class Constellation:
    """A polynomial assembled from known roots."""

    roots: Tuple[Root, ...]
    leading: Fraction = Fraction(1)

    def polynomial(self) -> RationalPolynomial:
        result = RationalPolynomial([self.leading])
        for root in self.roots:
            result = result * root.factor()
        return result

    def expected(self, line: Fraction) -> Tuple[int, int, int]:
        """Return the left, on and right counts relative to ``Re z = line``."""
        left = sum(root.count for root in self.roots if root.real < line)
        on = sum(root.count for root in self.roots if root.real == line)
        right = sum(root.count for root in self.roots if root.real > line)
        return left, on, right


def random_constellation(
    rng: random.Random, lines: List[Fraction], max_degree: int = 10
) -> Constellation:
    """Return a constellation whose real parts often sit exactly on ``lines``.

    Mirror images about a line are favored so the exact axis handling is exercised, as
    are repeated roots. The degree stays below ``max_degree + 6``.

    """
    roots = []
    target = rng.randint(1, max_degree)
    while sum(root.count for root in roots) < target:
        choice = rng.random()
        if choice < 0.35:
            real = rng.choice(lines)
        else:
            real = Fraction(rng.randint(-24, 24), rng.choice([1, 2, 3, 4, 6, 12]))
        imag = Fraction(0)
        if rng.random() < 0.5:
            imag = Fraction(rng.randint(1, 12), rng.choice([1, 2, 3, 4]))
        multiplicity = 2 if rng.random() < 0.15 else 1
        roots.append(Root(real, imag, multiplicity))
        if rng.random() < 0.25:
            center = rng.choice(lines)
            roots.append(Root(2 * center - real, imag))
    leading = Fraction(rng.choice([-3, -1, 1, 2, 5]), rng.choice([1, 2, 7]))
    return Constellation(tuple(roots), leading)

"""Provide lattice polytopes and their facet descriptions."""
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from logging import getLogger
from math import comb, gcd
from typing import Optional, Sequence, Tuple

import numpy as np
import sympy

from ..exceptions import (
    DegeneratePolytope,
    DuplicateVertex,
    InvalidInput,
    NotAVertex,
    SubsetLimitExceeded,
)

logger = getLogger("canonstrip")

DEFAULT_SUBSET_CAP = 10_000_000

Point = Tuple[int, ...]


@dataclass(frozen=True)
class Facet:
    """The half space ``normal . x <= offset`` with a primitive integer normal."""

    normal: Point
    offset: int

    def contains(self, point: Sequence[int]) -> bool:
        """Return whether ``point`` lies on the facet hyperplane."""
        return sum(a * b for a, b in zip(self.normal, point)) == self.offset


@dataclass(frozen=True)
class FacetRep:
    """The half space description of a full-dimensional lattice polytope."""

    facets: Tuple[Facet, ...]

    def normals(self) -> np.ndarray:
        """Return the facet normals as an integer matrix, one row per facet."""
        return np.array([facet.normal for facet in self.facets], dtype=np.int64)

    def offsets(self) -> np.ndarray:
        """Return the facet offsets as an integer vector."""
        return np.array([facet.offset for facet in self.facets], dtype=np.int64)

    def __len__(self) -> int:
        """Return the number of facets."""
        return len(self.facets)


class LatticePolytope:
    """A full-dimensional polytope given by its integer vertices.

    Construction checks the vertex count, coordinate lengths, duplicates and full
    dimensionality. Whether every listed point is a vertex is checked by
    :func:`.facet_representation`.

    .. code-block:: python

        triangle = LatticePolytope(2, [(1, 0), (0, 1), (-1, -1)], name="P2")
        len(triangle.facet_rep)  # 3

    """

    def __init__(
        self, dim: int, vertices: Sequence[Sequence[int]], name: Optional[str] = None
    ):
        """Initialize a :class:`.LatticePolytope` instance.

        :param dim: The ambient and polytope dimension ``d``.
        :param vertices: At least ``d + 1`` integer points of length ``d``.
        :param name: An optional label, for example a catalog entry name.

        """
        if int(dim) != dim or dim < 1:
            raise InvalidInput(f"The dimension must be a positive integer, got {dim}.")
        self.dim = int(dim)
        self.name = name
        points = []
        seen = set()
        for vertex in vertices:
            point = tuple(vertex)
            if len(point) != self.dim or any(
                isinstance(value, bool) or int(value) != value for value in point
            ):
                raise InvalidInput(
                    f"The vertex {list(point)} is not an integer point of length"
                    f" {self.dim}."
                )
            point = tuple(int(value) for value in point)
            if point in seen:
                raise DuplicateVertex(point)
            seen.add(point)
            points.append(point)
        if len(points) < self.dim + 1:
            raise DegeneratePolytope(
                f"A {self.dim}-dimensional polytope needs at least {self.dim + 1}"
                f" vertices, got {len(points)}."
            )
        self.vertices: Tuple[Point, ...] = tuple(points)
        differences = sympy.Matrix(
            [[a - b for a, b in zip(point, points[0])] for point in points[1:]]
        )
        if differences.rank() < self.dim:
            raise DegeneratePolytope(
                f"The vertices span an affine space of dimension {differences.rank()},"
                f" not {self.dim}."
            )

    def __eq__(self, other) -> bool:
        """Check whether both polytopes have the same dimension and vertex set."""
        if isinstance(other, LatticePolytope):
            return self.dim == other.dim and set(self.vertices) == set(other.vertices)
        return NotImplemented

    def __hash__(self) -> int:
        """Return the hash of the dimension and vertex set."""
        return hash((self.dim, frozenset(self.vertices)))

    def __repr__(self) -> str:
        """Return an object initialization representation of the instance."""
        vertices = [list(vertex) for vertex in self.vertices]
        return (
            f"{self.__class__.__name__}(dim={self.dim!r}, vertices={vertices!r},"
            f" name={self.name!r})"
        )

    @cached_property
    def facet_rep(self) -> "FacetRep":
        """Return the facet representation with the default subset cap."""
        return facet_representation(self)

    def to_dict(self):
        """Return the JSON polytope file mapping."""
        data = {"dim": self.dim, "vertices": [list(vertex) for vertex in self.vertices]}
        if self.name is not None:
            data = {"name": self.name, **data}
        return data


def _primitive(vector: Sequence) -> Optional[Point]:
    """Scale a rational vector to coprime integers, keeping its direction."""
    denominator = 1
    for value in vector:
        denominator = denominator * value.q // gcd(denominator, value.q)
    integers = [int(value * denominator) for value in vector]
    divisor = 0
    for value in integers:
        divisor = gcd(divisor, value)
    if divisor == 0:
        return None
    return tuple(value // divisor for value in integers)


def _hyperplane(points: Sequence[Point]) -> Optional[Point]:
    """Return a primitive normal of the hyperplane through ``points``, if unique."""
    base = points[0]
    rows = [[a - b for a, b in zip(point, base)] for point in points[1:]]
    space = sympy.Matrix(rows).nullspace()
    if len(space) != 1:
        return None
    return _primitive(list(space[0]))


def facet_representation(
    polytope: LatticePolytope, subset_cap: int = DEFAULT_SUBSET_CAP
) -> FacetRep:
    """Return the facets of ``polytope`` as primitive outward half spaces.

    Every ``d``-subset of vertices that spans a hyperplane with all vertices on one
    closed side contributes a facet. The work grows like ``C(#vertices, d)``.

    :param polytope: The polytope.
    :param subset_cap: The largest number of subsets visited (default: ``10**7``).

    :raises: :class:`.SubsetLimitExceeded` beyond the cap and :class:`.NotAVertex` when
        a listed point is not a vertex.

    """
    d = polytope.dim
    vertices = polytope.vertices
    subsets = comb(len(vertices), d)
    if subsets > subset_cap:
        raise SubsetLimitExceeded(subsets, subset_cap)
    matrix = np.array(vertices, dtype=np.int64)
    found = set()
    for subset in combinations(vertices, d):
        normal = (1,) if d == 1 else _hyperplane(subset)
        if normal is None:
            continue
        offset = sum(a * b for a, b in zip(normal, subset[0]))
        values = matrix @ np.array(normal, dtype=np.int64)
        if np.all(values <= offset):
            found.add(Facet(normal, offset))
        elif np.all(values >= offset):
            found.add(Facet(tuple(-value for value in normal), -offset))
    facets = tuple(sorted(found, key=lambda facet: (facet.normal, facet.offset)))
    logger.debug(f"Found {len(facets)} facets from {subsets} vertex subsets")
    for vertex in vertices:
        normals = [facet.normal for facet in facets if facet.contains(vertex)]
        if not normals or sympy.Matrix(normals).rank() < d:
            raise NotAVertex(vertex)
    return FacetRep(facets)


def facet_vertices(polytope: LatticePolytope, facet: Facet) -> Tuple[Point, ...]:
    """Return the vertices lying on ``facet``."""
    return tuple(vertex for vertex in polytope.vertices if facet.contains(vertex))


def origin_interior(rep: FacetRep) -> bool:
    """Return whether the origin lies strictly inside the polytope."""
    return all(facet.offset > 0 for facet in rep.facets)


def is_reflexive(polytope: LatticePolytope, rep: Optional[FacetRep] = None) -> bool:
    """Return whether the origin is interior and every facet is at distance 1."""
    rep = rep or polytope.facet_rep
    return origin_interior(rep) and all(facet.offset == 1 for facet in rep.facets)


def is_smooth_fan_polytope(
    polytope: LatticePolytope, rep: Optional[FacetRep] = None
) -> bool:
    """Return whether every facet is a unimodular simplex.

    Each facet must carry exactly ``d`` vertices whose matrix has determinant ``+-1``,
    so the cones over the facets form a smooth fan.

    """
    rep = rep or polytope.facet_rep
    for facet in rep.facets:
        on_facet = facet_vertices(polytope, facet)
        if len(on_facet) != polytope.dim:
            return False
        if abs(sympy.Matrix(on_facet).det()) != 1:
            return False
    return True

"""Count lattice points of dilated polytopes and interpolate Ehrhart polynomials."""
from dataclasses import dataclass
from fractions import Fraction
from logging import getLogger
from math import factorial
from typing import Dict, List, Mapping, Optional, Tuple

import numpy as np

from ..exceptions import ConsistencyError, InvalidInput
from ..ratpoly import RationalPolynomial, interpolate
from ..rootloc import StripVerdict, classify_strip
from .polytope import FacetRep, LatticePolytope, origin_interior

logger = getLogger("canonstrip")


@dataclass(frozen=True)
class EhrhartResult:
    """An Ehrhart polynomial with the counts it was interpolated and checked on."""

    polynomial: RationalPolynomial
    counts: Tuple[Tuple[int, int], ...]
    verdict: StripVerdict

    @property
    def cl(self) -> bool:
        """Return whether every root lies exactly on ``Re t = -1/2``."""
        return self.verdict.cl


def _box_points(lows: np.ndarray, highs: np.ndarray) -> np.ndarray:
    """Return every integer point of the box, one per row."""
    ranges = [
        np.arange(low, high + 1, dtype=np.int64) for low, high in zip(lows, highs)
    ]
    if not ranges:
        return np.zeros((1, 0), dtype=np.int64)
    mesh = np.meshgrid(*ranges, indexing="ij")
    return np.stack([axis.ravel() for axis in mesh], axis=1)


def dilation_box(polytope: LatticePolytope, t: int) -> Tuple[np.ndarray, np.ndarray]:
    """Return the bounds of the integer box containing ``t * polytope``."""
    vertices = np.array(polytope.vertices, dtype=np.int64)
    return t * vertices.min(axis=0), t * vertices.max(axis=0)


def slab_values(polytope: LatticePolytope, t: int) -> List[int]:
    """Return the first coordinates of the box slabs :func:`.count_slab` counts."""
    low, high = dilation_box(polytope, t)
    return list(range(int(low[0]), int(high[0]) + 1))


def count_slab(
    polytope: LatticePolytope, rep: FacetRep, t: int, first: int, strict: bool = False
) -> int:
    """Count the points of ``t * polytope`` whose first coordinate is ``first``.

    Slabs partition the box, so counts over :func:`.slab_values` add up to the full
    count in any order.

    """
    low, high = dilation_box(polytope, t)
    rest = _box_points(low[1:], high[1:])
    points = np.column_stack([np.full(len(rest), first, dtype=np.int64), rest])
    values = points @ rep.normals().T
    bounds = t * rep.offsets()
    inside = values < bounds if strict else values <= bounds
    return int(np.count_nonzero(np.all(inside, axis=1)))


def _check_dilation(t: int):
    if int(t) != t or t < 0:
        raise InvalidInput(
            f"The dilation factor must be a nonnegative integer, got {t}."
        )


def count_points(
    polytope: LatticePolytope, rep: Optional[FacetRep] = None, t: int = 1
) -> int:
    """Return the number of lattice points of ``t * polytope``.

    The integer box ``[t min v_i, t max v_i]`` is scanned slab by slab and each point
    is tested against every facet inequality ``normal . x <= t offset``.

    """
    _check_dilation(t)
    rep = rep or polytope.facet_rep
    return sum(
        count_slab(polytope, rep, t, first) for first in slab_values(polytope, t)
    )


def count_interior_points(
    polytope: LatticePolytope, rep: Optional[FacetRep] = None, t: int = 1
) -> int:
    """Return the number of lattice points strictly inside ``t * polytope``."""
    _check_dilation(t)
    rep = rep or polytope.facet_rep
    return sum(
        count_slab(polytope, rep, t, first, strict=True)
        for first in slab_values(polytope, t)
    )


def dilations(polytope: LatticePolytope) -> List[int]:
    """Return the dilation factors an Ehrhart computation counts: ``0..d+2``."""
    return list(range(polytope.dim + 3))


def ehrhart_polynomial(
    polytope: LatticePolytope,
    rep: Optional[FacetRep] = None,
    counts: Optional[Mapping[int, int]] = None,
    approximate: bool = True,
    **options,
) -> EhrhartResult:
    """Return the Ehrhart polynomial ``L(t)`` of ``polytope``.

    :param polytope: The polytope.
    :param rep: Its facet representation, computed when omitted.
    :param counts: Precomputed point counts keyed by the factors of
        :func:`.dilations`; missing ones are counted here.
    :param approximate: Whether the verdict carries display roots (default: ``True``).
    :param options: Passed on to :func:`.classify_strip`, for example ``tolerance``.

    :raises: :class:`.ConsistencyError` when the interpolated polynomial misses the
        check counts at ``t = d + 1`` and ``t = d + 2``.

    ``L`` is interpolated through ``t = 0..d``.

    """
    rep = rep or polytope.facet_rep
    known: Dict[int, int] = dict(counts or {})
    for t in dilations(polytope):
        if t not in known:
            known[t] = count_points(polytope, rep, t)
    d = polytope.dim
    polynomial = interpolate([(t, known[t]) for t in range(d + 1)])
    for t in (d + 1, d + 2):
        if polynomial(t) != known[t]:
            raise ConsistencyError(
                f"Ehrhart interpolation predicts {polynomial(t)} points at t={t} but"
                f" {known[t]} were counted."
            )
    scaled = polynomial.scale(factorial(d))
    if polynomial(0) != 1 or any(value.denominator != 1 for value in scaled):
        raise ConsistencyError(f"{polynomial} is not an Ehrhart polynomial.")
    logger.debug(f"Ehrhart polynomial {polynomial} for {polytope.name or polytope}")
    verdict = classify_strip(polynomial, d, approximate=approximate, **options)
    counts = tuple(sorted(known.items()))
    return EhrhartResult(polynomial, counts, verdict)


def normalized_volume(polytope: LatticePolytope, result: EhrhartResult) -> Fraction:
    """Return ``d!`` times the volume, read off the leading coefficient."""
    return result.polynomial.leading * factorial(polytope.dim)


def is_terminal(polytope: LatticePolytope, rep: Optional[FacetRep] = None) -> bool:
    """Return whether the lattice points are the vertices and the interior origin."""
    rep = rep or polytope.facet_rep
    return (
        origin_interior(rep)
        and count_points(polytope, rep, 1) == len(polytope.vertices) + 1
    )

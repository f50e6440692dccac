"""Ehrhart polynomials of lattice polytopes and the canonical line conjectures."""

from .catalog import (  # noqa: F401
    ConjectureReport,
    catalog_path,
    conjecture_label,
    conjecture_verdict,
    load_catalog,
    load_polytope,
    parse_catalog,
    parse_polytope,
)
from .counting import (  # noqa: F401
    EhrhartResult,
    count_interior_points,
    count_points,
    count_slab,
    dilations,
    ehrhart_polynomial,
    is_terminal,
    normalized_volume,
    slab_values,
)
from .polytope import (  # noqa: F401
    Facet,
    FacetRep,
    LatticePolytope,
    facet_representation,
    facet_vertices,
    is_reflexive,
    is_smooth_fan_polytope,
    origin_interior,
)

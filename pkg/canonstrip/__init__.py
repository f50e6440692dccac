"""Exact root location for Hilbert and Ehrhart polynomials.

canonstrip builds the anticanonical Hilbert polynomials of curves, surfaces,
threefolds, projective spaces and Grassmannians, as well as Ehrhart polynomials of
lattice polytopes, and decides with exact rational arithmetic whether their zeros lie
in the canonical strip ``-1 < Re z < 0``, in the narrowed strip, or on the canonical
line ``Re z = -1/2``.

The :class:`.Workbench` class is the asynchronous entry point; every computation it
runs is also available as a plain function in the submodules.

"""

from .const import __version__  # NOQA
from .workbench import Workbench  # NOQA

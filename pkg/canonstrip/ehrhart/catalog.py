"""Load polytope files and catalogs, and label conjecture instances."""
import json
import os
import sys
from dataclasses import dataclass
from logging import getLogger
from typing import Any, List, Optional

from ..const import BUILTIN_CATALOGS
from ..exceptions import CanonStripException, MalformedInput
from .counting import EhrhartResult, ehrhart_polynomial, is_terminal
from .polytope import (
    FacetRep,
    LatticePolytope,
    is_reflexive,
    is_smooth_fan_polytope,
)

logger = getLogger("canonstrip")

SMOOTH_CONJECTURE_DIMS = range(1, 6)


@dataclass(frozen=True)
class ConjectureReport:
    """The flags and Ehrhart data of one polytope, labeled by the conjecture probed."""

    polytope: LatticePolytope
    reflexive: bool
    smooth: bool
    terminal: bool
    result: EhrhartResult
    conjecture: str

    @property
    def name(self) -> Optional[str]:
        """Return the polytope name."""
        return self.polytope.name

    @property
    def predicted(self) -> bool:
        """Return whether a conjecture predicts all roots on ``Re t = -1/2``."""
        return self.conjecture != "comparison"

    @property
    def cl(self) -> bool:
        """Return the exact canonical line flag."""
        return self.result.cl


def conjecture_label(
    polytope: LatticePolytope, reflexive: bool, smooth: bool, terminal: bool
) -> str:
    """Return which canonical line conjecture ``polytope`` is an instance of.

    ``smooth-fano`` covers smooth reflexive polytopes in dimensions 1 to 5,
    ``terminal-gorenstein`` covers terminal reflexive polytopes in dimension 3, and
    everything else is a ``comparison`` instance.

    """
    if reflexive and smooth and polytope.dim in SMOOTH_CONJECTURE_DIMS:
        return "smooth-fano"
    if reflexive and terminal and polytope.dim == 3:
        return "terminal-gorenstein"
    return "comparison"


def conjecture_verdict(
    polytope: LatticePolytope,
    rep: Optional[FacetRep] = None,
    result: Optional[EhrhartResult] = None,
) -> ConjectureReport:
    """Return the reflexivity, smoothness and canonical line data of ``polytope``.

    Polytopes that are neither smooth nor reflexive are reported, not rejected.

    """
    rep = rep or polytope.facet_rep
    result = result or ehrhart_polynomial(polytope, rep)
    reflexive = is_reflexive(polytope, rep)
    smooth = is_smooth_fan_polytope(polytope, rep)
    terminal = is_terminal(polytope, rep) if reflexive else False
    label = conjecture_label(polytope, reflexive, smooth, terminal)
    return ConjectureReport(polytope, reflexive, smooth, terminal, result, label)


def _decode(text: str, source: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc.msg}.", source, exc.lineno)


def _line_of(text: str, needle: str) -> Optional[int]:
    """Return the 1-based line of the first occurrence of ``needle`` in ``text``."""
    index = text.find(needle)
    if index < 0:
        return None
    return text.count("\n", 0, index) + 1


def polytope_from_data(
    data: Any, source: str, text: str = "", name: Optional[str] = None
) -> LatticePolytope:
    """Build a validated polytope from a decoded polytope object.

    :raises: :class:`.MalformedInput` with file and line context for any problem.

    """
    if not isinstance(data, dict):
        raise MalformedInput("expected a JSON object with dim and vertices.", source)
    name = data.get("name", name)
    line = _line_of(text, f'"{name}"') if name else None
    if not isinstance(data.get("dim"), int) or not isinstance(
        data.get("vertices"), list
    ):
        raise MalformedInput(
            'expected an integer "dim" and a "vertices" list.', source, line
        )
    try:
        polytope = LatticePolytope(data["dim"], data["vertices"], name=name)
        polytope.facet_rep
    except (TypeError, ValueError) as exc:
        raise MalformedInput(f"invalid vertex data ({exc}).", source, line)
    except CanonStripException as exc:
        label = f" {name!r}" if name else ""
        raise MalformedInput(f"polytope{label}: {exc}", source, line) from exc
    return polytope


def parse_polytope(text: str, source: str = "<string>") -> LatticePolytope:
    """Parse a polytope file: ``{"dim": d, "vertices": [[...], ...]}``."""
    return polytope_from_data(_decode(text, source), source, text)


def parse_catalog(text: str, source: str = "<string>") -> List[LatticePolytope]:
    """Parse a catalog file: a list of ``{"name", "dim", "vertices"}`` objects."""
    data = _decode(text, source)
    if not isinstance(data, list):
        raise MalformedInput("expected a JSON list of polytopes.", source)
    polytopes = []
    for index, entry in enumerate(data):
        fallback = f"{os.path.basename(source)}[{index}]"
        polytopes.append(polytope_from_data(entry, source, text, name=fallback))
    return polytopes


def load_polytope(path: str) -> LatticePolytope:
    """Load a polytope file from ``path``."""
    with open(path, encoding="utf-8") as stream:
        return parse_polytope(stream.read(), path)


def catalog_path(name: str, search_path: Optional[str] = None) -> str:
    """Return the file of the catalog called ``name``.

    Built-in catalogs ship in the package; other names are looked up as
    ``<search_path>/<name>.json`` and finally as a plain path.

    """
    if name in BUILTIN_CATALOGS:
        module_dir = os.path.dirname(sys.modules[__name__].__file__)
        return os.path.join(module_dir, "data", f"{name}.json")
    if search_path:
        candidate = os.path.join(search_path, f"{name}.json")
        if os.path.exists(candidate):
            return candidate
    return name


def load_catalog(name: str, search_path: Optional[str] = None) -> List[LatticePolytope]:
    """Load the catalog called ``name``.

    .. code-block:: python

        surfaces = load_catalog("smooth-dim2")
        [polytope.name for polytope in surfaces]

    """
    path = catalog_path(name, search_path)
    with open(path, encoding="utf-8") as stream:
        polytopes = parse_catalog(stream.read(), path)
    logger.debug(f"Loaded {len(polytopes)} polytopes from {path}")
    return polytopes

"""Render verdict documents as an SVG root scatter."""
import io
from logging import getLogger
from typing import Sequence

import matplotlib
from matplotlib.backends.backend_svg import FigureCanvasSVG
from matplotlib.figure import Figure

from .document import VerdictDocument, write_text

logger = getLogger("canonstrip")

HASH_SALT = "canonstrip"
STRIP_COLOR = "tab:blue"
NARROW_COLOR = "tab:green"
LINE_COLOR = "tab:red"


def _title(document: VerdictDocument) -> str:
    name = document.input.get("name") or document.input.get("constructor")
    return str(name or document.command)


def _draw_panel(axes, document: VerdictDocument, panel: int):
    """Draw the region guides and one marker per root of ``document``."""
    axes.axvspan(-1, 0, color=STRIP_COLOR, alpha=0.08, gid=f"guide-cs-{panel}")
    if document.dim:
        low = -1 + 1 / (document.dim + 1)
        high = -1 / (document.dim + 1)
        axes.axvspan(
            low, high, color=NARROW_COLOR, alpha=0.15, gid=f"guide-ncs-{panel}"
        )
    axes.axvline(-0.5, color=LINE_COLOR, linewidth=1, gid=f"guide-cl-{panel}")
    for index, root in enumerate(document.approx_roots):
        axes.plot(
            [root.value.real],
            [root.value.imag],
            marker="o",
            linestyle="none",
            color="black",
            gid=f"root-{panel}-{index}",
        )
    flags = ", ".join(
        f"{flag} {'yes' if value else 'no'}" for flag, value in document.flags.items()
    )
    axes.set_title(f"{_title(document)}\n{flags}", fontsize=9)
    axes.set_xlabel("Re z")
    axes.set_ylabel("Im z")
    axes.axhline(0, color="grey", linewidth=0.5)


def render_svg(
    documents: Sequence[VerdictDocument], width: float = 4.0, height: float = 3.5
) -> str:
    """Return an SVG drawing with one panel per document.

    Root markers have the ids ``root-<panel>-<i>`` and the region guides
    ``guide-cs-<panel>``, ``guide-ncs-<panel>`` and ``guide-cl-<panel>``. The output
    carries no date and uses a fixed hash salt, so it only depends on the documents.

    :param documents: The documents, one panel each.
    :param width: The panel width in inches (default: ``4.0``).
    :param height: The panel height in inches (default: ``3.5``).

    """
    figure = Figure(figsize=(width * len(documents), height))
    FigureCanvasSVG(figure)
    grid = figure.subplots(1, len(documents), squeeze=False)
    for panel, document in enumerate(documents):
        _draw_panel(grid[0][panel], document, panel)
    figure.tight_layout()
    buffer = io.StringIO()
    with matplotlib.rc_context({"svg.hashsalt": HASH_SALT, "svg.fonttype": "none"}):
        figure.savefig(buffer, format="svg", metadata={"Date": None})
    logger.debug(f"Rendered {len(documents)} SVG panel(s)")
    return buffer.getvalue()


async def write_svg(
    path: str,
    documents: Sequence[VerdictDocument],
    width: float = 4.0,
    height: float = 3.5,
):
    """Render ``documents`` and write the SVG to ``path``."""
    await write_text(path, render_svg(documents, width, height))

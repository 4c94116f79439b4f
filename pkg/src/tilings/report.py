"""Matplotlib figure output for the sampling reports.

Figures are written to files next to the delimited output; matplotlib is
imported lazily with the Agg backend so library users never pay for it.
"""

from __future__ import annotations

from .counting import _aztec_order, _centered_domino
from .lattice import Tiling

_KIND_COLOR = {"N": "#d95f02", "S": "#fdbf6f", "E": "#1f78b4", "W": "#a6cee3"}


def _pyplot():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def save_aztec_figure(tiling: Tiling, path: str) -> None:
    """Draw an Aztec-diamond tiling with one shade per migration direction
    and the inscribed circle overlaid."""
    plt = _pyplot()
    from matplotlib.patches import Circle, Rectangle

    order = _aztec_order(tiling.region)
    fig, ax = plt.subplots(figsize=(7, 7))
    for placement in sorted(tiling.placements, key=lambda p: sorted(p.cells)):
        d = _centered_domino(placement, order)
        w, h = (2, 1) if d.horizontal else (1, 2)
        ax.add_patch(Rectangle((d.x, d.y), w, h, facecolor=_KIND_COLOR[d.kind(order)],
                               edgecolor="white", linewidth=0.4))
    ax.add_patch(Circle((0, 0), order / 2 ** 0.5, fill=False,
                        edgecolor="black", linewidth=1.2, linestyle="--"))
    ax.set_xlim(-order - 1, order + 1)
    ax.set_ylim(-order - 1, order + 1)
    ax.set_aspect("equal")
    ax.set_axis_off()
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)


def save_frozen_trend_figure(orders: list[int], means: list[float],
                             stderrs: list[float], path: str) -> None:
    """Frozen-fraction means against diamond order, with 2-SE error bars."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.errorbar(orders, means, yerr=[2 * s for s in stderrs], marker="o", capsize=4)
    ax.set_xlabel("diamond order")
    ax.set_ylabel("frozen fraction outside the circle")
    ax.set_ylim(0, 1.02)
    ax.grid(True, alpha=0.3)
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)

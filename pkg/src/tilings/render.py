"""Deterministic SVG pictures of regions, tilings, and squared rectangles.

Output is plain text with fixed two-decimal coordinates, so identical inputs
render byte-identical files.  Horizontal and vertical dominoes get their own
fills; other shapes are colored from a fixed palette by shape name.
"""

from __future__ import annotations

import math

from .lattice import Cell, Lattice, Region, Tiling

_PALETTE = (
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295",
)
_HORIZONTAL_FILL = "#e8b04c"
_VERTICAL_FILL = "#5b8fc9"
_HOLE_FILL = "#f2f2ee"
_EDGE = "#2b2b2b"


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _svg(width: float, height: float, body: list[str]) -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" '
            f'width="{_fmt(width)}" height="{_fmt(height)}" '
            f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">')
    return "\n".join([head, *body, "</svg>"]) + "\n"


def _shape_fill(tiling: Tiling) -> dict[str, str]:
    names = sorted({p.shape.name for p in tiling.placements})
    return {name: _PALETTE[i % len(_PALETTE)] for i, name in enumerate(names)}


def _placement_fill(placement, fills: dict[str, str]) -> str:
    cells = sorted(placement.cells)
    if len(cells) == 2 and placement.shape.name == "domino":
        return _HORIZONTAL_FILL if cells[0][0] == cells[1][0] else _VERTICAL_FILL
    return fills[placement.shape.name]


def svg_tiling(tiling: Tiling, cell: float = 24.0, margin: float = 8.0) -> str:
    if tiling.region.lattice is Lattice.HEX:
        return _svg_hex_tiling(tiling, cell, margin)
    return _svg_square_tiling(tiling, cell, margin)


def _svg_square_tiling(tiling: Tiling, cell: float, margin: float) -> str:
    region = tiling.region
    if not region.cells:
        return _svg(2 * margin, 2 * margin, [])
    min_r, min_c, max_r, max_c = region.bounding_box
    fills = _shape_fill(tiling)
    body = []
    owner: dict[Cell, frozenset] = {}
    for placement in sorted(tiling.placements, key=lambda p: sorted(p.cells)):
        fill = _placement_fill(placement, fills)
        for r, c in sorted(placement.cells):
            owner[(r, c)] = placement.cells
            x = margin + (c - min_c) * cell
            y = margin + (r - min_r) * cell
            body.append(f'<rect x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(cell)}" '
                        f'height="{_fmt(cell)}" fill="{fill}"/>')
    # tile boundaries: draw edges where the neighbor belongs to another tile
    for r, c in sorted(owner):
        x = margin + (c - min_c) * cell
        y = margin + (r - min_r) * cell
        edges = (((r - 1, c), (x, y, x + cell, y)),
                 ((r + 1, c), (x, y + cell, x + cell, y + cell)),
                 ((r, c - 1), (x, y, x, y + cell)),
                 ((r, c + 1), (x + cell, y, x + cell, y + cell)))
        for nb, (x1, y1, x2, y2) in edges:
            if owner.get(nb) is not owner[(r, c)]:
                body.append(f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" '
                            f'y2="{_fmt(y2)}" stroke="{_EDGE}" stroke-width="1.5"/>')
    width = 2 * margin + (max_c - min_c + 1) * cell
    height = 2 * margin + (max_r - min_r + 1) * cell
    return _svg(width, height, body)


def _hex_center(r: int, i: int, radius: float) -> tuple[float, float]:
    w = math.sqrt(3.0) * radius
    return (w * (i - r / 2.0), 1.5 * radius * r)


def _hex_vertex(cx: float, cy: float, radius: float, angle_deg: float) -> tuple[float, float]:
    a = math.radians(angle_deg)
    return (cx + radius * math.cos(a), cy + radius * math.sin(a))


# midpoint angle of the edge facing each hex neighbor (SVG y axis points down)
_HEX_EDGE_ANGLE = {
    (0, 1): 0.0, (1, 1): 60.0, (1, 0): 120.0,
    (0, -1): 180.0, (-1, -1): 240.0, (-1, 0): 300.0,
}


def _svg_hex_tiling(tiling: Tiling, cell: float, margin: float) -> str:
    radius = cell / math.sqrt(3.0)
    region = tiling.region
    if not region.cells:
        return _svg(2 * margin, 2 * margin, [])
    centers = {c: _hex_center(*c, radius) for c in region.cells}
    min_x = min(x for x, _ in centers.values()) - radius
    min_y = min(y for _, y in centers.values()) - radius
    fills = _shape_fill(tiling)
    body = []
    owner: dict[Cell, frozenset] = {}
    for placement in sorted(tiling.placements, key=lambda p: sorted(p.cells)):
        fill = fills[placement.shape.name]
        for cellpos in sorted(placement.cells):
            owner[cellpos] = placement.cells
            cx, cy = centers[cellpos]
            cx, cy = cx - min_x + margin, cy - min_y + margin
            pts = " ".join(f"{_fmt(px)},{_fmt(py)}"
                           for px, py in (_hex_vertex(cx, cy, radius, 30 + 60 * k)
                                          for k in range(6)))
            body.append(f'<polygon points="{pts}" fill="{fill}" '
                        f'stroke="#ffffff" stroke-width="0.5"/>')
    for (r, i) in sorted(owner):
        cx, cy = centers[(r, i)]
        cx, cy = cx - min_x + margin, cy - min_y + margin
        for (dr, di), mid in _HEX_EDGE_ANGLE.items():
            if owner.get((r + dr, i + di)) is not owner[(r, i)]:
                x1, y1 = _hex_vertex(cx, cy, radius, mid - 30)
                x2, y2 = _hex_vertex(cx, cy, radius, mid + 30)
                body.append(f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" '
                            f'y2="{_fmt(y2)}" stroke="{_EDGE}" stroke-width="1.2"/>')
    max_x = max(x for x, _ in centers.values()) + radius
    max_y = max(y for _, y in centers.values()) + radius
    return _svg(max_x - min_x + 2 * margin, max_y - min_y + 2 * margin, body)


def svg_region(region: Region, cell: float = 24.0, margin: float = 8.0) -> str:
    """The bare region: cells filled, bounding-box holes left pale."""
    if not region.cells:
        return _svg(2 * margin, 2 * margin, [])
    if region.lattice is Lattice.HEX:
        from .lattice import Placement, TileShape, Tiling as T
        # render as a one-tile-per-cell picture
        body_tiles = frozenset(
            Placement(TileShape.make("cell", [(0, 0)], lattice=Lattice.HEX),
                      frozenset({c})) for c in region.cells)
        return _svg_hex_tiling(T(region, body_tiles), cell, margin)
    min_r, min_c, max_r, max_c = region.bounding_box
    body = []
    for r in range(min_r, max_r + 1):
        for c in range(min_c, max_c + 1):
            fill = "#c8d6e5" if (r, c) in region.cells else _HOLE_FILL
            x = margin + (c - min_c) * cell
            y = margin + (r - min_r) * cell
            body.append(f'<rect x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(cell)}" '
                        f'height="{_fmt(cell)}" fill="{fill}" '
                        f'stroke="#ffffff" stroke-width="0.5"/>')
    width = 2 * margin + (max_c - min_c + 1) * cell
    height = 2 * margin + (max_r - min_r + 1) * cell
    return _svg(width, height, body)


def svg_squared(placed: dict[str, tuple[int, int, int]], width: int, height: int,
                scale: float = 12.0, margin: float = 8.0) -> str:
    """The solved squared rectangle with labeled squares."""
    body = []
    for idx, (label, (x, y, s)) in enumerate(sorted(placed.items())):
        fill = _PALETTE[idx % len(_PALETTE)]
        body.append(f'<rect x="{_fmt(margin + x * scale)}" y="{_fmt(margin + y * scale)}" '
                    f'width="{_fmt(s * scale)}" height="{_fmt(s * scale)}" '
                    f'fill="{fill}" stroke="{_EDGE}" stroke-width="1.0"/>')
        tx = margin + (x + s / 2.0) * scale
        ty = margin + (y + s / 2.0) * scale
        size = max(8.0, min(18.0, s * scale / 3.0))
        body.append(f'<text x="{_fmt(tx)}" y="{_fmt(ty)}" font-size="{_fmt(size)}" '
                    f'text-anchor="middle" dominant-baseline="central" '
                    f'font-family="sans-serif">{label}={s}</text>')
    return _svg(2 * margin + width * scale, 2 * margin + height * scale, body)

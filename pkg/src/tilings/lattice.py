"""Regions, colorings, tile shapes, placements, and tilings on two lattices.

Cells are (row, col) integer pairs with the origin at the top left and rows
increasing downward.  Square-lattice cells are unit squares; hex-triangular
cells live in a triangular array where row r holds positions 0..r and cell
(r, i) touches (r, i-1), (r, i+1), (r-1, i-1), (r-1, i), (r+1, i), (r+1, i+1).
"""

from __future__ import annotations

import enum
import functools as _functools
import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator

Cell = tuple[int, int]


class Lattice(enum.Enum):
    SQUARE = "square"
    HEX = "hex"


class Symmetry(enum.Enum):
    """How far a tile shape may be transformed when placed."""

    FREE = "free"            # rotations and reflections
    ROTATIONS = "rotations"  # rotations only
    FIXED = "fixed"          # translations only


_SQUARE_NEIGHBORS = ((-1, 0), (1, 0), (0, -1), (0, 1))
_HEX_NEIGHBORS = ((0, -1), (0, 1), (-1, -1), (-1, 0), (1, 0), (1, 1))


def neighbors(cell: Cell, lattice: Lattice) -> Iterator[Cell]:
    """Yield the lattice neighbors of a cell (no region clipping)."""
    r, c = cell
    deltas = _SQUARE_NEIGHBORS if lattice is Lattice.SQUARE else _HEX_NEIGHBORS
    for dr, dc in deltas:
        yield (r + dr, c + dc)


@dataclass(frozen=True)
class Region:
    """A finite set of cells sharing one lattice."""

    lattice: Lattice
    cells: frozenset[Cell]

    def __post_init__(self) -> None:
        for r, c in self.cells:
            if not (isinstance(r, int) and isinstance(c, int)):
                raise ValueError(f"non-integer cell {(r, c)!r}")
            if self.lattice is Lattice.HEX and not 0 <= c <= r:
                raise ValueError(f"hex cell {(r, c)} outside triangular array")

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell: Cell) -> bool:
        return cell in self.cells

    @property
    def bounding_box(self) -> tuple[int, int, int, int] | None:
        """(min_row, min_col, max_row, max_col), or None when empty."""
        if not self.cells:
            return None
        rows = [r for r, _ in self.cells]
        cols = [c for _, c in self.cells]
        return (min(rows), min(cols), max(rows), max(cols))

    def neighbors_in(self, cell: Cell) -> list[Cell]:
        """Region-internal neighbors of a cell, sorted."""
        return sorted(n for n in neighbors(cell, self.lattice) if n in self.cells)

    def is_connected(self) -> bool:
        if not self.cells:
            return True
        seen = {min(self.cells)}
        stack = [min(self.cells)]
        while stack:
            for n in self.neighbors_in(stack.pop()):
                if n not in seen:
                    seen.add(n)
                    stack.append(n)
        return len(seen) == len(self.cells)

    def translated(self, dr: int, dc: int) -> "Region":
        return Region(self.lattice, frozenset((r + dr, c + dc) for r, c in self.cells))


def build_rectangle(rows: int, cols: int) -> Region:
    """Square-lattice rows x cols board."""
    if rows < 1 or cols < 1:
        raise ValueError("rectangle dimensions must be positive")
    return Region(Lattice.SQUARE, frozenset((r, c) for r in range(rows) for c in range(cols)))


def build_aztec(order: int) -> Region:
    """Diamond-shaped board made of centered rows of length 2, 4, ..., 2n, 2n, ..., 4, 2."""
    if order < 1:
        raise ValueError("order must be positive")
    cells = set()
    for r in range(2 * order):
        half = min(r + 1, 2 * order - r)
        for c in range(order - half, order + half):
            cells.add((r, c))
    return Region(Lattice.SQUARE, frozenset(cells))


def build_triangle(n: int) -> Region:
    """Triangular array of n(n+1)/2 hexagons, rows of sizes 1..n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Region(Lattice.HEX, frozenset((r, i) for r in range(n) for i in range(r + 1)))


def remove_cells(region: Region, cells: Iterable[Cell]) -> Region:
    removed = frozenset(cells)
    missing = removed - region.cells
    if missing:
        raise ValueError(f"cells not in region: {sorted(missing)}")
    return Region(region.lattice, region.cells - removed)


# ---------------------------------------------------------------------------
# Colorings


@dataclass(frozen=True)
class Coloring:
    """Total map from a region's cells to color indices 0..k-1."""

    name: str
    k: int
    colors: dict[Cell, int] = field(compare=False)

    def __post_init__(self) -> None:
        bad = [c for c, v in self.colors.items() if not 0 <= v < self.k]
        if bad:
            raise ValueError(f"color index out of range on {sorted(bad)[:3]}")

    def __getitem__(self, cell: Cell) -> int:
        return self.colors[cell]

    def counts(self) -> tuple[int, ...]:
        """Number of region cells of each color."""
        out = [0] * self.k
        for v in self.colors.values():
            out[v] += 1
        return tuple(out)


def chessboard_coloring(region: Region) -> Coloring:
    """Two-coloring with color 0 where row+col is even; square lattice only."""
    if region.lattice is not Lattice.SQUARE:
        raise ValueError("chessboard coloring needs a square lattice")
    return Coloring("chessboard", 2, {(r, c): (r + c) % 2 for r, c in region.cells})


def block4_coloring(region: Region) -> Coloring:
    """Four-coloring 2*(row mod 2) + (col mod 2), periodic in 2x2 blocks."""
    if region.lattice is not Lattice.SQUARE:
        raise ValueError("block coloring needs a square lattice")
    return Coloring("block4", 4, {(r, c): 2 * (r % 2) + c % 2 for r, c in region.cells})


# ---------------------------------------------------------------------------
# Tile shapes

# Point transforms are generated per lattice.  Square shapes use the dihedral
# group of the grid; hex shapes use the dihedral group of the triangular
# lattice expressed in axial coordinates a = i, b = r - i.


def _square_transforms(symmetry: Symmetry):
    def rot(cell):
        r, c = cell
        return (c, -r)

    def refl(cell):
        r, c = cell
        return (r, -c)

    transforms = [lambda cell: cell]
    if symmetry is Symmetry.FIXED:
        return transforms
    for _ in range(3):
        prev = transforms[-1]
        transforms.append(lambda cell, p=prev: rot(p(cell)))
    if symmetry is Symmetry.FREE:
        transforms.extend([lambda cell, p=p: refl(p(cell)) for p in list(transforms)])
    return transforms


def _hex_transforms(symmetry: Symmetry):
    def to_axial(cell):
        r, i = cell
        return (i, r - i)

    def from_axial(ab):
        a, b = ab
        return (a + b, a)

    def rot(ab):  # 60 degrees
        a, b = ab
        return (-b, a + b)

    def refl(ab):
        a, b = ab
        return (b, a)

    chains = [lambda ab: ab]
    if symmetry is not Symmetry.FIXED:
        for _ in range(5):
            prev = chains[-1]
            chains.append(lambda ab, p=prev: rot(p(ab)))
        if symmetry is Symmetry.FREE:
            chains.extend([lambda ab, p=p: refl(p(ab)) for p in list(chains)])
    return [lambda cell, ch=ch: from_axial(ch(to_axial(cell))) for ch in chains]


def _normalize(cells: Iterable[Cell]) -> tuple[Cell, ...]:
    cells = list(cells)
    mr = min(r for r, _ in cells)
    mc = min(c for _, c in cells)
    return tuple(sorted((r - mr, c - mc) for r, c in cells))


def _offsets_connected(cells: frozenset[Cell], lattice: Lattice) -> bool:
    # Shape offsets are relative, so the hex 0 <= col <= row constraint
    # does not apply here; only adjacency matters.
    start = min(cells)
    seen = {start}
    stack = [start]
    while stack:
        for n in neighbors(stack.pop(), lattice):
            if n in cells and n not in seen:
                seen.add(n)
                stack.append(n)
    return len(seen) == len(cells)


@dataclass(frozen=True)
class TileShape:
    """A connected cell-offset set, canonical under its allowed symmetries.

    Equal shapes compare equal: the stored offsets are the lexicographically
    least normalized image over the symmetry group, so e.g. the S and Z forms
    of one free pentomino collapse to a single canonical shape.
    """

    name: str
    offsets: tuple[Cell, ...]
    symmetry: Symmetry = Symmetry.FREE
    lattice: Lattice = Lattice.SQUARE

    @staticmethod
    def make(name: str, cells: Iterable[Cell], symmetry: Symmetry = Symmetry.FREE,
             lattice: Lattice = Lattice.SQUARE) -> "TileShape":
        cells = frozenset(cells)
        if not cells:
            raise ValueError("empty shape")
        if not _offsets_connected(cells, lattice):
            raise ValueError(f"shape {name!r} is not connected")
        images = TileShape._images(cells, symmetry, lattice)
        return TileShape(name, min(images), symmetry, lattice)

    @staticmethod
    def _images(cells: frozenset[Cell], symmetry: Symmetry, lattice: Lattice):
        transforms = (_square_transforms(symmetry) if lattice is Lattice.SQUARE
                      else _hex_transforms(symmetry))
        return sorted({_normalize(t(c) for c in cells) for t in transforms})

    def images(self) -> list[tuple[Cell, ...]]:
        """All distinct normalized orientations allowed by the symmetry mode."""
        return _cached_images(self)

    def __len__(self) -> int:
        return len(self.offsets)


@_functools.lru_cache(maxsize=None)
def _cached_images(shape: "TileShape") -> list[tuple[Cell, ...]]:
    return TileShape._images(frozenset(shape.offsets), shape.symmetry, shape.lattice)


def domino() -> TileShape:
    return TileShape.make("domino", [(0, 0), (0, 1)])


def rectangle_tile(a: int, b: int, symmetry: Symmetry = Symmetry.FREE) -> TileShape:
    """An a x b rectangular tile, by default placeable in either orientation."""
    if a < 1 or b < 1:
        raise ValueError("tile dimensions must be positive")
    cells = [(r, c) for r in range(a) for c in range(b)]
    return TileShape.make(f"{a}x{b}", cells, symmetry)


# ---------------------------------------------------------------------------
# Placements and tilings


@dataclass(frozen=True)
class Placement:
    shape: TileShape
    cells: frozenset[Cell]

    def __post_init__(self) -> None:
        if _normalize(self.cells) not in self.shape.images():
            raise ValueError(f"cells are not an allowed image of shape {self.shape.name!r}")


@dataclass(frozen=True)
class Tiling:
    region: Region
    placements: frozenset[Placement]


def is_valid_tiling(tiling: Tiling) -> bool:
    """True when the placements partition the region exactly."""
    total = sum(len(p.cells) for p in tiling.placements)
    covered = frozenset().union(*(p.cells for p in tiling.placements)) if tiling.placements else frozenset()
    return total == len(covered) and covered == tiling.region.cells


# ---------------------------------------------------------------------------
# Text and JSON interchange


def parse_region(text: str, lattice: Lattice = Lattice.SQUARE) -> Region:
    """Parse '#'/'.' rows into a region anchored at (0, 0).

    Leading and trailing blank lines are ignored.  Hex rows must have exactly
    r+1 symbols; square rows may be ragged on the right (short rows are
    padded with holes).
    """
    lines = text.splitlines()
    while lines and not lines[0].strip():
        lines.pop(0)
    while lines and not lines[-1].strip():
        lines.pop()
    cells = set()
    for r, line in enumerate(lines):
        line = line.rstrip()
        if lattice is Lattice.HEX and len(line) != r + 1:
            raise ValueError(f"hex row {r} must have {r + 1} symbols, got {len(line)}")
        for c, ch in enumerate(line):
            if ch == "#":
                cells.add((r, c))
            elif ch != ".":
                raise ValueError(f"illegal character {ch!r} at row {r}")
    return Region(lattice, frozenset(cells))


def render_region(region: Region) -> str:
    """Inverse of parse_region on origin-anchored regions."""
    if not region.cells:
        return ""
    if region.lattice is Lattice.HEX:
        max_row = max(r for r, _ in region.cells)
        rows = ["".join("#" if (r, c) in region.cells else "." for c in range(r + 1))
                for r in range(max_row + 1)]
        return "\n".join(rows)
    min_r, min_c, max_r, max_c = region.bounding_box
    rows = []
    for r in range(min_r, max_r + 1):
        line = "".join("#" if (r, c) in region.cells else "." for c in range(min_c, max_c + 1))
        rows.append(line.rstrip("."))
    return "\n".join(rows)


def region_to_json(region: Region) -> str:
    payload = {"lattice": region.lattice.value, "cells": sorted(region.cells)}
    return json.dumps(payload, sort_keys=True)


def region_from_json(text: str) -> Region:
    payload = json.loads(text)
    lattice = Lattice(payload["lattice"])
    return Region(lattice, frozenset((int(r), int(c)) for r, c in payload["cells"]))


def tiling_to_json(tiling: Tiling) -> str:
    payload = {
        "region": {"lattice": tiling.region.lattice.value,
                   "cells": sorted(tiling.region.cells)},
        "placements": sorted(
            ({"shape": p.shape.name, "cells": sorted(p.cells)} for p in tiling.placements),
            key=lambda d: d["cells"]),
    }
    return json.dumps(payload, sort_keys=True)


def domino_tiling_from_json(text: str) -> Tiling:
    """Read back a serialized domino tiling (two-cell placements only)."""
    payload = json.loads(text)
    region = Region(Lattice(payload["region"]["lattice"]),
                    frozenset((int(r), int(c)) for r, c in payload["region"]["cells"]))
    shape = domino()
    placements = []
    for entry in payload["placements"]:
        cells = frozenset((int(r), int(c)) for r, c in entry["cells"])
        if len(cells) != 2:
            raise ValueError("expected two-cell placements")
        placements.append(Placement(shape, cells))
    return Tiling(region, frozenset(placements))

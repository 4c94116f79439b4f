"""Coloring-argument obstructions to tilability, and the triangular-array
tribone predicate.

Two obstruction schemas are supported.  BALANCE: every placement of every
shape covers two designated colors equally, but the region's totals differ.
PARITY: every placement covers an even number of each color, but some color
total is odd.  Either one rules out a tiling outright, and both witnesses
are cheap to re-verify.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Sequence

from .exact_cover import enumerate_placements
from .lattice import Coloring, Lattice, Region, Symmetry, TileShape


class ObstructionKind(enum.Enum):
    BALANCE = "balance"
    PARITY = "parity"


@dataclass(frozen=True)
class Obstruction:
    kind: ObstructionKind
    coloring: Coloring
    shapes: tuple[TileShape, ...]
    region_totals: tuple[int, ...]
    colors: tuple[int, int] | None  # the balanced pair, for BALANCE

    def verify(self, region: Region) -> bool:
        """Re-derive the per-placement property and the violated totals."""
        if self.region_totals != self.coloring.counts():
            return False
        if self.kind is ObstructionKind.BALANCE:
            a, b = self.colors
            for shape in self.shapes:
                for profile in placement_color_profiles(region, shape, self.coloring):
                    if profile[a] != profile[b]:
                        return False
            return self.region_totals[a] != self.region_totals[b]
        for shape in self.shapes:
            for profile in placement_color_profiles(region, shape, self.coloring):
                if any(x % 2 for x in profile):
                    return False
        return any(x % 2 for x in self.region_totals)

    def to_json(self) -> str:
        return json.dumps({
            "kind": self.kind.value,
            "colors": list(self.colors) if self.colors else None,
            "region_totals": list(self.region_totals),
            "shapes": [s.name for s in self.shapes],
            "coloring_name": self.coloring.name,
        }, sort_keys=True)


def placement_color_profiles(region: Region, shape: TileShape,
                             coloring: Coloring) -> set[tuple[int, ...]]:
    """Distinct color-count vectors over all placements of the shape."""
    profiles = set()
    for placement in enumerate_placements(region, [shape]):
        counts = [0] * coloring.k
        for cell in placement.cells:
            counts[coloring[cell]] += 1
        profiles.add(tuple(counts))
    return profiles


def balance_obstruction(region: Region, shapes: Sequence[TileShape], coloring: Coloring,
                        color_a: int, color_b: int) -> Obstruction | None:
    """Obstruction iff every placement covers color_a and color_b equally
    while the region totals differ."""
    for color in (color_a, color_b):
        if not 0 <= color < coloring.k:
            raise ValueError(f"color {color} out of range for {coloring.name}")
    for shape in shapes:
        for profile in placement_color_profiles(region, shape, coloring):
            if profile[color_a] != profile[color_b]:
                return None
    totals = coloring.counts()
    if totals[color_a] == totals[color_b]:
        return None
    return Obstruction(ObstructionKind.BALANCE, coloring, tuple(shapes), totals,
                       (color_a, color_b))


def parity_obstruction(region: Region, shapes: Sequence[TileShape],
                       coloring: Coloring) -> Obstruction | None:
    """Obstruction iff every placement covers an even number of each color
    while some region color total is odd."""
    for shape in shapes:
        for profile in placement_color_profiles(region, shape, coloring):
            if any(x % 2 for x in profile):
                return None
    totals = coloring.counts()
    if all(x % 2 == 0 for x in totals):
        return None
    return Obstruction(ObstructionKind.PARITY, coloring, tuple(shapes), totals, None)


# ---------------------------------------------------------------------------
# Tribones on the triangular array

# Whether a "tribone" is the three-hexagon triangle (both orientations) or
# three hexagons in a line is settled empirically: the exact-cover oracle on
# the arrays of side <= 9 is consistent with the closed form only for the
# triangle, which therefore ships as the default.

TRIBONE_TRIANGLE = TileShape.make("tribone", [(0, 0), (1, 0), (1, 1)],
                                  Symmetry.FREE, Lattice.HEX)
TRIBONE_LINE = TileShape.make("tribone-line", [(0, 0), (0, 1), (0, 2)],
                              Symmetry.FREE, Lattice.HEX)
DEFAULT_TRIBONE = TRIBONE_TRIANGLE


def tribone_tileable(n: int) -> bool:
    """Closed form: the side-n triangular array is tileable by tribones
    exactly when n mod 12 is one of 0, 2, 9, 11."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return n % 12 in (0, 2, 9, 11)


def determine_tribone_shape(max_n: int = 9) -> TileShape | None:
    """Pick the tribone candidate whose brute-force feasibility matches the
    closed form on all arrays up to side max_n; None if neither matches."""
    from .exact_cover import find_tiling
    from .lattice import build_triangle

    for candidate in (TRIBONE_TRIANGLE, TRIBONE_LINE):
        ok = True
        for n in range(max_n + 1):
            feasible = find_tiling(build_triangle(n), [candidate]) is not None
            if feasible != tribone_tileable(n):
                ok = False
                break
        if ok:
            return candidate
    return None

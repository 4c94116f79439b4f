"""Backtracking exact-cover solver for tiling problems.

Tilings are modeled as exact covers: one column per region cell, one row per
placement, and (in once-each mode) one extra column per shape so that every
shape is used exactly once.  The search is Knuth's dancing-links algorithm
with the least-candidates column heuristic, which keeps pentomino-scale
problems tractable.  Placement order and search order are fully deterministic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import GuardLimitExceeded
from .lattice import (
    Cell,
    Placement,
    Region,
    Symmetry,
    TileShape,
    Tiling,
)


class Multiplicity(enum.Enum):
    UNLIMITED = "unlimited"
    ONCE_EACH = "once_each"


GroupElement = Mapping[Cell, Cell]


@dataclass(frozen=True)
class SolveOptions:
    multiplicity: Multiplicity = Multiplicity.UNLIMITED
    limit: int | None = None
    group: tuple[GroupElement, ...] | None = None

    def __post_init__(self) -> None:
        if self.limit is not None and self.limit < 1:
            raise ValueError("limit must be at least 1")


def enumerate_placements(region: Region, shapes: Sequence[TileShape],
                         options: SolveOptions | None = None) -> list[Placement]:
    """Every translated symmetry image of every shape that fits in the region."""
    found = []
    if not region.cells:
        return found
    min_r, min_c, max_r, max_c = region.bounding_box
    for shape in shapes:
        if shape.lattice is not region.lattice:
            raise ValueError(f"shape {shape.name!r} is on the wrong lattice")
        for image in shape.images():
            # Normalized images have min row = min col = 0, so the anchor is
            # exactly the placement's minimum row and column.
            for dr in range(min_r, max_r + 1):
                for dc in range(min_c, max_c + 1):
                    cells = [(r + dr, c + dc) for r, c in image]
                    if all(cell in region.cells for cell in cells):
                        found.append(Placement(shape, frozenset(cells)))
    found.sort(key=lambda p: (tuple(sorted(p.cells)), p.shape.name))
    return found


class _DancingLinks:
    """Array-based dancing links over integer column ids (all primary)."""

    def __init__(self, ncols: int, rows: Sequence[Sequence[int]]):
        n = ncols + 1  # node 0 is the root, 1..ncols are column headers
        self.L = [(i - 1) % n for i in range(n)]
        self.R = [(i + 1) % n for i in range(n)]
        self.U = list(range(n))
        self.D = list(range(n))
        self.C = list(range(n))
        self.S = [0] * n
        self.ROW = [-1] * n
        for row_id, cols in enumerate(rows):
            first = None
            for col in cols:
                h = col + 1
                i = len(self.L)
                self.U.append(self.U[h])
                self.D.append(h)
                self.D[self.U[h]] = i
                self.U[h] = i
                self.C.append(h)
                self.ROW.append(row_id)
                self.S[h] += 1
                if first is None:
                    first = i
                    self.L.append(i)
                    self.R.append(i)
                else:
                    self.L.append(self.L[first])
                    self.R.append(first)
                    self.R[self.L[first]] = i
                    self.L[first] = i

    def solutions(self) -> Iterator[tuple[int, ...]]:
        """Yield solutions as tuples of row ids, in deterministic search order.

        Iterative depth-first search; cover/uncover are inlined because the
        link updates dominate the runtime on pentomino-sized problems.
        """
        L, R, U, D, C, S, ROW = self.L, self.R, self.U, self.D, self.C, self.S, self.ROW

        def cover(h):
            R[L[h]] = R[h]
            L[R[h]] = L[h]
            i = D[h]
            while i != h:
                j = R[i]
                while j != i:
                    D[U[j]] = D[j]
                    U[D[j]] = U[j]
                    S[C[j]] -= 1
                    j = R[j]
                i = D[i]

        def uncover(h):
            i = U[h]
            while i != h:
                j = L[i]
                while j != i:
                    S[C[j]] += 1
                    D[U[j]] = j
                    U[D[j]] = j
                    j = L[j]
                i = U[i]
            R[L[h]] = h
            L[R[h]] = h

        # Stack frames are (column, row-node); while a frame is on the stack
        # its column is covered and its row's other columns are covered too.
        stack: list[tuple[int, int]] = []
        descend = True
        while True:
            if descend:
                head = R[0]
                if head == 0:
                    yield tuple(ROW[node] for _, node in stack)
                    descend = False
                    continue
                best, size = head, S[head]
                h = R[head]
                while h != 0:
                    if S[h] < size:
                        best, size = h, S[h]
                    h = R[h]
                if size == 0:
                    descend = False
                    continue
                cover(best)
                r = D[best]
                j = R[r]
                while j != r:
                    cover(C[j])
                    j = R[j]
                stack.append((best, r))
            else:
                if not stack:
                    return
                best, r = stack.pop()
                j = L[r]
                while j != r:
                    uncover(C[j])
                    j = L[j]
                r = D[r]
                if r == best:
                    uncover(best)
                else:
                    j = R[r]
                    while j != r:
                        cover(C[j])
                        j = R[j]
                    stack.append((best, r))
                    descend = True


def _build_problem(region: Region, shapes: Sequence[TileShape], options: SolveOptions):
    placements = enumerate_placements(region, shapes, options)
    cell_ids = {cell: i for i, cell in enumerate(sorted(region.cells))}
    ncols = len(cell_ids)
    shape_col: dict[str, int] = {}
    if options.multiplicity is Multiplicity.ONCE_EACH:
        names = [s.name for s in shapes]
        if len(set(names)) != len(names):
            raise ValueError("once-each mode needs distinct shape names")
        for name in names:
            shape_col[name] = ncols
            ncols += 1
    rows = []
    for p in placements:
        cols = sorted(cell_ids[c] for c in p.cells)
        if shape_col:
            cols.append(shape_col[p.shape.name])
        rows.append(cols)
    return placements, ncols, rows


def solve_tilings(region: Region, shapes: Sequence[TileShape],
                  options: SolveOptions | None = None) -> Iterator[Tiling]:
    """Lazily enumerate tilings in deterministic order, honoring options.limit."""
    options = options or SolveOptions()
    if not region.cells:
        yield Tiling(region, frozenset())
        return
    placements, ncols, rows = _build_problem(region, shapes, options)
    dlx = _DancingLinks(ncols, rows)
    produced = 0
    for row_ids in dlx.solutions():
        yield Tiling(region, frozenset(placements[i] for i in row_ids))
        produced += 1
        if options.limit is not None and produced >= options.limit:
            return


def find_tiling(region: Region, shapes: Sequence[TileShape],
                options: SolveOptions | None = None) -> Tiling | None:
    options = replace(options or SolveOptions(), limit=1)
    for tiling in solve_tilings(region, shapes, options):
        return tiling
    return None


def count_tilings(region: Region, shapes: Sequence[TileShape],
                  options: SolveOptions | None = None) -> int:
    """Exact number of distinct tilings, as labeled placement sets."""
    options = options or SolveOptions()
    if not region.cells:
        return 1
    placements, ncols, rows = _build_problem(region, shapes, options)
    dlx = _DancingLinks(ncols, rows)
    count = 0
    for _ in dlx.solutions():
        count += 1
        if options.limit is not None and count >= options.limit:
            break
    return count


# ---------------------------------------------------------------------------
# Orbit counting under a symmetry group


def _serialize(placement_cells: Iterable[tuple[str, tuple[Cell, ...]]]):
    return tuple(sorted(placement_cells))


def _tiling_key(tiling: Tiling):
    return _serialize((p.shape.name, tuple(sorted(p.cells))) for p in tiling.placements)


def _transformed_key(key, g: GroupElement):
    return _serialize((name, tuple(sorted(g[c] for c in cells))) for name, cells in key)


@dataclass(frozen=True)
class OrbitCount:
    canonical: int
    raw: int
    orbit_sizes: tuple[int, ...]


def canonical_orbits(region: Region, shapes: Sequence[TileShape],
                     options: SolveOptions, guard: int | None = None) -> OrbitCount:
    """Count tiling orbits under options.group by canonical representatives.

    A tiling is counted when its serialized form is minimal in its orbit,
    so the orbit decomposition (sizes summing to the raw count) comes for
    free and cross-checks the group action.
    """
    if not options.group:
        raise ValueError("orbit counting needs options.group")
    if options.limit is not None:
        raise ValueError("orbit counting needs the full solution set, not a limit")
    for g in options.group:
        image = {g[c] for c in region.cells}
        if image != region.cells:
            raise ValueError("group element does not preserve the region")
    raw = 0
    canonical = 0
    orbit_sizes = []
    for tiling in solve_tilings(region, shapes, options):
        raw += 1
        if guard is not None and raw > guard:
            raise GuardLimitExceeded(f"more than {guard} tilings to classify")
        key = _tiling_key(tiling)
        orbit = {_transformed_key(key, g) for g in options.group}
        if key == min(orbit):
            canonical += 1
            orbit_sizes.append(len(orbit))
    return OrbitCount(canonical, raw, tuple(orbit_sizes))


def count_canonical(region: Region, shapes: Sequence[TileShape],
                    options: SolveOptions) -> int:
    return canonical_orbits(region, shapes, options).canonical


def square_point_group(region: Region) -> tuple[GroupElement, ...]:
    """All grid isometries (rotations/reflections about the bounding box)
    mapping the region onto itself, as explicit cell bijections."""
    if not region.cells:
        return (dict(),)
    out = []
    min_r, min_c, max_r, max_c = region.bounding_box
    transforms = [
        lambda r, c: (r, c),
        lambda r, c: (c, -r),
        lambda r, c: (-r, -c),
        lambda r, c: (-c, r),
        lambda r, c: (r, -c),
        lambda r, c: (-r, c),
        lambda r, c: (c, r),
        lambda r, c: (-c, -r),
    ]
    for t in transforms:
        image = {cell: t(*cell) for cell in region.cells}
        dr = min_r - min(r for r, _ in image.values())
        dc = min_c - min(c for _, c in image.values())
        mapping = {cell: (r + dr, c + dc) for cell, (r, c) in image.items()}
        if set(mapping.values()) == region.cells:
            out.append(mapping)
    return tuple(_dedup_group(out))


def group_from_generators(generators: Sequence[GroupElement]) -> tuple[GroupElement, ...]:
    """Closure of the generators (plus identity) under composition."""
    if not generators:
        raise ValueError("need at least one generator")
    domain = sorted(generators[0].keys())
    identity = {c: c for c in domain}
    elements = {_freeze(identity): identity}
    frontier = [identity]
    while frontier:
        g = frontier.pop()
        for gen in generators:
            comp = {c: gen[g[c]] for c in domain}
            key = _freeze(comp)
            if key not in elements:
                elements[key] = comp
                frontier.append(comp)
    return tuple(elements[k] for k in sorted(elements))


def _freeze(mapping: GroupElement):
    return tuple(sorted(mapping.items()))


def _dedup_group(elements: Iterable[GroupElement]) -> list[GroupElement]:
    seen = {}
    for g in elements:
        seen.setdefault(_freeze(g), g)
    return [seen[k] for k in sorted(seen)]


# ---------------------------------------------------------------------------
# The twelve pentominoes

_PENTOMINO_CELLS = {
    "F": [(0, 1), (0, 2), (1, 0), (1, 1), (2, 1)],
    "I": [(0, 0), (1, 0), (2, 0), (3, 0), (4, 0)],
    "L": [(0, 0), (1, 0), (2, 0), (3, 0), (3, 1)],
    "N": [(0, 1), (1, 1), (2, 0), (2, 1), (3, 0)],
    "P": [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0)],
    "T": [(0, 0), (0, 1), (0, 2), (1, 1), (2, 1)],
    "U": [(0, 0), (0, 2), (1, 0), (1, 1), (1, 2)],
    "V": [(0, 0), (1, 0), (2, 0), (2, 1), (2, 2)],
    "W": [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)],
    "X": [(0, 1), (1, 0), (1, 1), (1, 2), (2, 1)],
    "Y": [(0, 1), (1, 0), (1, 1), (2, 1), (3, 1)],
    "Z": [(0, 0), (0, 1), (1, 1), (2, 1), (2, 2)],
}


def pentomino_catalog() -> tuple[TileShape, ...]:
    """The 12 free pentominoes, named F I L N P T U V W X Y Z."""
    return tuple(TileShape.make(name, cells, Symmetry.FREE)
                 for name, cells in sorted(_PENTOMINO_CELLS.items()))

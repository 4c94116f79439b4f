"""Domino tilability via bipartite matching, Hall-violator certificates,
the closed-path constructive tiler, and the flip graph.

The matching view: chessboard-color the region, make one vertex per cell,
join adjacent opposite-color cells, and ask for a perfect matching.  When no
perfect matching exists, alternating-path reachability from the unmatched
cells of the deficient color yields a set S of same-color cells with fewer
than |S| neighbors, which any reader can re-verify by counting.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import GuardLimitExceeded
from .exact_cover import SolveOptions, solve_tilings
from .lattice import (
    Cell,
    Lattice,
    Placement,
    Region,
    Tiling,
    build_rectangle,
    chessboard_coloring,
    domino,
    is_valid_tiling,
    remove_cells,
)

UNREACHABLE = math.inf


# ---------------------------------------------------------------------------
# Hopcroft-Karp matching


def _adjacency(region: Region) -> tuple[list[Cell], list[Cell], dict[Cell, list[Cell]]]:
    coloring = chessboard_coloring(region)
    black = sorted(c for c in region.cells if coloring[c] == 0)
    white = sorted(c for c in region.cells if coloring[c] == 1)
    graph = {b: region.neighbors_in(b) for b in black}
    return black, white, graph


def maximum_matching(left: Sequence[Cell], graph: dict[Cell, list[Cell]]) -> dict[Cell, Cell]:
    """Hopcroft-Karp maximum matching; returns the left-to-right pairing.

    Layered BFS phases with iterative DFS augmentation, so recursion depth
    never limits the board size.
    """
    INF = float("inf")
    pair_l: dict[Cell, Cell] = {}
    pair_r: dict[Cell, Cell] = {}
    dist: dict[Cell, float] = {}

    def bfs() -> bool:
        queue = deque()
        for u in left:
            if u not in pair_l:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = INF
        found = False
        while queue:
            u = queue.popleft()
            for v in graph[u]:
                w = pair_r.get(v)
                if w is None:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs_augment(root: Cell) -> bool:
        # Explicit stack of (vertex, iterator over its edges).
        stack = [(root, iter(graph[root]))]
        path = []
        while stack:
            u, edges = stack[-1]
            advanced = False
            for v in edges:
                w = pair_r.get(v)
                if w is None:
                    path.append((u, v))
                    for uu, vv in path:
                        pair_l[uu] = vv
                        pair_r[vv] = uu
                    return True
                if dist.get(w) == dist[u] + 1:
                    path.append((u, v))
                    stack.append((w, iter(graph[w])))
                    advanced = True
                    break
            if not advanced:
                dist[u] = INF
                stack.pop()
                if path:
                    path.pop()
        return False

    while bfs():
        for u in left:
            if u not in pair_l:
                dfs_augment(u)
    return pair_l


def is_domino_tileable(region: Region) -> bool:
    """Perfect-matching test between the two chessboard color classes."""
    if not region.cells:
        return True
    if len(region) % 2:
        return False
    black, white, graph = _adjacency(region)
    if len(black) != len(white):
        return False
    return len(maximum_matching(black, graph)) == len(black)


def matching_tiling(region: Region) -> Tiling | None:
    """A domino tiling built from a perfect matching, or None."""
    if not region.cells:
        return Tiling(region, frozenset())
    if len(region) % 2:
        return None
    black, white, graph = _adjacency(region)
    if len(black) != len(white):
        return None
    pairing = maximum_matching(black, graph)
    if len(pairing) != len(black):
        return None
    shape = domino()
    placements = frozenset(Placement(shape, frozenset((b, w))) for b, w in pairing.items())
    return Tiling(region, placements)


@dataclass(frozen=True)
class HallViolator:
    """k same-color cells with fewer than k opposite-color neighbors."""

    color: int
    cells: frozenset[Cell]
    neighborhood: frozenset[Cell]

    def verify(self, region: Region) -> bool:
        """Recompute the neighborhood from scratch and re-check the deficit."""
        coloring = chessboard_coloring(region)
        if not self.cells or not self.cells <= region.cells:
            return False
        if any(coloring[c] != self.color for c in self.cells):
            return False
        actual = set()
        for c in self.cells:
            actual.update(region.neighbors_in(c))
        return frozenset(actual) == self.neighborhood and len(actual) < len(self.cells)

    def to_json(self) -> str:
        return json.dumps({
            "S": sorted(self.cells),
            "N": sorted(self.neighborhood),
            "color": self.color,
        }, sort_keys=True)


def hall_certificate(region: Region) -> HallViolator | None:
    """A verified violator when the region is untileable, else None.

    The violator is the set of deficient-color cells reachable from the
    unmatched ones by alternating paths; its neighborhood is then exactly
    the matched partners, which is smaller by the number of unmatched cells.
    """
    if not region.cells:
        return None
    coloring = chessboard_coloring(region)
    black = sorted(c for c in region.cells if coloring[c] == 0)
    white = sorted(c for c in region.cells if coloring[c] == 1)
    # Search from the weakly larger side; ties broken toward black so the
    # certificate is deterministic.
    if len(white) > len(black):
        side, side_color = white, 1
    else:
        side, side_color = black, 0
    graph = {u: region.neighbors_in(u) for u in side}
    pairing = maximum_matching(side, graph)
    if len(pairing) == len(side) and 2 * len(side) == len(region):
        return None
    matched_of = {v: u for u, v in pairing.items()}
    frontier = deque(u for u in side if u not in pairing)
    reached = set(frontier)
    seen_right = set()
    while frontier:
        u = frontier.popleft()
        for v in graph[u]:
            if v in seen_right:
                continue
            seen_right.add(v)
            w = matched_of.get(v)
            if w is not None and w not in reached:
                reached.add(w)
                frontier.append(w)
    violator = HallViolator(side_color, frozenset(reached), frozenset(seen_right))
    assert violator.verify(region), "alternating reachability must yield a violator"
    return violator


# ---------------------------------------------------------------------------
# Closed-path constructive tiler


class PathTilerError(ValueError):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def boustrophedon_cycle(rows: int, cols: int) -> list[Cell]:
    """A fixed Hamiltonian cycle: snake through columns 1.. and return up
    column 0.  Requires even rows and cols >= 2."""
    cycle = [(0, c) for c in range(cols)]
    for r in range(1, rows):
        rng = range(cols - 1, 0, -1) if r % 2 else range(1, cols)
        cycle.extend((r, c) for c in rng)
    cycle.extend((r, 0) for r in range(rows - 1, 0, -1))
    return cycle

def gomory_tiling(rows: int, cols: int, hole1: Cell, hole2: Cell) -> Tiling:
    """Tile the rows x cols board minus two opposite-color holes by pairing
    consecutive cells along the fixed closed path between the holes."""
    if rows % 2 or cols % 2:
        raise PathTilerError("ODD_DIMENSION", "board sides must be even")
    board = build_rectangle(rows, cols)
    for hole in (hole1, hole2):
        if hole not in board:
            raise PathTilerError("OUT_OF_BOUNDS", f"hole {hole} is off the board")
    if hole1 == hole2:
        raise PathTilerError("COINCIDENT_HOLES", "holes must be distinct")
    if (hole1[0] + hole1[1]) % 2 == (hole2[0] + hole2[1]) % 2:
        raise PathTilerError("SAME_COLOR", "holes must have opposite colors")
    cycle = boustrophedon_cycle(rows, cols)
    i1, i2 = sorted((cycle.index(hole1), cycle.index(hole2)))
    arcs = [cycle[i1 + 1:i2], cycle[i2 + 1:] + cycle[:i1]]
    shape = domino()
    placements = []
    for arc in arcs:
        assert len(arc) % 2 == 0, "opposite-color holes split the cycle evenly"
        for i in range(0, len(arc), 2):
            placements.append(Placement(shape, frozenset(arc[i:i + 2])))
    tiling = Tiling(remove_cells(board, [hole1, hole2]), frozenset(placements))
    assert is_valid_tiling(tiling)
    return tiling


# ---------------------------------------------------------------------------
# Flips


@dataclass(frozen=True)
class Flip:
    """A 2x2 block whose two parallel dominoes get their orientation reversed."""

    anchor: Cell
    horizontal_before: bool

    def block(self) -> tuple[Cell, Cell, Cell, Cell]:
        r, c = self.anchor
        return ((r, c), (r, c + 1), (r + 1, c), (r + 1, c + 1))

    def dominoes_before(self) -> tuple[frozenset[Cell], frozenset[Cell]]:
        r, c = self.anchor
        if self.horizontal_before:
            return (frozenset({(r, c), (r, c + 1)}), frozenset({(r + 1, c), (r + 1, c + 1)}))
        return (frozenset({(r, c), (r + 1, c)}), frozenset({(r, c + 1), (r + 1, c + 1)}))

    def dominoes_after(self) -> tuple[frozenset[Cell], frozenset[Cell]]:
        return Flip(self.anchor, not self.horizontal_before).dominoes_before()

    def reversed(self) -> "Flip":
        """The same-position flip that undoes this one."""
        return Flip(self.anchor, not self.horizontal_before)


def _domino_sets(tiling: Tiling) -> set[frozenset[Cell]]:
    sets = set()
    for p in tiling.placements:
        if len(p.cells) != 2:
            raise ValueError("flips are defined for domino tilings only")
        sets.add(p.cells)
    return sets


def flip_moves(tiling: Tiling) -> list[Flip]:
    """All applicable flips, ordered by anchor."""
    dominoes = _domino_sets(tiling)
    moves = []
    for r, c in sorted(tiling.region.cells):
        h = Flip((r, c), True)
        v = Flip((r, c), False)
        if all(x in dominoes for x in h.dominoes_before()):
            moves.append(h)
        elif all(x in dominoes for x in v.dominoes_before()):
            moves.append(v)
    return moves

def apply_flip(tiling: Tiling, flip: Flip) -> Tiling:
    """Reverse one 2x2 block; applying the same-position flip again undoes it."""
    dominoes = _domino_sets(tiling)
    before = flip.dominoes_before()
    if not all(d in dominoes for d in before):
        raise ValueError(f"flip at {flip.anchor} does not apply")
    shape = domino()
    replaced = (dominoes - set(before)) | set(flip.dominoes_after())
    return Tiling(tiling.region, frozenset(Placement(shape, d) for d in replaced))


def _flip_neighbors(key: frozenset[frozenset[Cell]]) -> Iterator[frozenset[frozenset[Cell]]]:
    dominoes = set(key)
    anchors = set()
    for d in dominoes:
        for r, c in d:
            anchors.add((r, c))
            anchors.add((r, c - 1))
            anchors.add((r - 1, c))
            anchors.add((r - 1, c - 1))
    for anchor in sorted(anchors):
        for horizontal in (True, False):
            f = Flip(anchor, horizontal)
            before = f.dominoes_before()
            if all(d in dominoes for d in before):
                yield frozenset((dominoes - set(before)) | set(f.dominoes_after()))


def enumerate_domino_tilings(region: Region, guard: int = 200000) -> list[Tiling]:
    """All domino tilings via the exact-cover solver, guarded by count."""
    out = []
    for tiling in solve_tilings(region, [domino()], SolveOptions()):
        out.append(tiling)
        if len(out) > guard:
            raise GuardLimitExceeded(f"more than {guard} tilings")
    return out


def flip_components(region: Region, guard: int = 200000) -> list[list[Tiling]]:
    """Partition of all domino tilings into flip-connected classes.

    Components are explored by breadth-first search over the flip graph and
    returned largest-first (ties by first appearance).
    """
    tilings = enumerate_domino_tilings(region, guard)
    by_key = {frozenset(_domino_sets(t)): t for t in tilings}
    unseen = dict(by_key)
    components = []
    for key in sorted(by_key, key=lambda k: sorted(map(sorted, k))):
        if key not in unseen:
            continue
        queue = deque([key])
        del unseen[key]
        comp = [by_key[key]]
        while queue:
            cur = queue.popleft()
            for nxt in _flip_neighbors(cur):
                if nxt in unseen:
                    del unseen[nxt]
                    comp.append(by_key[nxt])
                    queue.append(nxt)
        components.append(comp)
    components.sort(key=len, reverse=True)
    return components


def flip_distance(region: Region, t1: Tiling, t2: Tiling) -> int | float:
    """Shortest number of flips from t1 to t2, or UNREACHABLE."""
    for t in (t1, t2):
        if not is_valid_tiling(t) or t.region.cells != region.cells:
            raise ValueError("flip distance needs valid tilings of the region")
    start = frozenset(_domino_sets(t1))
    goal = frozenset(_domino_sets(t2))
    if start == goal:
        return 0
    dist = {start: 0}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt in _flip_neighbors(cur):
            if nxt in dist:
                continue
            dist[nxt] = dist[cur] + 1
            if nxt == goal:
                return dist[nxt]
            queue.append(nxt)
    return UNREACHABLE


# ---------------------------------------------------------------------------
# Region predicates used by the flip-connectivity property suite


def is_simply_connected(region: Region) -> bool:
    """Connected region whose complement (inside the bounding box plus a
    one-cell border ring) is also connected."""
    if region.lattice is not Lattice.SQUARE:
        raise ValueError("simple connectivity test is for square regions")
    if not region.cells:
        return True
    if not region.is_connected():
        return False
    min_r, min_c, max_r, max_c = region.bounding_box
    outside = [(r, c)
               for r in range(min_r - 1, max_r + 2)
               for c in range(min_c - 1, max_c + 2)
               if (r, c) not in region.cells]
    start = (min_r - 1, min_c - 1)
    seen = {start}
    stack = [start]
    cells = set(outside)
    while stack:
        r, c = stack.pop()
        for n in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
            if n in cells and n not in seen:
                seen.add(n)
                stack.append(n)
    return len(seen) == len(outside)

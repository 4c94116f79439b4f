"""Squared-rectangle layouts, their linear systems, and the electrical view.

A layout names the horizontal and vertical lines of a dissection and which
four lines each square touches.  The side lengths then satisfy one equation
per internal line (what sits on it equals what hangs from it) plus two
closure equations making the boundary sides agree.  That homogeneous system
always has a one-dimensional solution space for a well-posed layout; the
positive primitive integer solution is the squared rectangle.

The same data reads as a current network: one node per horizontal line, one
unit resistor per square from its top line to its bottom line.  Line
equations become current conservation, the geometry of vertical lines
becomes Ohm's law, and a squared square is exactly total resistance 1.

Everything here is exact rational arithmetic; no floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable


class LayoutError(ValueError):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class SquareSpec:
    label: str
    top: str
    bottom: str
    left: str
    right: str


@dataclass(frozen=True)
class SquaredLayout:
    hlines: tuple[str, ...]  # top boundary first
    vlines: tuple[str, ...]  # left boundary first
    squares: tuple[SquareSpec, ...]

    def __post_init__(self) -> None:
        if len(set(self.hlines)) != len(self.hlines) or len(set(self.vlines)) != len(self.vlines):
            raise LayoutError("MALFORMED", "duplicate line identifiers")
        if len(self.hlines) < 2 or len(self.vlines) < 2 or not self.squares:
            raise LayoutError("MALFORMED", "need two boundaries per axis and a square")
        hpos = {h: i for i, h in enumerate(self.hlines)}
        vpos = {v: i for i, v in enumerate(self.vlines)}
        labels = set()
        for sq in self.squares:
            if sq.label in labels:
                raise LayoutError("MALFORMED", f"duplicate square label {sq.label!r}")
            labels.add(sq.label)
            if sq.top not in hpos or sq.bottom not in hpos:
                raise LayoutError("MALFORMED", f"square {sq.label!r} names unknown hline")
            if sq.left not in vpos or sq.right not in vpos:
                raise LayoutError("MALFORMED", f"square {sq.label!r} names unknown vline")
            if hpos[sq.top] >= hpos[sq.bottom]:
                raise LayoutError("MALFORMED", f"square {sq.label!r} top must precede bottom")
            if vpos[sq.left] >= vpos[sq.right]:
                raise LayoutError("MALFORMED", f"square {sq.label!r} left must precede right")
        for line, field in ((self.hlines[0], "top"), (self.hlines[-1], "bottom")):
            if not any(getattr(sq, field) == line for sq in self.squares):
                raise LayoutError("MALFORMED", f"boundary line {line!r} unused")
        for line, field in ((self.vlines[0], "left"), (self.vlines[-1], "right")):
            if not any(getattr(sq, field) == line for sq in self.squares):
                raise LayoutError("MALFORMED", f"boundary line {line!r} unused")


def layout_from_json(text: str) -> SquaredLayout:
    data = json.loads(text)
    squares = tuple(SquareSpec(s["label"], s["top"], s["bottom"], s["left"], s["right"])
                    for s in data["squares"])
    return SquaredLayout(tuple(data["hlines"]), tuple(data["vlines"]), squares)


def layout_to_json(layout: SquaredLayout) -> str:
    return json.dumps({
        "hlines": list(layout.hlines),
        "vlines": list(layout.vlines),
        "squares": [{"label": s.label, "top": s.top, "bottom": s.bottom,
                     "left": s.left, "right": s.right} for s in layout.squares],
    }, indent=2, sort_keys=True)


@dataclass(frozen=True)
class LayoutSolution:
    sides: dict[str, int]
    width: int
    height: int

    def side_tuple(self) -> tuple[int, ...]:
        return tuple(v for _, v in sorted(self.sides.items()))

    def to_json(self) -> str:
        return json.dumps({
            "sides": dict(sorted(self.sides.items())),
            "width": self.width,
            "height": self.height,
        }, sort_keys=True)


def _nullspace_vector(rows: list[list[Fraction]], n: int) -> list[Fraction] | None:
    """Basis vector of a one-dimensional nullspace, or None if nullity != 1.

    Returns None also for nullity 0; callers distinguish via matrix rank.
    """
    matrix = [row[:] for row in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(n):
        pivot_row = None
        for r in range(rank, len(matrix)):
            if matrix[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        pv = matrix[rank][col]
        matrix[rank] = [x / pv for x in matrix[rank]]
        for r in range(len(matrix)):
            if r != rank and matrix[r][col] != 0:
                f = matrix[r][col]
                matrix[r] = [a - f * b for a, b in zip(matrix[r], matrix[rank])]
        pivots.append(col)
        rank += 1
    if n - rank != 1:
        return None
    free = next(c for c in range(n) if c not in pivots)
    vec = [Fraction(0)] * n
    vec[free] = Fraction(1)
    for row, col in zip(matrix, pivots):
        vec[col] = -row[free]
    return vec


def _line_equations(layout: SquaredLayout) -> list[list[Fraction]]:
    index = {sq.label: i for i, sq in enumerate(layout.squares)}
    n = len(layout.squares)
    rows = []

    def equation(plus: Iterable[str], minus: Iterable[str]) -> list[Fraction]:
        row = [Fraction(0)] * n
        for label in plus:
            row[index[label]] += 1
        for label in minus:
            row[index[label]] -= 1
        return row

    for line in layout.hlines[1:-1]:
        sitting = [sq.label for sq in layout.squares if sq.bottom == line]
        hanging = [sq.label for sq in layout.squares if sq.top == line]
        rows.append(equation(sitting, hanging))
    for line in layout.vlines[1:-1]:
        left_of = [sq.label for sq in layout.squares if sq.right == line]
        right_of = [sq.label for sq in layout.squares if sq.left == line]
        rows.append(equation(left_of, right_of))
    top = [sq.label for sq in layout.squares if sq.top == layout.hlines[0]]
    bottom = [sq.label for sq in layout.squares if sq.bottom == layout.hlines[-1]]
    rows.append(equation(top, bottom))
    left = [sq.label for sq in layout.squares if sq.left == layout.vlines[0]]
    right = [sq.label for sq in layout.squares if sq.right == layout.vlines[-1]]
    rows.append(equation(left, right))
    return rows


def solve_layout(layout: SquaredLayout) -> LayoutSolution:
    """Positive primitive integer side lengths, plus the rectangle size.

    Raises INCONSISTENT when only the zero solution exists, DEGENERATE when
    the solution space has more than one dimension, and NONPOSITIVE when the
    one-dimensional solution has mixed signs or zeros.
    """
    n = len(layout.squares)
    rows = _line_equations(layout)
    vec = _nullspace_vector(rows, n)
    if vec is None:
        # distinguish: nullity 0 -> inconsistent, nullity > 1 -> degenerate
        rank = _rank(rows, n)
        if n - rank == 0:
            raise LayoutError("INCONSISTENT", "only the zero solution satisfies the equations")
        raise LayoutError("DEGENERATE", f"solution space has dimension {n - rank}")
    if all(x < 0 for x in vec):
        vec = [-x for x in vec]
    if any(x <= 0 for x in vec):
        raise LayoutError("NONPOSITIVE", "side lengths are not all positive")
    denom_lcm = 1
    for x in vec:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    sides = {sq.label: ints[i] for i, sq in enumerate(layout.squares)}
    width = sum(sides[sq.label] for sq in layout.squares if sq.top == layout.hlines[0])
    height = sum(sides[sq.label] for sq in layout.squares if sq.left == layout.vlines[0])
    return LayoutSolution(sides, width, height)


def _rank(rows: list[list[Fraction]], n: int) -> int:
    matrix = [row[:] for row in rows]
    rank = 0
    for col in range(n):
        pivot_row = None
        for r in range(rank, len(matrix)):
            if matrix[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        pv = matrix[rank][col]
        for r in range(rank + 1, len(matrix)):
            if matrix[r][col] != 0:
                f = matrix[r][col] / pv
                matrix[r] = [a - f * b for a, b in zip(matrix[r], matrix[rank])]
        rank += 1
    return rank


def layout_nullity(layout: SquaredLayout) -> int:
    n = len(layout.squares)
    return n - _rank(_line_equations(layout), n)


# ---------------------------------------------------------------------------
# The electrical network


@dataclass(frozen=True)
class SmithNetwork:
    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]  # (square label, top node, bottom node)
    source: str
    sink: str


def to_smith_network(layout: SquaredLayout) -> SmithNetwork:
    """One node per horizontal line, one directed edge per square."""
    edges = tuple((sq.label, sq.top, sq.bottom) for sq in layout.squares)
    network = SmithNetwork(tuple(layout.hlines), edges, layout.hlines[0], layout.hlines[-1])
    if not _connected(network):
        raise LayoutError("MALFORMED", "network is not connected")
    return network


def _connected(network: SmithNetwork) -> bool:
    adj: dict[str, set[str]] = {node: set() for node in network.nodes}
    for _, top, bottom in network.edges:
        adj[top].add(bottom)
        adj[bottom].add(top)
    seen = {network.source}
    stack = [network.source]
    while stack:
        for nxt in adj[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen == set(network.nodes)


def validate_kirchhoff(network: SmithNetwork, sides: dict[str, int | Fraction]) -> bool:
    """Check the electrical reading of a solution: with edge currents equal
    to the side lengths and unit resistances, current is conserved at every
    internal node and potential drops (line heights) match currents."""
    currents = {label: Fraction(sides[label]) for label, _, _ in network.edges}
    for node in network.nodes:
        if node in (network.source, network.sink):
            continue
        inflow = sum(currents[label] for label, _, bottom in network.edges if bottom == node)
        outflow = sum(currents[label] for label, top, _ in network.edges if top == node)
        if inflow != outflow:
            return False
    # Potentials exist iff every edge drops exactly its current.
    potential: dict[str, Fraction] = {network.source: Fraction(0)}
    frontier = [network.source]
    while frontier:
        node = frontier.pop()
        for label, top, bottom in network.edges:
            if top == node and bottom not in potential:
                potential[bottom] = potential[node] + currents[label]
                frontier.append(bottom)
            elif bottom == node and top not in potential:
                potential[top] = potential[node] - currents[label]
                frontier.append(top)
    for label, top, bottom in network.edges:
        if potential[bottom] - potential[top] != currents[label]:
            return False
    return True


def total_resistance(network: SmithNetwork) -> Fraction:
    """Source-to-sink effective resistance with every edge a unit resistor,
    by exact nodal analysis: ground the sink, inject one ampere at the
    source, and read off the source potential."""
    nodes = [node for node in network.nodes if node != network.sink]
    index = {node: i for i, node in enumerate(nodes)}
    n = len(nodes)
    matrix = [[Fraction(0)] * (n + 1) for _ in range(n)]
    for _, top, bottom in network.edges:
        for a, b in ((top, bottom), (bottom, top)):
            if a == network.sink:
                continue
            i = index[a]
            matrix[i][i] += 1
            if b != network.sink:
                matrix[i][index[b]] -= 1
    matrix[index[network.source]][n] += 1
    for col in range(n):
        pivot = next(r for r in range(col, n) if matrix[r][col] != 0)
        matrix[col], matrix[pivot] = matrix[pivot], matrix[col]
        pv = matrix[col][col]
        matrix[col] = [x / pv for x in matrix[col]]
        for r in range(n):
            if r != col and matrix[r][col] != 0:
                f = matrix[r][col]
                matrix[r] = [a - f * b for a, b in zip(matrix[r], matrix[col])]
    return matrix[index[network.source]][n]


def is_perfect(sides: dict[str, int]) -> bool:
    """All square sizes pairwise distinct."""
    values = list(sides.values())
    return len(set(values)) == len(values)


def is_squared_square(solution: LayoutSolution) -> bool:
    return solution.width == solution.height


# ---------------------------------------------------------------------------
# Geometry reconstruction


def reconstruct_geometry(layout: SquaredLayout,
                         solution: LayoutSolution) -> dict[str, tuple[int, int, int]]:
    """Place every square as (x, y, size) and verify the placement: consistent
    line coordinates, no overlaps, and exact area fill."""
    sides = solution.sides
    ys: dict[str, int] = {layout.hlines[0]: 0}
    xs: dict[str, int] = {layout.vlines[0]: 0}
    changed = True
    while changed:
        changed = False
        for sq in layout.squares:
            s = sides[sq.label]
            if sq.top in ys and sq.bottom not in ys:
                ys[sq.bottom] = ys[sq.top] + s
                changed = True
            if sq.bottom in ys and sq.top not in ys:
                ys[sq.top] = ys[sq.bottom] - s
                changed = True
            if sq.left in xs and sq.right not in xs:
                xs[sq.right] = xs[sq.left] + s
                changed = True
            if sq.right in xs and sq.left not in xs:
                xs[sq.left] = xs[sq.right] - s
                changed = True
    placed = {}
    for sq in layout.squares:
        s = sides[sq.label]
        if ys[sq.bottom] - ys[sq.top] != s or xs[sq.right] - xs[sq.left] != s:
            raise LayoutError("MALFORMED", f"square {sq.label!r} does not fit its lines")
        placed[sq.label] = (xs[sq.left], ys[sq.top], s)
    if sum(s * s for _, _, s in placed.values()) != solution.width * solution.height:
        raise LayoutError("MALFORMED", "areas do not fill the rectangle")
    items = sorted(placed.items())
    for i, (la, (xa, ya, sa)) in enumerate(items):
        if not (0 <= xa and xa + sa <= solution.width and 0 <= ya and ya + sa <= solution.height):
            raise LayoutError("MALFORMED", f"square {la!r} sticks out of the rectangle")
        for lb, (xb, yb, sb) in items[i + 1:]:
            if xa < xb + sb and xb < xa + sa and ya < yb + sb and yb < ya + sa:
                raise LayoutError("MALFORMED", f"squares {la!r} and {lb!r} overlap")
    return placed

"""Rectangle-in-rectangle and similar-rectangle tiling criteria.

Three independent deciders live here: the brick-in-box test (three arithmetic
conditions), the square-by-similar-rectangles criterion (all conjugates of
the side ratio must have positive real part, decided by an exact-rational
Routh table), and small guillotine constructions that realize the positive
cases geometrically.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from mpmath import mp

from .errors import GuardLimitExceeded

REPRESENTABLE_GUARD = 10 ** 6


@dataclass(frozen=True)
class Representation:
    """t = alpha*a + beta*b with nonnegative integers, when possible."""

    ok: bool
    alpha: int | None = None
    beta: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def sum_representable(t: int, a: int, b: int) -> Representation:
    """Dynamic program over 0..t for the two-coin representability question."""
    if a < 1 or b < 1 or t < 0:
        raise ValueError("need positive part sizes and nonnegative target")
    if t > REPRESENTABLE_GUARD:
        raise GuardLimitExceeded(f"target {t} exceeds the representability guard")
    # step[v] remembers which part reached v first, for witness recovery
    step = [None] * (t + 1)
    reachable = [False] * (t + 1)
    reachable[0] = True
    for v in range(1, t + 1):
        if v >= a and reachable[v - a]:
            reachable[v] = True
            step[v] = a
        elif v >= b and reachable[v - b]:
            reachable[v] = True
            step[v] = b
    if not reachable[t]:
        return Representation(False)
    alpha = beta = 0
    v = t
    while v:
        if step[v] == a:
            alpha += 1
            v -= a
        else:
            beta += 1
            v -= b
    return Representation(True, alpha, beta)


@dataclass(frozen=True)
class DBKDecision:
    """Verdict and per-condition evidence for tiling an m x n box with
    a x b bricks in either orientation."""

    m: int
    n: int
    a: int
    b: int
    area_divisible: bool
    m_representable: Representation
    n_representable: Representation
    a_divides: bool
    b_divides: bool
    tileable: bool

    def __bool__(self) -> bool:
        return self.tileable

    def failing_conditions(self) -> list[str]:
        out = []
        if not self.area_divisible:
            out.append("area")
        if not (self.m_representable and self.n_representable):
            out.append("representability")
        if not (self.a_divides and self.b_divides):
            out.append("divisibility")
        return out

    def to_json(self) -> str:
        return json.dumps({
            "instance": [self.m, self.n, self.a, self.b],
            "tileable": self.tileable,
            "area_divisible": self.area_divisible,
            "m_representable": self.m_representable.ok,
            "n_representable": self.n_representable.ok,
            "a_divides": self.a_divides,
            "b_divides": self.b_divides,
            "failing": self.failing_conditions(),
        }, sort_keys=True)


def debruijn_klarner(m: int, n: int, a: int, b: int) -> DBKDecision:
    """The three-condition decision: area divisibility, first row/column
    coverable, and a side divisible by each brick dimension."""
    if min(m, n, a, b) < 1:
        raise ValueError("all dimensions must be positive")
    area = (m * n) % (a * b) == 0
    rep_m = sum_representable(m, a, b)
    rep_n = sum_representable(n, a, b)
    a_div = m % a == 0 or n % a == 0
    b_div = m % b == 0 or n % b == 0
    verdict = area and bool(rep_m) and bool(rep_n) and a_div and b_div
    return DBKDecision(m, n, a, b, area, rep_m, rep_n, a_div, b_div, verdict)


# ---------------------------------------------------------------------------
# Routh-Hurwitz over exact rationals


@dataclass(frozen=True)
class StabilityResult:
    stable: bool
    boundary: bool  # a degenerate table row (zero pivot or zero row) appeared


def hurwitz_stable(coeffs: Sequence[int | Fraction]) -> StabilityResult:
    """Whether all roots of c0 + c1 t + ... + cd t^d have negative real part.

    Classic Routh table with exact Fraction arithmetic.  A zero pivot or an
    all-zero row means roots on or symmetric about the imaginary axis; those
    cases report not-stable with the boundary flag set, which is the correct
    answer for a strict half-plane test.
    """
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    if not c:
        raise ValueError("zero polynomial")
    d = len(c) - 1
    if d == 0:
        return StabilityResult(True, False)  # no roots at all
    if c[-1] < 0:
        c = [-x for x in c]
    # Row k of the table has the structural length (d - k)//2 + 1; interior
    # zeros are meaningful, so rows are never trimmed by value.
    hi = c[d::-2]  # c_d, c_{d-2}, ...
    lo = c[d - 1::-2]
    first_column = [hi[0]]
    for k in range(1, d + 1):
        if all(x == 0 for x in lo):
            return StabilityResult(False, True)
        pivot = lo[0]
        if pivot == 0:
            return StabilityResult(False, True)
        first_column.append(pivot)
        if k == d:
            break
        target_len = (d - k - 1) // 2 + 1
        nxt = []
        for i in range(target_len):
            hi_v = hi[i + 1] if i + 1 < len(hi) else Fraction(0)
            lo_v = lo[i + 1] if i + 1 < len(lo) else Fraction(0)
            nxt.append((pivot * hi_v - hi[0] * lo_v) / pivot)
        hi, lo = lo, nxt
    stable = all(x > 0 for x in first_column)
    return StabilityResult(stable, False)


def rational_roots(coeffs: Sequence[int]) -> list[Fraction]:
    """All rational roots (with multiplicity) of an integer polynomial,
    found by the rational root theorem and exact deflation."""
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    if len(c) <= 1:
        return []
    roots = []
    while len(c) > 1:
        low = next(i for i, x in enumerate(c) if x != 0)
        if low > 0:
            roots.extend([Fraction(0)] * low)
            c = c[low:]
            if len(c) == 1:
                break
        lead = c[-1]
        const = c[0]
        found = None
        for p in _divisors(abs(const.numerator * const.denominator)):
            for q in _divisors(abs(lead.numerator * lead.denominator)):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if _poly_eval(c, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        c = _poly_deflate(c, found)
    return sorted(roots)


def _divisors(n: int, cap: int = 10 ** 6) -> list[int]:
    """Divisors of n found by trial division up to the cap (paired with
    their large complements).  Possibly incomplete for huge n; callers only
    use this for best-effort root stripping, never for the final verdict."""
    if n == 0:
        return [1]
    out = set()
    for i in range(1, min(int(math.isqrt(n)), cap) + 1):
        if n % i == 0:
            out.add(i)
            out.add(n // i)
    return sorted(out)


def _poly_eval(c: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for coef in reversed(c):
        acc = acc * x + coef
    return acc


def _poly_deflate(c: Sequence[Fraction], root: Fraction) -> list[Fraction]:
    # synthetic division by (x - root)
    out = [Fraction(0)] * (len(c) - 1)
    acc = Fraction(0)
    for i in range(len(c) - 1, 0, -1):
        acc = c[i] + acc * root
        out[i - 1] = acc
    return out


@dataclass(frozen=True)
class SimilarityDecision:
    """Whether a square is tileable by rectangles similar to 1 x x, where x
    is a root of the given least-degree integer polynomial."""

    tileable: bool
    boundary: bool
    coefficients: tuple[int, ...]
    stripped_roots: tuple[Fraction, ...]

    def __bool__(self) -> bool:
        return self.tileable

    def to_json(self) -> str:
        return json.dumps({
            "tileable": self.tileable,
            "boundary": self.boundary,
            "coefficients": list(self.coefficients),
            "stripped_roots": [str(r) for r in self.stripped_roots],
        }, sort_keys=True)


def similar_rect_square_tileable(coeffs: Sequence[int]) -> SimilarityDecision:
    """True iff every complex root of the polynomial has strictly positive
    real part, via the exact Routh table on the sign-flipped variable.

    Rational roots are deflated first and reported; that only reduces the
    polynomial the caller should not have inflated (a least-degree polynomial
    of an irrational has no rational roots), and the deflated roots still
    enter the verdict by direct sign inspection.
    """
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    if not c:
        raise ValueError("zero polynomial")
    if len(c) == 1:
        raise ValueError("constant polynomial has no root to test")
    stripped = rational_roots(c)
    reduced = [Fraction(x) for x in c]
    for root in stripped:
        reduced = _poly_deflate(reduced, root)
    rational_part_ok = all(r > 0 for r in stripped)
    boundary = any(r == 0 for r in stripped)
    if len(reduced) > 1:
        flipped = [x if i % 2 == 0 else -x for i, x in enumerate(reduced)]
        res = hurwitz_stable(flipped)
        verdict = rational_part_ok and res.stable
        boundary = boundary or res.boundary
    else:
        verdict = rational_part_ok
    return SimilarityDecision(verdict, boundary, tuple(c), tuple(stripped))


def cube_root_family(r: int, s: int) -> SimilarityDecision:
    """Criterion for the ratio r/s plus the cube root of 2: builds the cubic
    it satisfies and decides tileability; true exactly when 4 r^3 > s^3."""
    if s < 1:
        raise ValueError("s must be a positive integer")
    coeffs = [-(r ** 3 + 2 * s ** 3), 3 * r * r * s, -3 * r * s * s, s ** 3]
    return similar_rect_square_tileable(coeffs)


# ---------------------------------------------------------------------------
# Row-stack constructions


def row_stack_roots(k: int, dps: int = 40):
    """Both roots of k x^2 - k x + 1 = 0 when real, largest first; None when
    the discriminant is negative (k <= 3)."""
    if k < 1:
        raise ValueError("k must be positive")
    disc = k * k - 4 * k
    if disc < 0:
        return None
    with mp.workdps(dps):
        root = mp.sqrt(disc)
        return ((k + root) / (2 * k), (k - root) / (2 * k))


def verify_row_stack_layout(x: float, k: int, tolerance: float = 1e-12) -> bool:
    """Check the k-in-a-row-plus-cap construction at ratio x: the cap is
    1 wide and x tall, the k small pieces are x(1-x) wide and 1-x tall,
    everything is similar to 1 x x and exactly fills the unit square."""
    if k < 1:
        raise ValueError("k must be positive")
    x = float(x)
    if not 0 < x < 1:
        return False
    if abs(k * x * (1 - x) - 1) > tolerance:
        return False
    small_w, small_h = x * (1 - x), 1 - x
    if abs(small_w / small_h - x) > tolerance:
        return False
    return abs(x + small_h - 1) <= tolerance and abs(k * small_w - 1) <= tolerance


# ---------------------------------------------------------------------------
# Guillotine search for similar-rectangle tilings of the square

# A slicing layout with every leaf similar to 1 x x has a height/width ratio
# computable bottom-up: a leaf contributes x or 1/x, a vertical stack adds
# ratios, and a side-by-side join combines them like parallel resistors.
# The square asks for total ratio exactly 1.


@dataclass(frozen=True)
class LayoutPiece:
    x: float
    y: float
    width: float
    height: float


@dataclass(frozen=True)
class SimilarLayout:
    ratio: float
    pieces: tuple[LayoutPiece, ...]

    def to_json(self) -> str:
        return json.dumps({
            "ratio": self.ratio,
            "pieces": [[p.x, p.y, p.width, p.height] for p in self.pieces],
        }, sort_keys=True)


def _expressions(leaves: int) -> Iterator[tuple]:
    """All slicing trees with the given number of leaves.

    Trees are ("leaf", upright) with upright in {True, False}, or
    (op, left, right) with op "stack" (horizontal cut) or "row"
    (vertical cut)."""
    if leaves == 1:
        yield ("leaf", True)
        yield ("leaf", False)
        return
    for left_leaves in range(1, leaves):
        for left in _expressions(left_leaves):
            for right in _expressions(leaves - left_leaves):
                yield ("stack", left, right)
                yield ("row", left, right)


def _ratio(expr: tuple, x: float) -> float:
    if expr[0] == "leaf":
        return x if expr[1] else 1.0 / x
    a = _ratio(expr[1], x)
    b = _ratio(expr[2], x)
    if expr[0] == "stack":
        return a + b
    return 1.0 / (1.0 / a + 1.0 / b)


def _realize(expr: tuple, x: float, px: float, py: float,
             width: float, height: float, out: list[LayoutPiece]) -> None:
    if expr[0] == "leaf":
        out.append(LayoutPiece(px, py, width, height))
        return
    ra = _ratio(expr[1], x)
    rb = _ratio(expr[2], x)
    if expr[0] == "stack":
        ha = height * ra / (ra + rb)
        _realize(expr[1], x, px, py, width, ha, out)
        _realize(expr[2], x, px, py + ha, width, height - ha, out)
    else:
        wa = width * (1.0 / ra) / (1.0 / ra + 1.0 / rb)
        _realize(expr[1], x, px, py, wa, height, out)
        _realize(expr[2], x, px + wa, py, width - wa, height, out)


def find_similar_guillotine_tiling(x: float, max_pieces: int,
                                   tolerance: float = 1e-9) -> SimilarLayout | None:
    """Search slicing layouts with at most max_pieces leaves, all similar to
    1 x x, filling the unit square; returns the first (fewest-piece) hit."""
    if x <= 0:
        raise ValueError("ratio must be positive")
    if not 1 <= max_pieces <= 5:
        raise ValueError("max_pieces must be between 1 and 5")
    x = float(x)
    for leaves in range(1, max_pieces + 1):
        for expr in _expressions(leaves):
            if abs(_ratio(expr, x) - 1.0) < tolerance:
                pieces: list[LayoutPiece] = []
                _realize(expr, x, 0.0, 0.0, 1.0, 1.0, pieces)
                layout = SimilarLayout(x, tuple(pieces))
                assert verify_similar_layout(layout, tolerance)
                return layout
    return None


def verify_similar_layout(layout: SimilarLayout, tolerance: float = 1e-9) -> bool:
    """Pieces similar to 1 x ratio, areas summing to 1, pairwise disjoint."""
    x = layout.ratio
    total = 0.0
    for p in layout.pieces:
        if p.width <= 0 or p.height <= 0:
            return False
        r = p.height / p.width
        if min(abs(r - x), abs(r - 1.0 / x)) > tolerance:
            return False
        total += p.width * p.height
    if abs(total - 1.0) > tolerance:
        return False
    for a, b in itertools.combinations(layout.pieces, 2):
        overlap_w = min(a.x + a.width, b.x + b.width) - max(a.x, b.x)
        overlap_h = min(a.y + a.height, b.y + b.height) - max(a.y, b.y)
        if overlap_w > tolerance and overlap_h > tolerance:
            return False
    return True

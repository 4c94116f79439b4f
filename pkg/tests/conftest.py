import random

import pytest

from tilings.lattice import Lattice, Region, build_rectangle


def grow_random_region(rng: random.Random, cells: int, lattice=Lattice.SQUARE) -> Region:
    """Connected random region grown cell by cell from the origin."""
    region = {(0, 0)}
    while len(region) < cells:
        frontier = set()
        for r, c in region:
            for n in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                if n not in region:
                    frontier.add(n)
        region.add(rng.choice(sorted(frontier)))
    return Region(lattice, frozenset(region))


def random_subregion_of(rng: random.Random, rows: int, cols: int, keep: int) -> Region:
    cells = [(r, c) for r in range(rows) for c in range(cols)]
    return Region(Lattice.SQUARE, frozenset(rng.sample(cells, keep)))


@pytest.fixture
def rng():
    return random.Random(20240915)


def two_six_by_five():
    """The pair of 6x5 rectangles (gap of two columns) and its symmetry
    group: each rectangle's own symmetries plus the swap, order 32."""
    from tilings.exact_cover import group_from_generators

    left = {(r, c) for r in range(6) for c in range(5)}
    right = {(r, c + 7) for r, c in left}
    region = Region(Lattice.SQUARE, frozenset(left | right))

    def element(f_left, f_right, swap):
        # f_left/f_right act in each rectangle's local coordinates;
        # swap exchanges which rectangle the image lands in
        out = {}
        for r, c in region.cells:
            if c < 5:
                rr, cc = f_left(r, c)
                out[(r, c)] = (rr, cc + (7 if swap else 0))
            else:
                rr, cc = f_right(r, c - 7)
                out[(r, c)] = (rr, cc + (0 if swap else 7))
        return out

    def ident(r, c):
        return (r, c)

    def flip_h(r, c):
        return (r, 4 - c)

    def flip_v(r, c):
        return (5 - r, c)

    generators = [
        element(flip_h, ident, False),
        element(flip_v, ident, False),
        element(ident, flip_h, False),
        element(ident, flip_v, False),
        element(ident, ident, True),
    ]
    return region, group_from_generators(generators)


@pytest.fixture
def board_8x8():
    return build_rectangle(8, 8)

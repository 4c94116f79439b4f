from fractions import Fraction

import pytest

from tilings.squared import (
    LayoutError,
    SquareSpec,
    SquaredLayout,
    is_perfect,
    is_squared_square,
    layout_from_json,
    layout_nullity,
    layout_to_json,
    reconstruct_geometry,
    solve_layout,
    to_smith_network,
    total_resistance,
    validate_kirchhoff,
)

import importlib.resources as resources


def nine_square_layout() -> SquaredLayout:
    text = resources.files("tilings").joinpath("data/nine_square.json").read_text()
    return layout_from_json(text)


def test_repo_layout_file_matches_packaged_data():
    from pathlib import Path

    repo = Path(__file__).resolve().parent.parent / "layouts" / "nine_square.json"
    packaged = resources.files("tilings").joinpath("data/nine_square.json").read_text()
    assert repo.read_text() == packaged


SINGLE = SquaredLayout(("t", "b"), ("l", "r"), (SquareSpec("s", "t", "b", "l", "r"),))
TWO_BESIDE = SquaredLayout(("t", "b"), ("l", "m", "r"), (
    SquareSpec("p", "t", "b", "l", "m"), SquareSpec("q", "t", "b", "m", "r")))
TWO_STACKED = SquaredLayout(("t", "m", "b"), ("l", "r"), (
    SquareSpec("p", "t", "m", "l", "r"), SquareSpec("q", "m", "b", "l", "r")))
STACK_AND_SIDE = SquaredLayout(("t", "m", "b"), ("l", "c", "r"), (
    SquareSpec("A", "t", "m", "l", "c"),
    SquareSpec("B", "m", "b", "l", "c"),
    SquareSpec("C", "t", "b", "c", "r")))


class TestNineSquare:
    def test_exact_sides(self):
        solution = solve_layout(nine_square_layout())
        assert solution.sides == {"a": 15, "b": 8, "c": 9, "d": 7, "e": 1,
                                  "f": 10, "g": 18, "h": 4, "i": 14}
        assert (solution.width, solution.height) == (32, 33)

    def test_network_shape(self):
        network = to_smith_network(nine_square_layout())
        assert len(network.nodes) == 6
        assert len(network.edges) == 9
        assert network.source == "top" and network.sink == "bottom"

    def test_kirchhoff(self):
        layout = nine_square_layout()
        solution = solve_layout(layout)
        network = to_smith_network(layout)
        assert validate_kirchhoff(network, solution.sides)
        perturbed = dict(solution.sides)
        perturbed["e"] += 1
        assert not validate_kirchhoff(network, perturbed)

    def test_total_resistance(self):
        layout = nine_square_layout()
        network = to_smith_network(layout)
        assert total_resistance(network) == Fraction(33, 32)

    def test_perfection(self):
        solution = solve_layout(nine_square_layout())
        assert is_perfect(solution.sides)
        assert not is_squared_square(solution)

    def test_nullity_is_one(self):
        assert layout_nullity(nine_square_layout()) == 1

    def test_geometry_reconstruction(self):
        layout = nine_square_layout()
        placed = reconstruct_geometry(layout, solve_layout(layout))
        assert placed["a"] == (0, 0, 15)
        assert placed["i"] == (18, 19, 14)

    def test_json_round_trip(self):
        layout = nine_square_layout()
        assert layout_from_json(layout_to_json(layout)) == layout


class TestSmallLayouts:
    def test_single_square(self):
        solution = solve_layout(SINGLE)
        assert solution.sides == {"s": 1}
        assert (solution.width, solution.height) == (1, 1)
        assert total_resistance(to_smith_network(SINGLE)) == 1
        assert is_squared_square(solution)

    def test_two_side_by_side(self):
        solution = solve_layout(TWO_BESIDE)
        assert solution.sides == {"p": 1, "q": 1}
        assert (solution.width, solution.height) == (2, 1)
        assert total_resistance(to_smith_network(TWO_BESIDE)) == Fraction(1, 2)
        assert not is_perfect(solution.sides)

    def test_two_stacked(self):
        solution = solve_layout(TWO_STACKED)
        assert (solution.width, solution.height) == (1, 2)
        assert total_resistance(to_smith_network(TWO_STACKED)) == 2

    def test_stack_and_side(self):
        solution = solve_layout(STACK_AND_SIDE)
        assert solution.sides == {"A": 1, "B": 1, "C": 2}
        assert (solution.width, solution.height) == (3, 2)
        network = to_smith_network(STACK_AND_SIDE)
        assert validate_kirchhoff(network, solution.sides)
        assert total_resistance(network) == Fraction(2, 3)


class TestInvariants:
    @pytest.mark.parametrize("layout", [SINGLE, TWO_BESIDE, TWO_STACKED,
                                        STACK_AND_SIDE])
    def test_resistance_equals_aspect_ratio(self, layout):
        solution = solve_layout(layout)
        network = to_smith_network(layout)
        assert total_resistance(network) == Fraction(solution.height, solution.width)

    @pytest.mark.parametrize("layout", [SINGLE, TWO_BESIDE, TWO_STACKED,
                                        STACK_AND_SIDE])
    def test_kirchhoff_holds_for_every_solution(self, layout):
        solution = solve_layout(layout)
        assert validate_kirchhoff(to_smith_network(layout), solution.sides)

    @pytest.mark.parametrize("layout", [SINGLE, TWO_BESIDE, TWO_STACKED,
                                        STACK_AND_SIDE])
    def test_reconstruction(self, layout):
        solution = solve_layout(layout)
        placed = reconstruct_geometry(layout, solution)
        assert sum(s * s for _, _, s in placed.values()) == solution.width * solution.height

    def test_squared_square_iff_unit_resistance(self):
        for layout in (SINGLE, TWO_BESIDE, TWO_STACKED, STACK_AND_SIDE,
                       nine_square_layout()):
            solution = solve_layout(layout)
            network = to_smith_network(layout)
            assert is_squared_square(solution) == (total_resistance(network) == 1)


class TestErrors:
    def test_inconsistent(self):
        # the internal line c has squares on its left only, forcing A+B=0,
        # while the line m forces A=B; only the zero solution remains
        layout = SquaredLayout(("t", "m", "b"), ("l", "c", "c2", "r"), (
            SquareSpec("A", "t", "m", "l", "c"),
            SquareSpec("B", "m", "b", "l", "c"),
            SquareSpec("C", "t", "b", "c2", "r")))
        with pytest.raises(LayoutError) as exc:
            solve_layout(layout)
        assert exc.value.code == "INCONSISTENT"

    def test_degenerate(self):
        layout = SquaredLayout(("t", "m", "b"), ("l", "c", "r"), (
            SquareSpec("A", "t", "m", "l", "c"),
            SquareSpec("B", "t", "m", "c", "r"),
            SquareSpec("C", "m", "b", "l", "c"),
            SquareSpec("D", "m", "b", "c", "r")))
        with pytest.raises(LayoutError) as exc:
            solve_layout(layout)
        assert exc.value.code == "DEGENERATE"

    def test_nonpositive(self):
        layout = SquaredLayout(("t", "m", "b"), ("l", "c", "r"), (
            SquareSpec("A", "t", "m", "l", "c"),
            SquareSpec("B", "m", "b", "l", "c"),
            SquareSpec("C", "t", "m", "c", "r")))
        with pytest.raises(LayoutError) as exc:
            solve_layout(layout)
        assert exc.value.code == "NONPOSITIVE"

    def test_malformed_ordering(self):
        with pytest.raises(LayoutError) as exc:
            SquaredLayout(("t", "b"), ("l", "r"), (SquareSpec("s", "b", "t", "l", "r"),))
        assert exc.value.code == "MALFORMED"

    def test_unknown_line(self):
        with pytest.raises(LayoutError):
            SquaredLayout(("t", "b"), ("l", "r"), (SquareSpec("s", "t", "x", "l", "r"),))

from collections import Counter

import pytest
from mpmath import mp

from tilings.counting import (
    DominoSampler,
    arctic_statistic,
    aztec_count,
    aztec_sample,
    catalan_constant,
    count_domino_tilings,
    dof_per_square,
    kasteleyn_count,
    sample_tiling,
    square_dof_constant,
)
from tilings.errors import GuardLimitExceeded
from tilings.lattice import (
    Lattice,
    Region,
    build_aztec,
    build_rectangle,
    build_triangle,
    is_valid_tiling,
    remove_cells,
)
from tilings.rng import SplitMix64, stream


class TestProfileDP:
    def test_known_rectangles(self):
        assert count_domino_tilings(build_rectangle(2, 2)) == 2
        assert count_domino_tilings(build_rectangle(2, 3)) == 3
        assert count_domino_tilings(build_rectangle(4, 6)) == 281
        assert count_domino_tilings(build_rectangle(8, 8)) == 12988816

    def test_odd_region_is_zero(self):
        assert count_domino_tilings(build_rectangle(3, 3)) == 0
        assert count_domino_tilings(build_rectangle(1, 5)) == 0

    def test_empty_region(self):
        assert count_domino_tilings(Region(Lattice.SQUARE, frozenset())) == 1

    def test_holes(self):
        region = remove_cells(build_rectangle(8, 8), [(0, 0), (7, 7)])
        assert count_domino_tilings(region) == 0
        region = remove_cells(build_rectangle(8, 8), [(0, 0), (0, 1)])
        assert count_domino_tilings(region) > 0

    def test_aztec_values(self):
        assert count_domino_tilings(build_aztec(2)) == 8

    def test_tall_regions_are_transposed(self):
        tall = build_rectangle(30, 4)
        assert count_domino_tilings(tall) == count_domino_tilings(build_rectangle(4, 30))

    def test_guard(self):
        with pytest.raises(GuardLimitExceeded):
            count_domino_tilings(build_rectangle(30, 30))

    def test_hex_rejected(self):
        with pytest.raises(ValueError):
            count_domino_tilings(build_triangle(3))


class TestKasteleyn:
    def test_4x6_board(self):
        assert kasteleyn_count(2, 3) == 281

    def test_smallest_board(self):
        assert kasteleyn_count(1, 1) == 2

    def test_cross_check_2x2(self):
        assert kasteleyn_count(2, 2) == 36
        assert kasteleyn_count(2, 2) == count_domino_tilings(build_rectangle(4, 4))

    def test_grid_against_dp(self):
        for m in range(1, 5):
            for n in range(1, 5):
                assert kasteleyn_count(m, n) == count_domino_tilings(
                    build_rectangle(2 * m, 2 * n)), (m, n)

    def test_large_instances_certify(self):
        # the certification must keep succeeding well past the small cases
        assert kasteleyn_count(16, 16) % 2 == 0

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            kasteleyn_count(0, 3)

    def test_insufficient_precision_raises(self):
        from tilings.errors import PrecisionError

        with pytest.raises(PrecisionError):
            kasteleyn_count(4, 4, max_dps=10)


class TestClosedForms:
    def test_aztec_table(self):
        assert [aztec_count(n) for n in range(1, 7)] == [2, 8, 64, 1024, 32768, 2097152]

    def test_aztec_counts_match_dp(self):
        for n in range(1, 7):
            assert count_domino_tilings(build_aztec(n)) == aztec_count(n)

    def test_successive_ratio(self):
        for n in range(1, 20):
            assert aztec_count(n + 1) // aztec_count(n) == 2 ** (n + 1)

    def test_dof_for_aztec_is_fourth_root_of_two(self):
        with mp.workdps(40):
            expected = mp.root(2, 4)
            for n in (1, 3, 10):
                value = dof_per_square(2 * n * (n + 1), aztec_count(n))
                assert abs(value - expected) < mp.mpf("1e-30")

    def test_dof_trivial_cases(self):
        assert dof_per_square(4, 2) == dof_per_square(12, 8)
        assert dof_per_square(10, 1) == 1

    def test_dof_rejects_bad_input(self):
        with pytest.raises(ValueError):
            dof_per_square(0, 5)
        with pytest.raises(ValueError):
            dof_per_square(5, 0)


class TestConstants:
    def test_catalan_digits(self):
        g = catalan_constant(1e-9)
        assert abs(g - mp.mpf("0.9159655941")) < 1e-9

    def test_catalan_against_mpmath(self):
        with mp.workdps(40):
            assert abs(catalan_constant(1e-25) - mp.catalan) < mp.mpf("1e-24")

    def test_partial_sums_bracket(self):
        g = float(catalan_constant(1e-12))
        partial = 0.0
        for k in range(50):
            term = (-1) ** k / (2 * k + 1) ** 2
            lo_hi = (partial + term, partial)
            partial += term
            if k >= 1:
                assert min(lo_hi) <= g <= max(lo_hi)

    def test_square_dof(self):
        c = square_dof_constant(1e-9)
        assert abs(c - mp.mpf("1.338515152")) < 1e-8


class TestDominoSampler:
    def test_seed_determinism(self):
        region = build_aztec(2)
        assert sample_tiling(region, 42) == sample_tiling(region, 42)
        assert sample_tiling(region, 42, index=3) == sample_tiling(region, 42, index=3)
        batch = {sample_tiling(region, 42, index=i) for i in range(10)}
        assert len(batch) > 1

    def test_samples_are_valid(self):
        region = remove_cells(build_rectangle(4, 6), [(0, 0), (2, 3)])
        sampler = DominoSampler(region)
        assert sampler.count == count_domino_tilings(region)
        for i in range(20):
            assert is_valid_tiling(sampler.sample(stream(3, i)))

    def test_untileable_raises(self):
        region = build_rectangle(3, 3)
        with pytest.raises(ValueError):
            sample_tiling(region, 0)

    def test_2x2_frequencies(self):
        region = build_rectangle(2, 2)
        sampler = DominoSampler(region)
        counts = Counter()
        for i in range(2000):
            t = sampler.sample(stream(11, i))
            counts[tuple(sorted(tuple(sorted(p.cells)) for p in t.placements))] += 1
        assert len(counts) == 2
        for v in counts.values():
            assert abs(v - 1000) < 150


class TestAztecSampler:
    def test_seed_determinism(self):
        assert aztec_sample(12, 99) == aztec_sample(12, 99)

    def test_validity_across_orders(self):
        for n in (1, 2, 3, 5, 8):
            assert is_valid_tiling(aztec_sample(n, n * 17 + 1))

    def test_rejects_zero_order(self):
        with pytest.raises(ValueError):
            aztec_sample(0, 1)

    def test_support_matches_dp_sampler(self):
        keys_dp = set()
        keys_sh = set()
        sampler = DominoSampler(build_aztec(2))
        for i in range(400):
            t1 = sampler.sample(stream(1, i))
            keys_dp.add(tuple(sorted(tuple(sorted(p.cells)) for p in t1.placements)))
            t2 = aztec_sample(2, 2, index=i)
            keys_sh.add(tuple(sorted(tuple(sorted(p.cells)) for p in t2.placements)))
        assert keys_dp == keys_sh
        assert len(keys_dp) == 8

    def test_order3_distributions_agree(self):
        # chi-square homogeneity between the two samplers over the 64
        # order-3 tilings; critical value for df=63 at the 0.1% level
        sampler = DominoSampler(build_aztec(3))
        a, b = Counter(), Counter()
        draws = 8000
        for i in range(draws):
            t1 = sampler.sample(stream(21, i))
            a[tuple(sorted(tuple(sorted(p.cells)) for p in t1.placements))] += 1
            t2 = aztec_sample(3, 22, index=i)
            b[tuple(sorted(tuple(sorted(p.cells)) for p in t2.placements))] += 1
        assert set(a) == set(b) and len(a) == 64
        statistic = sum((a[k] - b[k]) ** 2 / (a[k] + b[k]) for k in a)
        assert statistic < 103.4


class TestArcticStatistic:
    def test_range(self):
        for seed in range(5):
            value = arctic_statistic(aztec_sample(6, seed))
            assert 0.0 <= value <= 1.0

    def test_non_aztec_rejected(self):
        # a 2x2 board IS the order-1 diamond, so use a 2x3 board instead
        t = sample_tiling(build_rectangle(2, 3), 0)
        with pytest.raises(ValueError):
            arctic_statistic(t)

    def test_row_brickwork_is_frozen_at_the_poles(self):
        # In the all-horizontal tiling of the order-4 diamond exactly two
        # dominoes (top and bottom rows) lie outside the circle, and both
        # match their polar brick phase.
        from tilings.lattice import Placement, Tiling, domino

        region = build_aztec(4)
        rows = {}
        for r, c in sorted(region.cells):
            rows.setdefault(r, []).append(c)
        shape = domino()
        placements = []
        for r, cols in rows.items():
            cols.sort()
            for i in range(0, len(cols), 2):
                placements.append(Placement(shape, frozenset({(r, cols[i]), (r, cols[i + 1])})))
        tiling = Tiling(region, frozenset(placements))
        assert is_valid_tiling(tiling)
        assert arctic_statistic(tiling) == 1.0

    def test_column_brickwork_is_frozen_at_the_sides(self):
        from tilings.lattice import Placement, Tiling, domino

        region = build_aztec(4)
        cols = {}
        for r, c in sorted(region.cells):
            cols.setdefault(c, []).append(r)
        shape = domino()
        placements = []
        for c, rows_ in cols.items():
            rows_.sort()
            for i in range(0, len(rows_), 2):
                placements.append(Placement(shape, frozenset({(rows_[i], c), (rows_[i + 1], c)})))
        tiling = Tiling(region, frozenset(placements))
        assert is_valid_tiling(tiling)
        assert arctic_statistic(tiling) == 1.0


class TestRng:
    def test_word_stream_is_stable(self):
        gen = SplitMix64(0)
        first = [gen.next_word() for _ in range(3)]
        gen2 = SplitMix64(0)
        assert first == [gen2.next_word() for _ in range(3)]

    def test_randrange_uniform_bounds(self):
        gen = SplitMix64(5)
        values = [gen.randrange(7) for _ in range(1000)]
        assert set(values) <= set(range(7))
        assert len(set(values)) == 7

    def test_big_randrange(self):
        gen = SplitMix64(5)
        bound = 2 ** 200 + 12345
        for _ in range(50):
            assert 0 <= gen.randrange(bound) < bound

    def test_streams_are_independent(self):
        a = stream(1, 0).next_word()
        b = stream(1, 1).next_word()
        assert a != b

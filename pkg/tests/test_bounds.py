import pytest
from hypothesis import given
from hypothesis import strategies as st

from msrd.bounds import (
    RectShape,
    check_eligibility,
    decompose_distance,
    defect,
    singleton_dimension,
)
from msrd.errors import InvalidDistance, InvariantBreach, ParameterError

ACCEPTANCE_SHAPES = [(4, 2), (5, 2, 1), (2, 1)]


class TestDecompose:
    @pytest.mark.parametrize(
        "sizes,d,expected",
        [((4, 2), 3, (1, 3)), ((4, 2), 5, (2, 1)), ((5, 2, 1), 8, (3, 1)), ((4, 2), 4, (1, 4))],
    )
    def test_examples(self, sizes, d, expected):
        p = decompose_distance(sizes, d)
        assert (p.j, p.d_1) == expected
        assert p.delta == p.d_1 - 1

    @pytest.mark.parametrize("d", [0, 7, -1])
    def test_out_of_range(self, d):
        with pytest.raises(InvalidDistance):
            decompose_distance((4, 2), d)

    @pytest.mark.parametrize("sizes", ACCEPTANCE_SHAPES + [(7, 3, 2, 1)])
    def test_recompose_identity(self, sizes):
        for d in range(1, sum(sizes) + 1):
            p = decompose_distance(sizes, d)
            assert sum(sizes[: p.j - 1]) + p.d_1 == d
            assert 1 <= p.d_1 <= sizes[p.j - 1]


class TestSingleton:
    def test_two_block_examples(self):
        assert singleton_dimension((4, 2), 3) == 12
        assert singleton_dimension((4, 2), 5) == 4

    def test_grid_values(self):
        assert [singleton_dimension((4, 2), d) for d in range(1, 7)] == [20, 16, 12, 8, 4, 2]
        assert [singleton_dimension((5, 2, 1), d) for d in range(1, 9)] == [30, 25, 20, 15, 10, 5, 3, 1]

    def test_whole_space_at_distance_one(self):
        assert singleton_dimension(RectShape(((2, 5), (3, 4), (1, 1))), 1) == 10 + 12 + 1

    def test_rectangular(self):
        shape = RectShape(((2, 5), (2, 3)))
        # d = 3 -> j = 2, delta = 0: n_2 m_2 = 6
        assert singleton_dimension(shape, 3) == 6
        # d = 2 -> j = 1, delta = 1: 10 + 6 - 5
        assert singleton_dimension(shape, 2) == 11

    def test_equal_m_reduces_to_m_times_n_minus_d_plus_1(self):
        shape = RectShape(((2, 4), (3, 4), (1, 4)))
        for d in range(1, shape.N + 1):
            assert singleton_dimension(shape, d) == 4 * (shape.N - d + 1)

    def test_rank_metric_case(self):
        for d in range(1, 5):
            assert singleton_dimension(RectShape(((4, 6),)), d) == 6 * (4 - d + 1)

    @pytest.mark.parametrize("sizes", ACCEPTANCE_SHAPES)
    def test_closed_forms_agree(self, sizes):
        for d in range(1, sum(sizes) + 1):
            p = decompose_distance(sizes, d)
            j, nj = p.j, sizes[p.j - 1]
            alt = nj * (nj - p.d_1 + 1) + sum(n * n for n in sizes[j:])
            assert singleton_dimension(sizes, d) == alt

    @given(st.lists(st.integers(1, 6), min_size=1, max_size=4))
    def test_nonincreasing_in_distance(self, sizes):
        sizes = sorted(sizes, reverse=True)
        dims = [singleton_dimension(sizes, d) for d in range(1, sum(sizes) + 1)]
        assert dims[0] == sum(n * n for n in sizes)
        assert all(a >= b for a, b in zip(dims, dims[1:]))
        assert dims[-1] == sizes[-1]

    def test_rect_validation(self):
        with pytest.raises(ParameterError):
            RectShape(((3, 2),))
        with pytest.raises(ParameterError):
            RectShape(((1, 2), (1, 3)))


class TestDefect:
    def test_values(self):
        assert defect((4, 2), 3, 12) == 0
        assert defect((4, 2), 3, 0) == 12
        with pytest.raises(InvariantBreach):
            defect((4, 2), 3, 13)
        with pytest.raises(ParameterError):
            defect((4, 2), 3, -1)


class TestEligibility:
    def test_two_block_j1(self):
        for d in range(1, 5):
            rep = check_eligibility((4, 2), d)
            assert rep.condition1 is None and rep.condition2 and rep.eligible

    def test_all_distance_shape(self):
        rep = check_eligibility((5, 2, 1), 1)
        assert rep.all_distances and rep.eligible

    def test_three_two_fails(self):
        rep = check_eligibility((3, 2), 2)
        assert not rep.condition2 and not rep.eligible and not rep.all_distances
        assert any("tail capacity" in f for f in rep.failures())

    def test_condition_one(self):
        # (5,2,1), d = 6: j = 2, d_1 = 1 -> need n_1 >= 2*2 + 1 = 5
        assert check_eligibility((5, 2, 1), 6).condition1 is True
        # (4,2,1), d = 5: j = 2, d_1 = 1 -> need n_1 >= 5, fails
        rep = check_eligibility((4, 2, 1), 5)
        assert rep.condition1 is False and not rep.eligible

    def test_all_distance_condition_implies_eligibility(self):
        for sizes in [(5, 2, 1), (4, 2), (2, 1), (21, 4, 2), (6, 2, 1)]:
            rep0 = check_eligibility(sizes, 1)
            if rep0.all_distances:
                assert all(check_eligibility(sizes, d).eligible for d in range(1, sum(sizes) + 1))

    def test_non_strict(self):
        rep = check_eligibility((2, 2), 1)
        assert not rep.strictly_decreasing and not rep.eligible

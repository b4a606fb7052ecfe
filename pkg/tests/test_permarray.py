import itertools

import pytest

from matricubes import (
    DotArray,
    MatricubeError,
    enumerate_matricubes,
    is_permutation_array,
    is_simple,
    is_totally_rankable,
    matricube_from_permarray,
    permarray_from_matricube,
    rank_along,
    rank_of,
    rank_of_array,
    redundant_positions,
    uniform,
)
from matricubes.permarray import rankability_violation

from conftest import from_rows


def all_dot_arrays(r, d):
    cells = list(itertools.product(range(r + 1), repeat=d))
    for mask in range(1 << len(cells)):
        dots = frozenset(c for k, c in enumerate(cells) if (mask >> k) & 1)
        yield DotArray(r, d, dots)


class TestDotArray:
    def test_width(self):
        p = DotArray(2, 3, [(0, 0, 0)])
        assert p.width == (2, 2, 2)

    def test_out_of_range_dots_rejected(self):
        with pytest.raises(ValueError):
            DotArray(1, 2, [(2, 0)])
        with pytest.raises(ValueError):
            DotArray(1, 2, [(0,)])

    def test_negative_shape_rejected(self):
        with pytest.raises(ValueError):
            DotArray(-1, 2, [])
        with pytest.raises(ValueError):
            DotArray(1, -1, [])


class TestRankAlong:
    def test_counts_distinct_layers_above(self):
        p = DotArray(2, 2, [(0, 1), (1, 0), (2, 2)])
        assert rank_along(p, (0, 0), 0) == 3
        assert rank_along(p, (0, 0), 1) == 3
        assert rank_along(p, (1, 1), 0) == 1
        assert rank_along(p, (2, 2), 1) == 1

    def test_empty_subarray(self):
        p = DotArray(1, 2, [(0, 0)])
        assert rank_along(p, (1, 1), 0) == 0

    def test_bad_axis(self):
        p = DotArray(1, 2, [])
        with pytest.raises(ValueError):
            rank_along(p, (0, 0), 2)


class TestRankability:
    def test_one_dimensional_arrays_are_trivially_rankable(self):
        assert rankability_violation(DotArray(2, 1, [(1,)])) is None
        assert is_totally_rankable(DotArray(2, 1, [(0,), (2,)]))

    def test_disagreeing_axes(self):
        # two dots in one row: two layers along axis 0, one along axis 1
        p = DotArray(1, 2, [(0, 0), (1, 0)])
        hit = rankability_violation(p)
        assert hit is not None
        x = hit[0]
        assert rank_along(p, x, 0) != rank_along(p, x, 1)
        assert not is_totally_rankable(p)

    def test_rank_of_array(self):
        p = DotArray(1, 2, [(0, 1), (1, 0)])
        assert is_totally_rankable(p)
        assert rank_of_array(p) == 2
        with pytest.raises(MatricubeError):
            rank_of_array(DotArray(1, 2, [(0, 0), (1, 0)]))


class TestRedundantPositions:
    def test_forced_meet(self):
        p = DotArray(1, 2, [(0, 1), (1, 0)])
        assert redundant_positions(p) == {(0, 0)}

    def test_shared_coordinate_required(self):
        # the two dots share no coordinate with (0, 0) ... no forcing
        p = DotArray(2, 2, [(1, 2), (2, 1)])
        assert redundant_positions(p) == {(1, 1)}
        assert redundant_positions(DotArray(1, 2, [(0, 0), (1, 1)])) == set()

    def test_single_dot_never_forces(self):
        assert redundant_positions(DotArray(2, 2, [(1, 1)])) == set()


class TestPermutationArrays:
    def test_antidiagonal_is_one(self):
        p = DotArray(1, 2, [(0, 1), (1, 0)])
        assert is_permutation_array(p)

    def test_dotted_redundant_position_disqualifies(self):
        p = DotArray(1, 2, [(0, 0), (0, 1), (1, 0)])
        assert not is_permutation_array(p)

    def test_wrong_rank_disqualifies(self):
        assert not is_permutation_array(DotArray(1, 2, [(0, 0)]))

    @pytest.mark.parametrize("r,d,count", [(1, 2, 2), (1, 3, 5), (2, 2, 6)])
    def test_census(self, r, d, count):
        arrays = [p for p in all_dot_arrays(r, d) if is_permutation_array(p)]
        assert len(arrays) == count


class TestCorrespondence:
    def test_uniform_images(self):
        full = permarray_from_matricube(uniform((1, 1), 2))
        assert full.dots == frozenset({(0, 1), (1, 0)})
        caged = permarray_from_matricube(uniform((1, 1), 1))
        assert caged.dots == frozenset({(0, 0), (1, 1)})

    def test_array_to_matricube(self):
        p = DotArray(1, 2, [(0, 1), (1, 0)])
        assert matricube_from_permarray(p) == uniform((1, 1), 2)

    @pytest.mark.parametrize("r,d", [(1, 2), (1, 3), (2, 2)])
    def test_bijection(self, r, d):
        width = (r,) * d
        cubes = [
            m
            for m in enumerate_matricubes(width, simple=True)
            if rank_of(m) in (r, r + 1)
        ]
        arrays = [p for p in all_dot_arrays(r, d) if is_permutation_array(p)]
        assert len(cubes) == len(arrays)
        for m in cubes:
            p = permarray_from_matricube(m)
            assert is_permutation_array(p)
            assert matricube_from_permarray(p) == m
        seen = {permarray_from_matricube(m).dots for m in cubes}
        assert seen == {p.dots for p in arrays}

    @pytest.mark.parametrize("r,d", [(1, 2), (2, 2)])
    def test_rank_along_matches_complementary_rank(self, r, d):
        for p in all_dot_arrays(r, d):
            if not is_permutation_array(p):
                continue
            m = matricube_from_permarray(p)
            for x in m.cube.points():
                for j in range(d):
                    assert rank_along(p, x, j) == r + 1 - m.rank(x)

    def test_rejects_non_simple(self, m43_ns):
        square = uniform((2, 2), 1)
        assert not is_simple(square)
        with pytest.raises(MatricubeError):
            permarray_from_matricube(square)

    def test_rejects_non_hypercube(self, m43):
        with pytest.raises(MatricubeError):
            permarray_from_matricube(m43)

    def test_rejects_rank_out_of_window(self):
        with pytest.raises(MatricubeError):
            permarray_from_matricube(uniform((2, 2), 4))

    def test_rejects_broken_array(self):
        with pytest.raises(MatricubeError):
            matricube_from_permarray(DotArray(1, 2, [(0, 0), (1, 0)]))

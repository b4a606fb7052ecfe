import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matricubes import (
    AxiomError,
    GuardError,
    Hypercuboid,
    Matricube,
    add_unit,
    check_diamond,
    check_dominated_by_uniform,
    check_multidirectional,
    check_submodular_bruteforce,
    complement,
    diamond_violation,
    is_simple,
    is_valid,
    join,
    join_all,
    l1,
    leq,
    meet,
    meet_all,
    multidirectional_violation,
    rank,
    rank_of,
    require_valid,
    submodular_violation,
    uniform,
    validate_rank_axioms,
)

from conftest import from_rows


class TestPointHelpers:
    def test_l1(self):
        assert l1(()) == 0
        assert l1((2, 0, 3)) == 5

    def test_leq_is_componentwise(self):
        assert leq((1, 2), (1, 3))
        assert not leq((2, 0), (1, 3))
        assert not leq((0, 2), (1, 1))

    def test_meet_join(self):
        assert meet((1, 3), (2, 2)) == (1, 2)
        assert join((1, 3), (2, 2)) == (2, 3)

    def test_meet_all_of_nothing_is_top(self):
        assert meet_all([], (4, 3)) == (4, 3)
        assert meet_all([(2, 3), (4, 1)], (4, 3)) == (2, 1)

    def test_join_all_of_nothing_is_bottom(self):
        assert join_all([], (0, 0)) == (0, 0)
        assert join_all([(2, 3), (4, 1)], (0, 0)) == (4, 3)

    def test_complement(self):
        assert complement((1, 0), (4, 3)) == (3, 3)

    def test_add_unit(self):
        assert add_unit((1, 1), 0) == (2, 1)
        assert add_unit((1, 1), 1, -1) == (1, 0)


class TestHypercuboid:
    def test_point_count(self):
        assert Hypercuboid((4, 3)).npoints == 20
        assert Hypercuboid(()).npoints == 1

    def test_storage_order_last_axis_fastest(self):
        c = Hypercuboid((1, 2))
        assert list(c.points()) == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]

    def test_index_roundtrip(self):
        c = Hypercuboid((2, 1, 2))
        for k, x in enumerate(c.points()):
            assert c.index(x) == k
            assert c.point_at(k) == x

    def test_contains(self):
        c = Hypercuboid((2, 2))
        assert (2, 2) in c
        assert (3, 0) not in c
        assert (0, -1) not in c
        assert (True, 1) not in c

    def test_negative_width_rejected(self):
        with pytest.raises(ValueError):
            Hypercuboid((2, -1))

    def test_axis_point(self):
        assert Hypercuboid((4, 3)).axis_point(1, 2) == (0, 2)


class TestValidation:
    def test_examples_are_valid(self, m43, m43_ns, m54a, m54b):
        for m in (m43, m43_ns, m54a, m54b):
            assert is_valid(m)
            require_valid(m)

    def test_simpleness(self, m43, m43_ns, m54a, m54b):
        assert is_simple(m43)
        assert not is_simple(m43_ns)
        assert is_simple(m54a)
        assert is_simple(m54b)

    def test_rank_lookup(self, m43):
        assert rank(m43, (0, 0)) == 0
        assert rank(m43, (4, 3)) == 5
        assert rank(m43, (1, 2)) == 2
        assert rank_of(m43) == 5

    def test_r1_origin_violation(self):
        m = Matricube((1,), (1, 2))
        violations = validate_rank_axioms(m)
        assert violations and violations[0].axiom == "R1"
        assert violations[0].witness == ((0,),)

    def test_r1_step_violation(self):
        m = Matricube((2,), (0, 2, 2))
        (v,) = validate_rank_axioms(m)
        assert v.axiom == "R1"
        assert v.witness == ((1,),)

    def test_r2_violation(self):
        m = Matricube((2,), (0, 1, 0))
        violations = validate_rank_axioms(m, all_violations=True)
        assert any(v.axiom == "R2" for v in violations)

    def test_r3_violation_names_the_diamond(self):
        rows = [[0, 1], [1, 3]]
        m = from_rows(rows)
        violations = [v for v in validate_rank_axioms(m, all_violations=True)]
        r3 = [v for v in violations if v.axiom == "R3"]
        assert r3
        assert r3[0].witness == ((1, 0), (0, 1))

    def test_require_valid_raises(self):
        m = Matricube((1,), (0, 2))
        with pytest.raises(AxiomError) as exc:
            require_valid(m)
        assert "R1" in str(exc.value)

    def test_shape_mismatch_rejected(self):
        with pytest.raises(ValueError):
            Matricube((2, 2), (0, 1))

    def test_non_integer_entries_rejected(self):
        with pytest.raises(ValueError):
            Matricube((1,), (0, True))
        with pytest.raises(ValueError):
            Matricube((1,), (0.0, 1))


class TestUniform:
    def test_values(self):
        u = uniform((4, 3), 3)
        assert u.rank((2, 2)) == 3
        assert u.rank((1, 1)) == 2
        assert is_valid(u)

    def test_rank_bounds(self):
        with pytest.raises(ValueError):
            uniform((2, 2), 5)
        with pytest.raises(ValueError):
            uniform((2, 2), -1)

    def test_simple_iff_rank_covers_longest_side(self):
        for r in range(8):
            u = uniform((4, 3), r)
            assert is_simple(u) == (r >= 4)

    def test_domination(self, m43, m54a, m54b):
        for m in (m43, m54a, m54b):
            assert check_dominated_by_uniform(m)


class TestDiamond:
    def test_examples_pass(self, m43, m54a):
        assert check_diamond(m43)
        assert check_diamond(m54a)

    def test_violation_witness(self):
        m = from_rows([[0, 1], [1, 3]])
        assert diamond_violation(m) == ((0, 0), 0, 1)

    def test_guard(self, m43):
        with pytest.raises(GuardError):
            diamond_violation(m43, max_points=3)


def _random_table(width, rng):
    cube = Hypercuboid(width)
    return Matricube(width, tuple(rng.randrange(-2, 5) for _ in range(cube.npoints)))


@st.composite
def small_tables(draw):
    width = draw(st.sampled_from([(2,), (3,), (1, 1), (2, 1), (2, 2), (1, 1, 1)]))
    n = Hypercuboid(width).npoints
    ranks = draw(st.lists(st.integers(-2, 4), min_size=n, max_size=n))
    return Matricube(width, tuple(ranks))


class TestSubmodularEquivalence:
    # the local diamond inequality is equivalent to full submodularity for
    # arbitrary integer tables, monotone or not

    @given(small_tables())
    @settings(max_examples=300, deadline=None)
    def test_diamond_iff_submodular(self, m):
        assert check_diamond(m) == check_submodular_bruteforce(m)

    @given(small_tables())
    @settings(max_examples=300, deadline=None)
    def test_multidirectional_1_1_iff_diamond(self, m):
        assert check_multidirectional(m, 1, 1) == check_diamond(m)

    def test_exhaustive_on_2_2_monotone_unit_step(self):
        # every monotone unit-step table on (2, 2), built by increments
        agree = 0
        for bits in itertools.product((0, 1), repeat=8):
            it = iter(bits)
            rows = [[0, 0, 0] for _ in range(3)]
            for x1 in range(3):
                for x0 in range(3):
                    if x0 == 0 and x1 == 0:
                        continue
                    if x0 == 0:
                        rows[x1][0] = rows[x1 - 1][0] + next(it)
                    else:
                        step = next(it)
                        base = rows[x1][x0 - 1]
                        if x1 > 0:
                            base = max(base, rows[x1 - 1][x0])
                        rows[x1][x0] = base + step
            m = from_rows(rows)
            assert check_diamond(m) == check_submodular_bruteforce(m)
            agree += 1
        assert agree == 256


class TestMultidirectional:
    def test_violation_shape(self):
        m = from_rows([[0, 1], [1, 3]])
        hit = multidirectional_violation(m, 1, 1)
        assert hit is not None
        x, y, dirs, offsets = hit
        assert leq(x, y)
        assert len(dirs) == len(offsets) == 1

    def test_higher_orders_hold_on_valid_examples(self, m43, m54b):
        for m in (m43, m54b):
            for n, k in [(1, 1), (1, 2), (2, 1), (2, 2)]:
                assert check_multidirectional(m, n, k)

    def test_rejects_nonpositive_orders(self, m43):
        with pytest.raises(ValueError):
            check_multidirectional(m43, 0, 1)
        with pytest.raises(ValueError):
            check_multidirectional(m43, 1, 0)


class TestUnitSteps:
    def test_every_entry_moves_by_at_most_one(self, pool_22):
        for m in pool_22:
            cube = m.cube
            for x in cube.points():
                for i in range(cube.d):
                    y = add_unit(x, i)
                    if y in cube:
                        assert m.rank(y) - m.rank(x) in (0, 1)

import itertools

import pytest
from hypothesis import given, settings

from islands import (
    Brick,
    DimensionMismatch,
    IslandSystem,
    Shape,
    brick_count,
    canonical_bricks,
    canonical_form,
    compatible,
    contains,
    disjoint,
    enumerate_bricks,
    shape_symmetries,
    transform_brick,
)

from conftest import B, laminar_systems


class TestShape:
    def test_valid(self):
        s = Shape((2, 3, 1))
        assert s.ndim == 3
        assert not s.is_cube
        assert Shape((4, 4)).is_cube
        assert s.full_brick() == B((0, 0, 0), (2, 3, 1))

    @pytest.mark.parametrize("dims", [(), (0,), (-1, 2), (2, 0)])
    def test_invalid(self, dims):
        with pytest.raises(ValueError):
            Shape(dims)


class TestBrick:
    def test_valid(self):
        b = B((0, 1), (2, 3))
        assert b.sides() == (2, 2)
        assert b.is_cube
        assert not b.is_cell
        assert B((1, 1), (2, 2)).is_cell
        assert b.valid_in(Shape((2, 3)))
        assert not b.valid_in(Shape((2, 2)))
        assert not b.valid_in(Shape((2, 3, 4)))

    @pytest.mark.parametrize("lo,hi", [((0,), (0,)), ((1,), (0,)), ((-1,), (1,)), ((0, 0), (1,))])
    def test_invalid(self, lo, hi):
        with pytest.raises(ValueError):
            Brick(lo, hi)

    def test_ordering_is_lexicographic_on_corners(self):
        bricks = list(enumerate_bricks(Shape((2, 2))))
        assert bricks == sorted(bricks, key=lambda b: b.lo + b.hi)


class TestPredicates:
    def test_contains(self):
        assert contains(B((0, 0), (2, 2)), B((0, 0), (1, 1)))
        b = B((0, 1), (3, 2))
        assert contains(b, b)
        assert not contains(B((0, 0), (1, 2)), B((0, 0), (2, 1)))
        assert not contains(B((0, 0), (2, 1)), B((0, 0), (1, 2)))

    def test_disjoint_uses_closed_boxes(self):
        # sharing only the corner point (1,1) still counts as intersecting
        assert not disjoint(B((0, 0), (1, 1)), B((1, 1), (2, 2)))
        assert disjoint(B((0, 0), (1, 1)), B((2, 0), (3, 1)))
        assert not disjoint(B((0, 0), (1, 1)), B((0, 0), (2, 2)))

    def test_compatible(self):
        assert not compatible(B((0, 0), (1, 1)), B((1, 1), (2, 2)))
        assert compatible(B((0, 0), (1, 1)), B((0, 0), (3, 3)))
        assert compatible(B((0, 0), (1, 3)), B((2, 0), (3, 3)))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            contains(B((0,), (1,)), B((0, 0), (1, 1)))
        with pytest.raises(DimensionMismatch):
            disjoint(B((0,), (1,)), B((0, 0), (1, 1)))
        with pytest.raises(DimensionMismatch):
            compatible(B((0,), (1,)), B((0, 0), (1, 1)))

    @pytest.mark.parametrize("dims", [(3,), (2, 2), (3, 3), (2, 2, 2)])
    def test_order_and_symmetry_properties(self, dims):
        bricks = list(enumerate_bricks(Shape(dims)))
        for a in bricks:
            assert contains(a, a)
            for b in bricks:
                assert disjoint(a, b) == disjoint(b, a)
                assert compatible(a, b) == compatible(b, a)
                if contains(a, b) and contains(b, a):
                    assert a == b
                if disjoint(a, b):
                    assert not contains(a, b) and not contains(b, a)

    def test_contains_transitive(self):
        bricks = list(enumerate_bricks(Shape((3, 3))))
        for a, b in itertools.permutations(bricks, 2):
            if not contains(a, b):
                continue
            for c in bricks:
                if contains(b, c):
                    assert contains(a, c)


class TestEnumeration:
    def test_single_cell(self):
        assert list(enumerate_bricks(Shape((1,)))) == [B((0,), (1,))]

    def test_2x2_has_nine_bricks(self):
        bricks = list(enumerate_bricks(Shape((2, 2))))
        assert len(bricks) == 9
        assert len(set(bricks)) == 9

    def test_3x3_cubic_breakdown(self):
        cubes = list(enumerate_bricks(Shape((3, 3)), cubic=True))
        assert len(cubes) == 14
        by_side = {}
        for c in cubes:
            by_side.setdefault(c.sides()[0], 0)
            by_side[c.sides()[0]] += 1
        assert by_side == {1: 9, 2: 4, 3: 1}

    def test_lexicographic_order(self):
        for dims, cubic in [((3, 2), False), ((3, 3), True), ((2, 2, 2), False)]:
            bricks = list(enumerate_bricks(Shape(dims), cubic=cubic))
            assert bricks == sorted(bricks)

    @pytest.mark.parametrize("dims", [(1,), (4,), (2, 2), (3, 2), (1, 1, 1), (2, 2, 2), (7, 7, 7)])
    @pytest.mark.parametrize("cubic", [False, True])
    def test_count_matches_enumeration(self, dims, cubic):
        shape = Shape(dims)
        expected = brick_count(shape, cubic)
        if expected > 3000:
            return
        bricks = list(enumerate_bricks(shape, cubic))
        assert len(bricks) == expected
        assert len(set(bricks)) == expected
        for b in bricks:
            assert b.valid_in(shape)
            if cubic:
                assert b.is_cube

    def test_counts_against_direct_sums(self):
        # independent closed forms evaluated by explicit summation
        assert brick_count(Shape((7, 7, 7)), cubic=True) == sum((8 - s) ** 3 for s in range(1, 8))
        assert brick_count(Shape((2, 2))) == 9
        assert brick_count(Shape((1, 1, 1, 1))) == 1
        assert brick_count(Shape((5, 3))) == (5 * 6 // 2) * (3 * 4 // 2)


class TestSymmetries:
    def test_group_sizes(self):
        assert sum(1 for _ in shape_symmetries(Shape((2, 1)))) == 4
        assert sum(1 for _ in shape_symmetries(Shape((3, 3)))) == 8
        assert sum(1 for _ in shape_symmetries(Shape((2, 2, 2)))) == 48

    def test_transform_preserves_validity(self):
        shape = Shape((3, 2))
        bricks = list(enumerate_bricks(shape))
        for perm, flips in shape_symmetries(shape):
            images = [transform_brick(b, shape, perm, flips) for b in bricks]
            assert sorted(images) == bricks  # a bijection of the brick universe

    def test_canonical_2x2_reflection(self):
        shape = Shape((2, 2))
        system = [B((1, 1), (2, 2)), B((0, 0), (2, 2))]
        assert canonical_bricks(shape, system) == (B((0, 0), (1, 1)), B((0, 0), (2, 2)))

    def test_canonical_identifies_mirror_systems(self):
        shape = Shape((2, 1))
        left = IslandSystem(shape, [shape.full_brick(), B((0, 0), (1, 1))])
        right = IslandSystem(shape, [shape.full_brick(), B((1, 0), (2, 1))])
        assert canonical_form(left) == canonical_form(right)

    @pytest.mark.parametrize("dims", [(3, 3), (2, 2, 2), (3, 2)])
    def test_canonical_invariant_under_group(self, dims):
        from islands import enumerate_maximal_systems

        shape = Shape(dims)
        for system in itertools.islice(enumerate_maximal_systems(shape), 25):
            reference = canonical_bricks(shape, system.bricks)
            for perm, flips in shape_symmetries(shape):
                image = [transform_brick(b, shape, perm, flips) for b in system.bricks]
                assert canonical_bricks(shape, image) == reference

    @settings(max_examples=60)
    @given(laminar_systems())
    def test_canonical_idempotent(self, system):
        once = canonical_form(system)
        assert canonical_form(once) == once

"""Geometry layer: common-point LP vs the brute-force oracle, projections."""
import random
from fractions import Fraction

import pytest

from tverlab import geometry
from tverlab.geometry import (
    CommonPointWitness,
    Subspace,
    affine_dim,
    as_point,
    common_point_gap,
    lp_feasible_common_point,
    project,
    verify_common_point_witness,
)

from oracles import caratheodory_feasible

F = Fraction


def pt(*coords):
    return as_point(coords)


class TestCommonPoint:
    def test_square_diagonals(self):
        pieces = [[pt(0, 0), pt(1, 1)], [pt(1, 0), pt(0, 1)]]
        w = lp_feasible_common_point(pieces)
        assert w is not None
        assert w.point == pt(F(1, 2), F(1, 2))
        assert verify_common_point_witness(pieces, w)

    def test_disjoint_singletons(self):
        pieces = [[pt(0, 0)], [pt(1, 0)]]
        w, gap = common_point_gap(pieces)
        assert w is None
        assert gap > 0

    def test_triangle_pair_with_center(self):
        # two copies of a triangle and its barycenter: hulls meet only there
        tri = [pt(0, 0), pt(4, 0), pt(0, 4)]
        center = pt(F(4, 3), F(4, 3))
        pieces = [tri, list(tri), [center]]
        w = lp_feasible_common_point(pieces)
        assert w is not None
        assert w.point == center
        assert caratheodory_feasible(pieces)

    def test_empty_piece_rejected(self):
        with pytest.raises(ValueError):
            lp_feasible_common_point([[pt(0, 0)], []])

    def test_dimension_mismatch_rejected(self):
        with pytest.raises(ValueError):
            lp_feasible_common_point([[pt(0, 0)], [pt(1, 0, 0)]])

    def test_single_piece(self):
        w = lp_feasible_common_point([[pt(3, 5), pt(7, 1)]])
        assert w is not None
        assert verify_common_point_witness([[pt(3, 5), pt(7, 1)]], w)

    def test_agrees_with_caratheodory_oracle(self):
        rng = random.Random(4242)
        agree = 0
        for _ in range(150):
            d = rng.randint(1, 3)
            npieces = rng.randint(1, 3)
            total = rng.randint(npieces, 8)
            sizes = [1] * npieces
            for _ in range(total - npieces):
                sizes[rng.randrange(npieces)] += 1
            pieces = [
                [pt(*[rng.randint(-4, 4) for _ in range(d)]) for _ in range(s)]
                for s in sizes
            ]
            w = lp_feasible_common_point(pieces)
            expect = caratheodory_feasible(pieces)
            assert (w is not None) == expect
            if w is not None:
                assert verify_common_point_witness(pieces, w)
                agree += 1
        assert agree > 10  # sanity: the corpus exercises both outcomes

    def test_gap_is_deterministic_and_positive(self):
        pieces = [[pt(0, 0)], [pt(3, 4)]]
        _, g1 = common_point_gap(pieces)
        _, g2 = common_point_gap(pieces)
        assert g1 == g2 > 0

    def test_determinism_of_witness(self):
        pieces = [[pt(0, 0), pt(2, 0), pt(0, 2)], [pt(1, 1), pt(-1, 1)]]
        assert lp_feasible_common_point(pieces) == lp_feasible_common_point(pieces)


class TestVerifyWitness:
    def test_tampered_weight(self):
        pieces = [[pt(0, 0), pt(1, 1)], [pt(1, 0), pt(0, 1)]]
        w = lp_feasible_common_point(pieces)
        bad = CommonPointWitness(point=w.point, weights=((F(2), F(-1)), w.weights[1]))
        v = verify_common_point_witness(pieces, bad)
        assert not v and v.reason == "negative-weight"

    def test_weight_sum_violation(self):
        pieces = [[pt(0, 0)], [pt(0, 0)]]
        bad = CommonPointWitness(point=pt(0, 0), weights=((F(1, 2),), (F(1),)))
        v = verify_common_point_witness(pieces, bad)
        assert not v and v.reason == "weight-sum"

    def test_point_mismatch(self):
        pieces = [[pt(0, 0)], [pt(0, 0)]]
        bad = CommonPointWitness(point=pt(1, 0), weights=((F(1),), (F(1),)))
        v = verify_common_point_witness(pieces, bad)
        assert not v and v.reason == "point-mismatch"

    def test_shape_mismatch(self):
        pieces = [[pt(0, 0)], [pt(0, 0)]]
        bad = CommonPointWitness(point=pt(0, 0), weights=((F(1),),))
        v = verify_common_point_witness(pieces, bad)
        assert not v and v.reason == "shape-mismatch"

    def test_malformed(self):
        v = verify_common_point_witness([[pt(0, 0)]], object())
        assert not v and v.reason == "malformed"


class TestProject:
    def test_drop_to_first_axis(self):
        target = Subspace(2, (pt(1, 0),))
        assert project([pt(3, 5)], target) == [pt(3)]

    def test_diagonal_line(self):
        target = Subspace(2, (pt(1, 1),))
        assert project([pt(1, 1), pt(2, 2)], target) == [pt(1), pt(2)]

    def test_identity_on_standard_basis(self):
        target = Subspace(3, (pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)))
        p = pt(F(1, 3), F(-2, 7), 5)
        assert project([p], target) == [p]

    def test_rank_deficient_basis_rejected(self):
        with pytest.raises(ValueError):
            Subspace(2, (pt(1, 1), pt(2, 2)))

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            project([pt(1, 2, 3)], Subspace(2, (pt(1, 0),)))

    def test_linearity(self):
        rng = random.Random(11)
        target = Subspace(3, (pt(1, 2, 0), pt(0, 1, -1)))
        for _ in range(25):
            x = pt(*[F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3)])
            y = pt(*[F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3)])
            a = F(rng.randint(-3, 3), rng.randint(1, 4))
            lin = tuple(a * xi + yi for xi, yi in zip(x, y))
            px, py, plin = project([x, y, lin], target)
            assert plin == tuple(a * xi + yi for xi, yi in zip(px, py))

    def test_zero_dim_target(self):
        target = Subspace(2, ())
        assert project([pt(1, 2)], target) == [()]


class TestAffineDim:
    def test_cases(self):
        assert affine_dim([]) == -1
        assert affine_dim([pt(7, 7)]) == 0
        assert affine_dim([pt(0, 0), pt(1, 0), pt(2, 0)]) == 1
        assert affine_dim([pt(0, 0), pt(1, 0), pt(0, 1)]) == 2
        assert affine_dim([pt(0, 0, 0), pt(1, 1, 1), pt(2, 2, 2), pt(1, 0, 0)]) == 2

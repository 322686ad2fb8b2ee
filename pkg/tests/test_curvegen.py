from math import comb

import pytest

from apolar_kit.apolarity import piece_contains
from apolar_kit.core import monomial_basis
from apolar_kit.curvegen import (SamplingError,
                                 balanced_type, expected_cubic_dim,
                                 expected_quadric_dim, genus_adjunction,
                                 ideal_pieces, sample_points, tetragonal_curve,
                                 trigonal_curve, _evaluation_matrix)
from apolar_kit.scroll import (Scroll, canonical_class, chow_product,
                               divisor_degree, scroll_quadrics)
from apolar_kit.seeding import make_rng, small_rationals


def chow_oracle(scroll, cls):
    # independent adjunction arithmetic: (aH+bF).(cH+dF) = ac deg + ad + bc
    k = canonical_class(scroll)
    c2, d2 = cls.h + k.h, cls.f + k.f
    pairing = cls.h * c2 * scroll.degree + cls.h * d2 + cls.f * c2
    return pairing // 2 + 1


class TestBalancedType:
    def test_even_split(self):
        assert balanced_type(4, 2) == (2, 2)

    def test_uneven_split(self):
        assert balanced_type(5, 2) == (2, 3)
        assert balanced_type(4, 3) == (1, 1, 2)
        assert balanced_type(3, 3) == (1, 1, 1)


class TestTrigonalCurve:
    def test_genus_five_layout(self):
        curve = trigonal_curve(5, seed=1)
        assert curve.scroll.type == (1, 2)
        assert (curve.classes[0].h, curve.classes[0].f) == (3, -1)
        assert genus_adjunction(curve.scroll, curve.classes[0]) == 5

    def test_genus_six_layout(self):
        curve = trigonal_curve(6, seed=1)
        assert curve.scroll.type == (2, 2)
        assert genus_adjunction(curve.scroll, curve.classes[0]) == 6
        assert genus_adjunction(curve.scroll, curve.classes[0]) == \
            chow_oracle(curve.scroll, curve.classes[0])

    def test_fiber_class_intersection_is_three(self):
        for g in (5, 6, 7):
            curve = trigonal_curve(g, seed=2)
            assert chow_product([curve.classes[0], curve.scroll.F]) == 3

    def test_fiber_restriction_is_cubic(self):
        curve = trigonal_curve(6, seed=3)
        rng = make_rng(99)
        stream = small_rationals(rng)
        for _ in range(10):
            t = next(stream)
            cubic = curve.equations[0].fiber_form((t.denominator, t.numerator))
            assert cubic.degree == 3
            assert not cubic.is_zero()

    def test_small_genus_rejected(self):
        with pytest.raises(ValueError):
            trigonal_curve(4, seed=1)


class TestTetragonalCurve:
    def test_genus_seven_generic_split(self):
        curve = tetragonal_curve(7, 1, 1, seed=1)
        assert curve.scroll.type == (1, 1, 2)
        degrees = [divisor_degree(curve.scroll, c) for c in curve.classes]
        assert degrees == [7, 7]

    def test_genus_seven_special_split(self):
        curve = tetragonal_curve(7, 0, 2, seed=1)
        degrees = [divisor_degree(curve.scroll, c) for c in curve.classes]
        assert degrees == [8, 6]

    def test_genus_six_split(self):
        curve = tetragonal_curve(6, 0, 1, seed=1)
        assert curve.scroll.type == (1, 1, 1)
        degrees = [divisor_degree(curve.scroll, c) for c in curve.classes]
        assert degrees == [6, 5]

    def test_curve_degree_identity(self):
        for g, b1, b2 in [(6, 0, 1), (7, 1, 1), (8, 1, 2)]:
            curve = tetragonal_curve(g, b1, b2, seed=2)
            assert chow_product(list(curve.classes) + [curve.scroll.H]) == 2 * g - 2

    def test_bad_split_rejected(self):
        with pytest.raises(ValueError):
            tetragonal_curve(7, 1, 3, seed=1)

    def test_unbalanced_scroll_needs_flag(self):
        # the balanced type for g = 9 is (2, 2, 2); (1, 2, 3) is unbalanced
        with pytest.raises(ValueError):
            tetragonal_curve(9, 2, 2, seed=1, scroll_type=(1, 2, 3))

    def test_fiber_length_four(self):
        from apolar_kit.curvegen import _conic_pair_resultant
        curve = tetragonal_curve(7, 1, 1, seed=4)
        rng = make_rng(7)
        stream = small_rationals(rng)
        for _ in range(10):
            t = next(stream)
            base = (t.denominator, t.numerator)
            res = _conic_pair_resultant(curve.equations[0].fiber_form(base),
                                        curve.equations[1].fiber_form(base))
            assert res is not None and res.degree == 4 and not res.is_zero()


class TestSamplePoints:
    def test_zero_count(self):
        curve = trigonal_curve(5, seed=5)
        assert sample_points(curve, 0, seed=1) == []

    def test_points_satisfy_scroll_and_curve(self):
        curve = trigonal_curve(5, seed=6)
        pts = sample_points(curve, curve.guaranteed_point_count, seed=2)
        assert len(pts) == 15
        quadrics = scroll_quadrics(curve.scroll)
        for p in pts:
            for q in quadrics:
                assert q.evaluate(p) == 0

    def test_tetragonal_points(self):
        curve = tetragonal_curve(7, 1, 1, seed=7)
        pts = sample_points(curve, curve.guaranteed_point_count, seed=3)
        assert len(pts) == curve.guaranteed_point_count >= 4

    def test_budget_error_reports_found(self):
        curve = trigonal_curve(5, seed=8)
        with pytest.raises(SamplingError) as err:
            sample_points(curve, 500, seed=4, max_attempts=60)
        assert err.value.found >= curve.guaranteed_point_count
        assert err.value.requested == 500


class TestIdealPieces:
    def test_expected_dimension_formulas(self):
        # Riemann-Roch style count: C(g+1,2) - (3g-3) quadrics,
        # C(g+2,3) - (5g-5) cubics
        for g in range(5, 9):
            assert expected_quadric_dim(g) == comb(g + 1, 2) - (3 * g - 3)
            assert expected_cubic_dim(g) == comb(g + 2, 3) - (5 * g - 5)

    def test_trigonal_dims(self):
        curve = trigonal_curve(5, seed=9)
        pts = sample_points(curve, curve.guaranteed_point_count, seed=5)
        recon = ideal_pieces(curve, pts)
        assert recon.degree2.dim == 3
        assert recon.degree3.dim == 15
        assert recon.dims_expected and recon.rank_saturated

    def test_tetragonal_dims(self):
        curve = tetragonal_curve(7, 1, 1, seed=10)
        recon = ideal_pieces(curve)
        assert recon.degree2.dim == 10
        assert recon.degree3.dim == 54

    def test_scroll_quadrics_inside_degree_two_piece(self):
        curve = trigonal_curve(6, seed=11)
        recon = ideal_pieces(curve)
        for q in scroll_quadrics(curve.scroll):
            assert piece_contains(recon.degree2, q)

    def test_degree_two_piece_matches_point_kernel(self):
        # dual route: with enough exact points the evaluation kernel in
        # degree 2 equals the division-computed piece
        curve = trigonal_curve(5, seed=12)
        pts = sample_points(curve, 15, seed=6)
        recon = ideal_pieces(curve, pts)
        basis = monomial_basis(5, 2)
        kernel = _evaluation_matrix(pts, basis).kernel()
        assert kernel.nrows == recon.degree2.dim
        reduced_a, _ = kernel.rref()
        reduced_b, _ = recon.degree2.matrix().rref()
        assert reduced_a == reduced_b

    def test_ideal_elements_vanish_on_points(self):
        curve = tetragonal_curve(6, 0, 1, seed=13)
        pts = sample_points(curve, curve.guaranteed_point_count, seed=7)
        recon = ideal_pieces(curve, pts)
        for p in pts:
            for q in recon.degree2.basis:
                assert q.evaluate(p) == 0
            for q in recon.degree3.basis:
                assert q.evaluate(p) == 0

    def test_genus_adjunction_rejects_threefolds(self):
        s = Scroll((1, 1, 2))
        with pytest.raises(ValueError):
            genus_adjunction(s, s.H)

    def test_genus_adjunction_quadric_surface(self):
        s = Scroll((1, 1))
        assert genus_adjunction(s, s.cls(2, 0)) == 1

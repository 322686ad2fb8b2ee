from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
import sympy

from apolar_kit.apolarity import (GradedIdealPiece, SocleDimensionError,
                                  apolar_ideal_piece, catalecticant,
                                  hilbert_function, is_apolar_scheme,
                                  macaulay_inverse, piece_contains)
from apolar_kit.core import Polynomial, change_coordinates, monomial_basis
from apolar_kit.seeding import make_rng, random_form, random_invertible_matrix


def fermat(n):
    return Polynomial(n, 3, {tuple(3 if i == j else 0 for j in range(n)): 1
                             for i in range(n)})


def sympy_catalecticant_ranks(f, n):
    """Independent oracle: ranks of the contraction maps via sympy calculus."""
    xs = sympy.symbols(f"x0:{n}")
    expr = sum(sympy.Rational(c) * sympy.prod(x ** e for x, e in zip(xs, exp))
               for exp, c in f.terms.items())
    d = f.degree
    ranks = []
    for k in range(d + 1):
        rows = []
        for exp in monomial_basis(n, k):
            g = expr
            for x, e in zip(xs, exp):
                g = sympy.diff(g, x, e)
            g = sympy.Poly(sympy.expand(g), *xs)
            rows.append([g.coeff_monomial(sympy.prod(x ** e for x, e in zip(xs, m)))
                         for m in monomial_basis(n, d - k)])
        ranks.append(sympy.Matrix(rows).rank())
    return ranks


class TestCatalecticant:
    def test_fermat_quadric_kernel(self):
        cat = catalecticant(fermat(3), 2)
        assert (cat.nrows, cat.ncols) == (3, 6)
        assert cat.rank() == 3
        assert cat.kernel().nrows == 3

    def test_single_cube_rank_one(self):
        f = Polynomial(2, 3, {(3, 0): 1})
        assert catalecticant(f, 1).rank() == 1

    def test_generic_quintuple_rank(self):
        rng = make_rng(21)
        for _ in range(20):
            f = random_form(5, 3, rng)
            assert catalecticant(f, 1).rank() == 5

    def test_rank_symmetry(self):
        rng = make_rng(22)
        for _ in range(20):
            n = rng.randint(2, 4)
            d = rng.randint(2, 4)
            f = random_form(n, d, rng)
            ranks = [catalecticant(f, k).rank() for k in range(d + 1)]
            assert ranks == ranks[::-1]

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            catalecticant(fermat(3), 4)


class TestApolarIdealPiece:
    def test_fermat_degree_two_basis(self):
        piece = apolar_ideal_piece(fermat(3), 2)
        expected = {Polynomial.monomial(tuple(1 if k in (i, j) else 0 for k in range(3)))
                    for i, j in combinations(range(3), 2)}
        assert set(piece.basis) == expected

    def test_fermat_degree_three_contains_cube_differences(self):
        # the kernel in top degree has codimension 1, so its dimension is
        # the ambient count minus one; it must contain every d_i^3 - d_j^3
        piece = apolar_ideal_piece(fermat(3), 3)
        assert piece.dim == comb(5, 3) - 1
        for i, j in combinations(range(3), 2):
            diff = Polynomial(3, 3, {tuple(3 if k == i else 0 for k in range(3)): 1,
                                     tuple(3 if k == j else 0 for k in range(3)): -1})
            assert piece_contains(piece, diff)

    def test_degree_zero_piece_trivial(self):
        rng = make_rng(23)
        f = random_form(3, 3, rng)
        assert apolar_ideal_piece(f, 0).dim == 0

    def test_degree_d_plus_one_is_everything(self):
        f = fermat(3)
        piece = apolar_ideal_piece(f, 4)
        assert piece.dim == piece.ambient_dim == comb(6, 4)

    def test_ideal_property_under_multiplication(self):
        # eta * D stays in the annihilator one degree up
        rng = make_rng(24)
        for _ in range(20):
            n = rng.randint(2, 4)
            f = random_form(n, 3, rng)
            piece2 = apolar_ideal_piece(f, 2)
            piece3 = apolar_ideal_piece(f, 3)
            if piece2.dim == 0:
                continue
            eta = random_form(n, 1, rng)
            d = piece2.basis[rng.randrange(piece2.dim)]
            assert piece_contains(piece3, eta * d)


class TestHilbertFunction:
    def test_generic_cubic_five_variables(self):
        rng = make_rng(25)
        for _ in range(5):
            f = random_form(5, 3, rng)
            assert hilbert_function(f).hilbert == (1, 5, 5, 1)

    def test_single_cube(self):
        f = Polynomial(3, 3, {(3, 0, 0): 1})
        assert hilbert_function(f).hilbert == (1, 1, 1, 1)

    def test_binary_x0sq_x1_against_sympy_oracle(self):
        f = Polynomial(2, 3, {(2, 1): 1})
        profile = hilbert_function(f)
        assert profile.hilbert == (1, 2, 2, 1)
        assert list(profile.hilbert) == sympy_catalecticant_ranks(f, 2)

    def test_random_against_sympy_oracle(self):
        rng = make_rng(26)
        for _ in range(5):
            n = rng.randint(2, 3)
            d = rng.randint(2, 3)
            f = random_form(n, d, rng)
            assert list(hilbert_function(f).hilbert) == sympy_catalecticant_ranks(f, n)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            hilbert_function(Polynomial.zero(2, 3))

    def test_symmetry_and_socle(self):
        rng = make_rng(27)
        for _ in range(20):
            f = random_form(rng.randint(2, 4), rng.randint(2, 4), rng)
            profile = hilbert_function(f)
            assert profile.is_symmetric()
            assert profile.socle_dim == 1


class TestMacaulayInverse:
    def test_single_annihilated_variable(self):
        # ideal generated by d1 in two dual variables forces F = x0^3
        pieces = []
        for k in range(1, 4):
            polys = [Polynomial.monomial(exp)
                     for exp in monomial_basis(2, k) if exp[1] > 0]
            pieces.append(GradedIdealPiece(k, 2, tuple(polys)))
        assert macaulay_inverse(pieces, 3) == Polynomial(2, 3, {(3, 0): 1})

    def test_fermat_from_generators(self):
        # span the ideal (d_i d_j, d_i^3 - d_j^3) by hand and invert it
        n = 3
        quad = [Polynomial.monomial(tuple(1 if k in (i, j) else 0 for k in range(n)))
                for i, j in combinations(range(n), 2)]
        piece2 = GradedIdealPiece.from_spanning(2, n, quad)
        cubics = [Polynomial.variable(i, n) * q for q in quad for i in range(n)]
        for i, j in combinations(range(n), 2):
            cubics.append(Polynomial(n, 3, {tuple(3 if k == i else 0 for k in range(n)): 1,
                                            tuple(3 if k == j else 0 for k in range(n)): -1}))
        piece3 = GradedIdealPiece.from_spanning(3, n, cubics)
        result = macaulay_inverse([piece2, piece3], 3)
        assert result == fermat(n).normalized()

    def test_round_trip_random_cubics(self):
        rng = make_rng(28)
        for _ in range(10):
            n = rng.randint(2, 5)
            f = random_form(n, 3, rng)
            pieces = [apolar_ideal_piece(f, k) for k in range(1, 4)]
            assert macaulay_inverse(pieces, 3) == f.normalized()

    def test_round_trip_degree_four(self):
        rng = make_rng(29)
        for _ in range(5):
            n = rng.randint(2, 4)
            f = random_form(n, 4, rng)
            pieces = [apolar_ideal_piece(f, k) for k in range(1, 5)]
            assert macaulay_inverse(pieces, 4) == f.normalized()

    def test_socle_failure_reports_dimension(self):
        piece = GradedIdealPiece(2, 3, (Polynomial.monomial((1, 1, 0)),))
        with pytest.raises(SocleDimensionError) as err:
            macaulay_inverse([piece], 3)
        assert err.value.dimension == 7
        assert err.value.hilbert[0] == 1

    def test_inconsistent_pieces_report_zero(self):
        # annihilating every quadric operator leaves no cubic at all
        basis = [Polynomial.monomial(e) for e in monomial_basis(2, 2)]
        piece = GradedIdealPiece(2, 2, tuple(basis))
        with pytest.raises(SocleDimensionError) as err:
            macaulay_inverse([piece], 3)
        assert err.value.dimension == 0


class TestIsApolarScheme:
    def test_coordinate_points_fermat(self):
        points = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        cert = is_apolar_scheme(points, fermat(3))
        assert cert.apolar and cert.exact
        assert cert.weights == (Fraction(1), Fraction(1), Fraction(1))
        assert cert.residual == 0

    def test_single_point_fails(self):
        f = Polynomial(2, 3, {(3, 0): 1, (0, 3): 1})
        cert = is_apolar_scheme([(1, 0)], f)
        assert not cert.apolar and cert.weights is None

    def test_coincident_points_rejected(self):
        with pytest.raises(ValueError):
            is_apolar_scheme([(1, 2, 0), (2, 4, 0)], fermat(3))

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            is_apolar_scheme([], fermat(3))

    def test_floating_path(self):
        from mpmath import mpf
        points = [(mpf(1), mpf(0), mpf(0)), (mpf(0), mpf(1), mpf(0)),
                  (mpf(0), mpf(0), mpf(1))]
        cert = is_apolar_scheme(points, fermat(3))
        assert cert.apolar and not cert.exact
        assert cert.residual < 1e-20

    def test_general_degree(self):
        # x0^4 + x1^4 from two coordinate points
        f = Polynomial(2, 4, {(4, 0): 1, (0, 4): 3})
        cert = is_apolar_scheme([(1, 0), (0, 1)], f)
        assert cert.apolar and cert.weights == (Fraction(1), Fraction(3))


class TestEquivariance:
    def test_catalecticant_ranks_are_gl_invariant(self):
        rng = make_rng(30)
        for _ in range(20):
            n = rng.randint(2, 4)
            f = random_form(n, 3, rng)
            m = random_invertible_matrix(n, rng)
            g = change_coordinates(f, m)
            for k in range(4):
                assert catalecticant(f, k).rank() == catalecticant(g, k).rank()

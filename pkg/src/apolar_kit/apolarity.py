"""Apolar ideals, catalecticants, Hilbert functions and the inverse system.

The graded piece of the annihilator of a form F in degree k is the kernel
of the contraction map from degree-k dual operators to forms of degree
d - k; the map in the other direction (recovering F, up to scalar, from
enough graded pieces) is `macaulay_inverse`.  All of it is plain exact
linear algebra on the matrices produced by `catalecticant`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Optional, Sequence

from mpmath import mp

from .core import (ExactMatrix, Polynomial, coefficient_matrix, contract,
                   monomial_basis)
from .numerics import (DEFAULT_PRECISION_BITS, DEFAULT_TOLERANCE,
                       least_squares, to_mp, workprec)

__all__ = [
    "GradedIdealPiece",
    "ApolarAlgebraProfile",
    "ApolarityCertificate",
    "SocleDimensionError",
    "catalecticant",
    "apolar_ideal_piece",
    "hilbert_function",
    "macaulay_inverse",
    "is_apolar_scheme",
    "piece_contains",
    "power_coefficient_vector",
]


class SocleDimensionError(ValueError):
    """Raised when graded pieces do not cut out a one-dimensional socle.

    Carries the computed dimension and the Hilbert vector of the input
    pieces so callers can diagnose a bad (non-general) choice of data.
    """

    def __init__(self, dimension: int, hilbert: tuple[int, ...]):
        self.dimension = dimension
        self.hilbert = hilbert
        super().__init__(
            f"socle dimension is {dimension}, expected 1; input Hilbert vector {hilbert}")


@dataclass(frozen=True)
class GradedIdealPiece:
    """A basis of one graded component of an ideal in the dual ring."""

    degree: int
    nvars: int
    basis: tuple[Polynomial, ...]

    def __post_init__(self):
        for p in self.basis:
            if p.degree != self.degree or p.nvars != self.nvars:
                raise ValueError("basis element has wrong degree or arity")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def ambient_dim(self) -> int:
        return comb(self.nvars + self.degree - 1, self.degree)

    def matrix(self) -> ExactMatrix:
        return coefficient_matrix(self.basis, monomial_basis(self.nvars, self.degree))

    @classmethod
    def from_vectors(cls, degree: int, nvars: int, vectors: Sequence[Sequence]) -> "GradedIdealPiece":
        basis = monomial_basis(nvars, degree)
        polys = tuple(Polynomial.from_vector(nvars, degree, v, basis) for v in vectors)
        return cls(degree, nvars, polys)

    @classmethod
    def from_spanning(cls, degree: int, nvars: int, polys: Sequence[Polynomial]) -> "GradedIdealPiece":
        """Canonical piece spanned by possibly dependent polynomials."""
        if not polys:
            return cls(degree, nvars, ())
        reduced, pivots = coefficient_matrix(
            polys, monomial_basis(nvars, degree)).rref()
        vectors = [reduced.row(i) for i in range(len(pivots))]
        return cls.from_vectors(degree, nvars, vectors)


@dataclass(frozen=True)
class ApolarAlgebraProfile:
    """Hilbert function of the quotient by an apolar ideal."""

    socle_degree: int
    hilbert: tuple[int, ...]

    @property
    def socle_dim(self) -> int:
        return self.hilbert[self.socle_degree]

    def is_symmetric(self) -> bool:
        h = self.hilbert
        return all(h[k] == h[self.socle_degree - k] for k in range(len(h)))


def catalecticant(form: Polynomial, k: int) -> ExactMatrix:
    """Matrix of D |-> D . f from degree-k duals to forms of degree d - k.

    Rows are indexed by the degree-(d-k) monomial basis, columns by the
    degree-k dual monomial basis, both in graded-lex order; the kernel is
    the degree-k piece of the annihilator of f.
    """
    d = form.degree
    if k < 0 or k > d:
        raise ValueError(f"contraction order k={k} outside 0..{d}")
    n = form.nvars
    cols = monomial_basis(n, k)
    rows = monomial_basis(n, d - k)
    row_index = {exp: i for i, exp in enumerate(rows)}
    matrix = [[Fraction(0)] * len(cols) for _ in rows]
    for j, a in enumerate(cols):
        image = contract(Polynomial.monomial(a), form)
        for exp, c in image.terms.items():
            matrix[row_index[exp]][j] = c
    return ExactMatrix(matrix)


def apolar_ideal_piece(form: Polynomial, k: int) -> GradedIdealPiece:
    """Degree-k graded piece of the annihilator ideal of a form.

    For k up to deg f this is the catalecticant kernel; the piece in
    degree deg f + 1 is the whole dual space.
    """
    d = form.degree
    if k < 0:
        raise ValueError("negative degree")
    if k > d + 1:
        raise ValueError(f"piece degree {k} exceeds socle degree + 1")
    n = form.nvars
    if k == d + 1:
        basis = monomial_basis(n, k)
        return GradedIdealPiece.from_vectors(
            k, n, ExactMatrix.identity(len(basis)).rows())
    kernel = catalecticant(form, k).kernel()
    return GradedIdealPiece.from_vectors(k, n, kernel.rows())


def hilbert_function(form: Polynomial) -> ApolarAlgebraProfile:
    """Hilbert function of the apolar quotient algebra of a nonzero form."""
    if form.is_zero():
        raise ValueError("the zero form has no apolar algebra profile")
    d = form.degree
    hilbert = tuple(catalecticant(form, k).rank() for k in range(d + 1))
    return ApolarAlgebraProfile(socle_degree=d, hilbert=hilbert)


def _condition_rows(piece: GradedIdealPiece, d: int,
                    columns: Sequence[tuple[int, ...]]) -> list[list[Fraction]]:
    """Linear conditions `D . F = 0` on the coefficients of F in degree d."""
    n = piece.nvars
    k = piece.degree
    targets = monomial_basis(n, d - k)
    rows = []
    for op in piece.basis:
        by_target: dict[tuple[int, ...], list[Fraction]] = {t: [Fraction(0)] * len(columns)
                                                            for t in targets}
        for j, m in enumerate(columns):
            image = contract(op, Polynomial.monomial(m))
            for exp, c in image.terms.items():
                by_target[exp][j] = c
        rows.extend(by_target[t] for t in targets)
    return rows


def macaulay_inverse(pieces: Sequence[GradedIdealPiece], d: int) -> Polynomial:
    """Recover the unique form annihilated by the given graded pieces.

    `pieces` hold components of an ideal in degrees between 1 and d.  The
    solution space is cut out degree by degree, highest first (the top
    piece pins the form down to a low-dimensional space, so the remaining
    conditions are cheap).  Raises SocleDimensionError unless the space
    of solutions is exactly one-dimensional; the result is normalized so
    its leading graded-lex coefficient is 1.
    """
    if d < 1:
        raise ValueError("socle degree must be >= 1")
    by_degree = sorted((p for p in pieces if p.dim > 0),
                       key=lambda p: p.degree, reverse=True)
    if not by_degree:
        raise ValueError("no nonempty graded pieces given")
    n = by_degree[0].nvars
    for p in by_degree:
        if p.nvars != n:
            raise ValueError("pieces live in different dual rings")
        if not 1 <= p.degree <= d:
            raise ValueError(f"piece degree {p.degree} outside 1..{d}")
    columns = monomial_basis(n, d)

    def input_hilbert() -> tuple[int, ...]:
        dims = {p.degree: p.dim for p in by_degree}
        return (1,) + tuple(comb(n + k - 1, k) - dims.get(k, 0) for k in range(1, d + 1))

    # solution space of the top piece, then intersect downwards
    top = by_degree[0]
    basis_vectors = ExactMatrix(_condition_rows(top, d, columns)).kernel().rows()
    for piece in by_degree[1:]:
        if not basis_vectors:
            break
        conditions = ExactMatrix(_condition_rows(piece, d, columns))
        # express the conditions in coordinates of the current solution space
        reduced = [[sum(row[j] * vec[j] for j in range(len(columns)) if row[j] and vec[j])
                    for vec in basis_vectors]
                   for row in conditions.rows()]
        coeffs = ExactMatrix(reduced).kernel().rows()
        basis_vectors = [
            [sum(c * vec[j] for c, vec in zip(combo, basis_vectors)) for j in range(len(columns))]
            for combo in coeffs]
    dim = len(basis_vectors)
    if dim != 1:
        raise SocleDimensionError(dim, input_hilbert())
    form = Polynomial.from_vector(n, d, basis_vectors[0], columns)
    return form.normalized()


def power_coefficient_vector(point: Sequence, d: int,
                             basis: Sequence[tuple[int, ...]]):
    """Coefficient vector of (sum_i p_i x_i)^d over the degree-d basis."""
    out = []
    for exp in basis:
        m = factorial(d)
        for e in exp:
            m //= factorial(e)
        val = m
        for p, e in zip(point, exp):
            for _ in range(e):
                val = val * p
        out.append(val)
    return out


@dataclass(frozen=True)
class ApolarityCertificate:
    """Outcome of an apolar-scheme membership test."""

    apolar: bool
    weights: Optional[tuple]
    residual: object  # Fraction(0) on the exact path, mpf otherwise
    exact: bool


def _points_coincide_exact(u: Sequence[Fraction], v: Sequence[Fraction]) -> bool:
    for i in range(len(u)):
        for j in range(i + 1, len(u)):
            if u[i] * v[j] != u[j] * v[i]:
                return False
    return True


def _all_exact(points: Sequence[Sequence]) -> bool:
    return all(isinstance(c, (int, Fraction)) for p in points for c in p)


def is_apolar_scheme(points: Sequence[Sequence], form: Polynomial,
                     precision_bits: int = DEFAULT_PRECISION_BITS,
                     tolerance: Fraction = DEFAULT_TOLERANCE) -> ApolarityCertificate:
    """Check whether reduced dual points realize f as a power sum.

    `points` are coordinate tuples in the dual space; the point with
    coordinates c corresponds to the linear form sum_i c_i x_i.  The test
    succeeds exactly when f lies in the span of the d-th powers of those
    forms, and the solved weights are returned as the certificate.
    Coincident points are rejected (only reduced schemes are supported).
    """
    if not points:
        raise ValueError("empty point list")
    n = form.nvars
    for p in points:
        if len(p) != n:
            raise ValueError("point arity does not match the form")
        if not any(p):
            raise ValueError("zero vector is not a projective point")
    exact = _all_exact(points)
    if exact:
        pts = [tuple(Fraction(c) for c in p) for p in points]
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                if _points_coincide_exact(pts[i], pts[j]):
                    raise ValueError(f"coincident dual points at indices {i} and {j}")
        basis = monomial_basis(n, form.degree)
        columns = [power_coefficient_vector(p, form.degree, basis) for p in pts]
        system = ExactMatrix(columns).transpose()
        solution = system.solve(form.coefficient_vector(basis))
        if solution is None:
            return ApolarityCertificate(False, None, Fraction(0), True)
        return ApolarityCertificate(True, tuple(solution), Fraction(0), True)
    with workprec(precision_bits):
        basis = monomial_basis(n, form.degree)
        pts = [tuple(to_mp(c) for c in p) for p in points]
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                ui, vj = pts[i], pts[j]
                dot = mp.fsum(a * mp.conj(b) for a, b in zip(ui, vj))
                ni = mp.fsum(abs(a) ** 2 for a in ui)
                nj = mp.fsum(abs(b) ** 2 for b in vj)
                if 1 - abs(dot) ** 2 / (ni * nj) < mp.mpf(10) ** (-16):
                    raise ValueError(f"coincident dual points at indices {i} and {j}")
        matrix = mp.matrix([[to_mp(x) for x in power_coefficient_vector(p, form.degree, basis)]
                            for p in pts]).T
        target = mp.matrix([to_mp(c) for c in form.coefficient_vector(basis)])
        weights = least_squares(matrix, target)
        fitted = matrix * weights
        scale = max(mp.mpf(1), max(abs(x) for x in target))
        residual = max(abs(fitted[i] - target[i]) for i in range(len(basis))) / scale
        ok = residual <= to_mp(tolerance)
        return ApolarityCertificate(bool(ok), tuple(weights) if ok else None,
                                    residual, False)


def piece_contains(piece: GradedIdealPiece, poly: Polynomial) -> bool:
    """Exact membership of a dual form in the span of a graded piece."""
    if piece.dim == 0:
        return poly.is_zero()
    if poly.degree != piece.degree or poly.nvars != piece.nvars:
        raise ValueError("degree or arity mismatch in membership test")
    basis = monomial_basis(piece.nvars, piece.degree)
    system = piece.matrix().transpose()
    return system.solve(poly.coefficient_vector(basis)) is not None

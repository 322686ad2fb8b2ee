"""Waring-rank analysis of cubic forms.

A cubic is a Fermat cubic when it is a sum of cubes of n independent
linear forms in its n variables.  Detection contracts the cubic against
two generic dual directions, which turns the question into a generalized
eigenproblem for a pencil of quadrics: for an actual sum of cubes both
quadrics are diagonal in the (unknown) dual basis, so a simple-spectrum
pencil hands back the linear forms.  Eigenvalues are computed in
high-precision floating point and every candidate decomposition is
validated by an explicit power-sum fit with a residual check; nothing is
ever reported on the strength of the eigenproblem alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from mpmath import mp

from .apolarity import catalecticant, power_coefficient_vector
from .core import ExactMatrix, Polynomial, contract, monomial_basis
from .numerics import (DEFAULT_PRECISION_BITS, DEFAULT_TOLERANCE,
                       least_squares, to_mp, workprec)
from .seeding import make_rng, random_dual_linear

__all__ = [
    "Decomposition",
    "PencilError",
    "rank_lower_bound",
    "power_sum_fit",
    "simultaneous_diagonalize",
    "fermat_detect",
    "fermat_detect_detail",
]


class PencilError(RuntimeError):
    """Failure of the quadric-pencil step; `kind` is one of
    'singular' (every combination tried is degenerate) or
    'non-simple' (repeated eigenvalues, no unique eigenbasis)."""

    def __init__(self, kind: str, message: str):
        self.kind = kind
        super().__init__(message)


@dataclass(frozen=True)
class Decomposition:
    """A certified power-sum presentation f = sum_i w_i l_i^3.

    `forms` holds the coefficient vectors of the linear forms l_i; on
    the exact path everything is Fraction and the residual is exactly
    zero, otherwise entries are mp floats (possibly complex) and the
    residual is the coefficientwise sup distance between f and the sum,
    relative to the largest coefficient of f.
    """

    nvars: int
    forms: tuple[tuple, ...]
    weights: tuple
    residual: object
    exact: bool

    @property
    def rank(self) -> int:
        return len(self.forms)

    def form_polynomials(self) -> list[Polynomial]:
        if not self.exact:
            raise ValueError("only exact decompositions convert to Polynomial")
        return [Polynomial(self.nvars, 1,
                           {tuple(1 if j == i else 0 for j in range(self.nvars)): c
                            for i, c in enumerate(vec)})
                for vec in self.forms]

    def reconstruct(self) -> Polynomial:
        """Exact sum of weighted cubes; only available on the exact path."""
        if not self.exact:
            raise ValueError("only exact decompositions reconstruct exactly")
        total = Polynomial.zero(self.nvars, 3)
        for w, ell in zip(self.weights, self.form_polynomials()):
            total = total + w * (ell ** 3)
        return total


def rank_lower_bound(form: Polynomial) -> int:
    """Rank of the degree-1 contraction matrix; Waring rank is at least this."""
    if form.degree != 3:
        raise ValueError("rank bound implemented for cubics only")
    return catalecticant(form, 1).rank()


def _normalize_point(vec: Sequence, exact: bool):
    if exact:
        lead = next((c for c in vec if c), None)
        if lead is None:
            raise ValueError("zero dual point")
        return tuple(Fraction(c) / lead for c in vec)
    biggest = max(abs(c) for c in vec)
    if biggest == 0:
        raise ValueError("zero dual point")
    lead = next(c for c in vec if abs(c) >= biggest / 2)
    return tuple(c / lead for c in vec)


def _sort_key_exact(vec):
    return tuple(vec)


def _sort_key_float(vec):
    return tuple((mp.re(c), mp.im(c)) for c in vec)


def power_sum_fit(points: Sequence[Sequence], form: Polynomial,
                  precision_bits: int = DEFAULT_PRECISION_BITS,
                  tolerance: Fraction = DEFAULT_TOLERANCE) -> Optional[Decomposition]:
    """Solve f = sum_i w_i l_i^3 for the weights, given the dual points.

    Exact inputs run through exact linear algebra and return a residual
    of literally zero or None; floating inputs are solved by least
    squares at the requested precision and accepted only when the
    relative residual stays below the tolerance.
    """
    if form.degree != 3:
        raise ValueError("power-sum fitting implemented for cubics only")
    if not points:
        raise ValueError("no dual points given")
    n = form.nvars
    for p in points:
        if len(p) != n:
            raise ValueError("point arity does not match the form")
    basis = monomial_basis(n, 3)
    exact = all(isinstance(c, (int, Fraction)) for p in points for c in p)
    if exact:
        pts = [tuple(Fraction(c) for c in p) for p in points]
        columns = [power_coefficient_vector(p, 3, basis) for p in pts]
        solution = ExactMatrix(columns).transpose().solve(form.coefficient_vector(basis))
        if solution is None:
            return None
        return Decomposition(n, tuple(pts), tuple(solution), Fraction(0), True)
    with workprec(precision_bits):
        pts = [tuple(to_mp(c) for c in p) for p in points]
        matrix = mp.matrix([[to_mp(v) for v in power_coefficient_vector(p, 3, basis)]
                            for p in pts]).T
        target = mp.matrix([to_mp(c) for c in form.coefficient_vector(basis)])
        try:
            weights = least_squares(matrix, target)
        except ValueError:
            return None
        fitted = matrix * weights
        scale = max(mp.mpf(1), max(abs(x) for x in target))
        residual = max(abs(fitted[i] - target[i]) for i in range(matrix.rows)) / scale
        if residual > to_mp(tolerance):
            return None
        return Decomposition(n, tuple(pts), tuple(weights), residual, False)


def _quadric_matrix(q: Polynomial) -> ExactMatrix:
    """Symmetric matrix A with q(x) = x^T A x."""
    if q.degree != 2:
        raise ValueError("not a quadric")
    n = q.nvars
    rows = [[Fraction(0)] * n for _ in range(n)]
    for exp, c in q.terms.items():
        support = [i for i, e in enumerate(exp) if e]
        if len(support) == 1:
            i = support[0]
            rows[i][i] = c
        else:
            i, j = support
            rows[i][j] = c / 2
            rows[j][i] = c / 2
    return ExactMatrix(rows)


def simultaneous_diagonalize(q1: Polynomial, q2: Polynomial,
                             precision_bits: int = DEFAULT_PRECISION_BITS) -> list[tuple]:
    """Common diagonalizing dual points of a pencil of quadrics.

    Writes the quadrics as symmetric matrices (A, B), requires some
    combination of the pencil to be invertible, and solves the standard
    eigenproblem of B^-1 A.  With a simple spectrum the eigenvectors v_i
    are unique up to scale and the images B v_i are the coefficient
    vectors of the linear forms that diagonalize both quadrics at once;
    those are returned, normalized.  Raises PencilError('singular') when
    no invertible member is found and PencilError('non-simple') when
    eigenvalues collide.
    """
    if q1.nvars != q2.nvars:
        raise ValueError("quadrics in different variable sets")
    a = _quadric_matrix(q1)
    b = _quadric_matrix(q2)
    n = q1.nvars
    base, other = b, a
    if base.rank() < n:
        base, other = a, b
        if base.rank() < n:
            # generic members of the pencil may still be invertible
            found = False
            for j in range(1, 6):
                cand = ExactMatrix([[a.entry(r, c) + Fraction(j) * b.entry(r, c)
                                     for c in range(n)] for r in range(n)])
                if cand.rank() == n:
                    base, other, found = cand, a, True
                    break
            if not found:
                raise PencilError("singular", "no invertible member of the pencil found")
    m = base.inverse() @ other
    with workprec(precision_bits):
        mm = mp.matrix([[to_mp(m.entry(i, j)) for j in range(n)] for i in range(n)])
        eigenvalues, eigenvectors = mp.eig(mm)
        sep_tol = mp.mpf(2) ** (-(precision_bits // 3))
        scale = max(mp.mpf(1), max(abs(e) for e in eigenvalues))
        for i in range(n):
            for j in range(i + 1, n):
                if abs(eigenvalues[i] - eigenvalues[j]) < sep_tol * scale:
                    raise PencilError(
                        "non-simple",
                        f"eigenvalues {i} and {j} coincide at this precision")
        base_mp = mp.matrix([[to_mp(base.entry(i, j)) for j in range(n)] for i in range(n)])
        other_mp = mp.matrix([[to_mp(other.entry(i, j)) for j in range(n)] for i in range(n)])
        points = []
        for i in range(n):
            v = eigenvectors[:, i]
            image = base_mp * v
            norm = mp.sqrt(mp.fsum(abs(x) ** 2 for x in image))
            vnorm = mp.sqrt(mp.fsum(abs(x) ** 2 for x in v))
            if norm < sep_tol * vnorm:
                image = other_mp * v
            point = _normalize_point([image[r] for r in range(n)], exact=False)
            # drop negligible imaginary dust so real pencils give real points
            cleaned = []
            real_scale = max(abs(c) for c in point)
            for c in point:
                if abs(mp.im(c)) < sep_tol * real_scale:
                    cleaned.append(mp.re(c))
                else:
                    cleaned.append(c)
            points.append(tuple(cleaned))
        points.sort(key=_sort_key_float)
        return points


def fermat_detect_detail(form: Polynomial, seed: int = 0,
                         precision_bits: int = DEFAULT_PRECISION_BITS,
                         tolerance: Fraction = DEFAULT_TOLERANCE
                         ) -> tuple[Optional[Decomposition], str]:
    """Fermat-cubic detection with an explanation of any failure.

    Returns (decomposition, 'ok') on success.  Failure reasons:
    'rank-deficient'   the degree-1 contraction rank is below n, so the
                       form cannot be a sum of n independent cubes;
    'singular-pencil'  every seeded choice of contraction directions gave
                       a degenerate pencil;
    'non-simple-pencil' eigenvalues collide, so no unique eigenbasis;
    'fit-failed'       the candidate points do not reproduce the form.
    """
    if form.degree != 3:
        raise ValueError("Fermat detection needs a cubic")
    n = form.nvars
    if rank_lower_bound(form) < n:
        return None, "rank-deficient"
    if n == 1:
        coef = form.coefficient((3,))
        return Decomposition(1, ((Fraction(1),),), (coef,), Fraction(0), True), "ok"
    rng = make_rng(seed)
    last_kind = "singular"
    for _ in range(5):
        eta1 = random_dual_linear(n, rng)
        eta2 = random_dual_linear(n, rng)
        quad1 = contract(eta1, form)
        quad2 = contract(eta2, form)
        try:
            points = simultaneous_diagonalize(quad1, quad2, precision_bits)
        except PencilError as err:
            last_kind = err.kind
            continue
        decomposition = power_sum_fit(points, form, precision_bits, tolerance)
        if decomposition is None:
            return None, "fit-failed"
        order = sorted(range(len(points)), key=lambda i: _sort_key_float(decomposition.forms[i]))
        ordered = Decomposition(
            n,
            tuple(decomposition.forms[i] for i in order),
            tuple(decomposition.weights[i] for i in order),
            decomposition.residual,
            decomposition.exact,
        )
        return ordered, "ok"
    return None, f"{last_kind}-pencil"


def fermat_detect(form: Polynomial, seed: int = 0,
                  precision_bits: int = DEFAULT_PRECISION_BITS,
                  tolerance: Fraction = DEFAULT_TOLERANCE) -> Optional[Decomposition]:
    """Decompose a Fermat cubic into n cubes, or return None."""
    decomposition, _ = fermat_detect_detail(form, seed, precision_bits, tolerance)
    return decomposition

"""Exact arithmetic core.

Sparse homogeneous polynomials over Q, the contraction action of
constant-coefficient differential operators on forms, and exact rational
linear algebra (rank / kernel / solve).  No floating point enters this
module; every value is immutable after construction, so everything here
can be shared freely between workers.

Conventions used throughout the package:

* a monomial is an exponent tuple ``(e_0, ..., e_{n-1})``;
* the fixed monomial order is graded lexicographic, realised for a single
  degree as descending lexicographic comparison of exponent tuples
  (``x0^d`` first);
* the same ``Polynomial`` class represents forms in the ``x`` variables
  and operators in the dual variables; which ring a value lives in is a
  matter of how it is used.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

__all__ = [
    "Polynomial",
    "ExactMatrix",
    "monomial_basis",
    "contract",
    "pair",
    "change_coordinates",
    "coefficient_matrix",
    "primitive_point",
]


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an integer or Fraction coefficient, got {value!r}")


def monomial_basis(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples of the given total degree, in graded-lex order.

    The list has exactly ``comb(nvars + degree - 1, degree)`` entries and
    starts with ``(degree, 0, ..., 0)``.
    """
    if nvars < 1:
        raise ValueError(f"nvars must be >= 1, got {nvars}")
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], remaining: int, slots: int) -> None:
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    rec((), degree, nvars)
    return out


class Polynomial:
    """Sparse homogeneous polynomial with exact rational coefficients.

    ``terms`` maps exponent tuples (length ``nvars``, total degree equal
    to ``degree``) to nonzero ``Fraction`` coefficients.  The zero
    polynomial keeps its degree tag and has an empty term map.
    """

    __slots__ = ("nvars", "degree", "terms")

    def __init__(self, nvars: int, degree: int, terms: dict):
        if nvars < 1:
            raise ValueError(f"nvars must be >= 1, got {nvars}")
        if degree < 0:
            raise ValueError(f"degree must be >= 0, got {degree}")
        clean: dict[tuple[int, ...], Fraction] = {}
        for exp, coef in terms.items():
            exp = tuple(exp)
            coef = _coerce(coef)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has wrong arity for nvars={nvars}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            if sum(exp) != degree:
                raise ValueError(f"monomial {exp} is not of degree {degree}")
            acc = clean.get(exp, Fraction(0)) + coef
            if acc:
                clean[exp] = acc
            else:
                clean.pop(exp, None)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int, degree: int) -> "Polynomial":
        return cls(nvars, degree, {})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coef=1) -> "Polynomial":
        exp = tuple(exponents)
        return cls(len(exp), sum(exp), {exp: coef})

    @classmethod
    def variable(cls, index: int, nvars: int) -> "Polynomial":
        exp = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, 1, {exp: 1})

    @classmethod
    def from_vector(cls, nvars: int, degree: int, vector: Sequence,
                    basis: Optional[Sequence[tuple[int, ...]]] = None) -> "Polynomial":
        if basis is None:
            basis = monomial_basis(nvars, degree)
        if len(vector) != len(basis):
            raise ValueError("coefficient vector does not match basis length")
        return cls(nvars, degree, dict(zip(basis, vector)))

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exponents), Fraction(0))

    def coefficient_vector(self, basis: Optional[Sequence[tuple[int, ...]]] = None) -> list[Fraction]:
        if basis is None:
            basis = monomial_basis(self.nvars, self.degree)
        return [self.terms.get(exp, Fraction(0)) for exp in basis]

    def leading_term(self) -> tuple[tuple[int, ...], Fraction]:
        """Term whose monomial comes first in graded-lex order."""
        exp = max(self.terms)
        return exp, self.terms[exp]

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def normalized(self) -> "Polynomial":
        """Scale so the first nonzero coefficient in graded-lex order is 1."""
        if self.is_zero():
            return self
        _, lead = self.leading_term()
        return self * (Fraction(1) / lead)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms.get(exp, Fraction(0)) + c
        return Polynomial(self.nvars, self.degree, terms)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, self.degree, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch in product")
            terms: dict[tuple[int, ...], Fraction] = {}
            for ea, ca in self.terms.items():
                for eb, cb in other.terms.items():
                    exp = tuple(a + b for a, b in zip(ea, eb))
                    terms[exp] = terms.get(exp, Fraction(0)) + ca * cb
            return Polynomial(self.nvars, self.degree + other.degree, terms)
        coef = _coerce(other)
        return Polynomial(self.nvars, self.degree,
                          {e: c * coef for e, c in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        result = Polynomial(self.nvars, 0, {(0,) * self.nvars: 1})
        for _ in range(n):
            result = result * self
        return result

    def evaluate(self, values: Sequence):
        """Evaluate at a point; works for Fraction, int or mpmath values."""
        if len(values) != self.nvars:
            raise ValueError("point has wrong length")
        total = None
        for exp, coef in self.sorted_terms():
            prod = coef
            for v, e in zip(values, exp):
                for _ in range(e):
                    prod = prod * v
            total = prod if total is None else total + prod
        if total is None:
            return Fraction(0)
        return total

    def _check_compatible(self, other: "Polynomial") -> None:
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {other!r}")
        if other.nvars != self.nvars or other.degree != self.degree:
            raise ValueError(
                f"incompatible polynomials: ({self.nvars},{self.degree}) vs "
                f"({other.nvars},{other.degree})")

    # -- comparison / display -------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, Polynomial) and self.nvars == other.nvars
                and self.degree == other.degree and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, self.degree, tuple(self.sorted_terms())))

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {self.degree}, {self.to_string()!r})"

    def to_string(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for exp, coef in self.sorted_terms():
            factors = []
            for i, e in enumerate(exp):
                if e == 1:
                    factors.append(f"{var}{i}")
                elif e > 1:
                    factors.append(f"{var}{i}^{e}")
            mono = "*".join(factors) if factors else "1"
            if coef == 1 and factors:
                parts.append(mono)
            elif coef == -1 and factors:
                parts.append(f"-{mono}")
            elif factors:
                parts.append(f"{coef}*{mono}")
            else:
                parts.append(str(coef))
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __str__(self) -> str:
        return self.to_string()


def _falling(b: Sequence[int], a: Sequence[int]) -> int:
    """prod_i b_i (b_i - 1) ... (b_i - a_i + 1); zero if any a_i > b_i."""
    out = 1
    for bi, ai in zip(b, a):
        if ai > bi:
            return 0
        for j in range(ai):
            out *= bi - j
    return out


def contract(op: Polynomial, form: Polynomial) -> Polynomial:
    """Apply a dual operator of degree a to a form of degree b.

    On monomials the action is a! * C(b, a) * x^(b-a) when b >= a and 0
    otherwise (the multi-index factorial and binomial), extended
    bilinearly; this is literal repeated partial differentiation.  The
    result is homogeneous of degree b - a, the zero form when every term
    dies, and the zero form of degree 0 when a > b.
    """
    if op.nvars != form.nvars:
        raise ValueError(
            f"variable count mismatch: operator has {op.nvars}, form has {form.nvars}")
    if op.degree > form.degree:
        return Polynomial.zero(form.nvars, 0)
    out_degree = form.degree - op.degree
    terms: dict[tuple[int, ...], Fraction] = {}
    for a, ca in op.terms.items():
        for b, cb in form.terms.items():
            factor = _falling(b, a)
            if factor:
                exp = tuple(bi - ai for bi, ai in zip(b, a))
                terms[exp] = terms.get(exp, Fraction(0)) + ca * cb * factor
    return Polynomial(form.nvars, out_degree, terms)


def pair(form: Polynomial, op: Polynomial) -> Fraction:
    """The perfect pairing between degree-d forms and degree-d operators.

    On monomial bases its Gram matrix is diagonal with entries the
    multi-index factorials, hence invertible.
    """
    if form.degree != op.degree:
        raise ValueError(
            f"degree mismatch in pairing: {form.degree} vs {op.degree}")
    result = contract(op, form)
    return result.coefficient((0,) * form.nvars)


def change_coordinates(form: Polynomial, matrix: "ExactMatrix") -> Polynomial:
    """Substitute x_i -> sum_j M[i][j] x_j; requires M invertible.

    Satisfies change(change(f, M), M') == change(f, M @ M').
    """
    n = form.nvars
    if matrix.nrows != n or matrix.ncols != n:
        raise ValueError("matrix shape does not match variable count")
    if matrix.rank() != n:
        raise ValueError("coordinate change matrix is singular")
    images = []
    for i in range(n):
        row = {tuple(1 if k == j else 0 for k in range(n)): matrix.entry(i, j)
               for j in range(n)}
        images.append(Polynomial(n, 1, row))
    powers: dict[tuple[int, int], Polynomial] = {}

    def power(i: int, e: int) -> Polynomial:
        key = (i, e)
        if key not in powers:
            powers[key] = images[i] ** e
        return powers[key]

    total = Polynomial.zero(n, form.degree)
    for exp, coef in form.terms.items():
        piece = Polynomial(n, 0, {(0,) * n: coef})
        for i, e in enumerate(exp):
            if e:
                piece = piece * power(i, e)
        total = total + piece
    return total


# ----------------------------------------------------------------------
# exact linear algebra
# ----------------------------------------------------------------------

def _row_to_int(row: Sequence) -> list[int]:
    """Scale a rational row to a primitive integer row (kernel-safe)."""
    denom = 1
    for x in row:
        if isinstance(x, Fraction):
            denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) if isinstance(x, Fraction) else int(x) * denom for x in row]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _int_echelon(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int], list[int]]:
    """Fraction-free row echelon form of integer rows.

    Returns (echelon rows, pivot columns, pivot row indices aligned with
    the pivot columns).  Rows are gcd-stripped after every elimination to
    keep entries small; the row space is preserved up to scaling, which
    is all rank/kernel/solve need.
    """
    mat = [r[:] for r in rows]
    pivots: list[int] = []
    prow = 0
    for col in range(ncols):
        best = -1
        best_size = None
        for i in range(prow, len(mat)):
            v = mat[i][col]
            if v:
                size = abs(v)
                if best_size is None or size < best_size:
                    best, best_size = i, size
        if best < 0:
            continue
        mat[prow], mat[best] = mat[best], mat[prow]
        piv = mat[prow][col]
        for i in range(prow + 1, len(mat)):
            v = mat[i][col]
            if v:
                row = [piv * a - v * b for a, b in zip(mat[i], mat[prow])]
                g = 0
                for x in row:
                    g = gcd(g, x)
                if g > 1:
                    row = [x // g for x in row]
                mat[i] = row
        pivots.append(col)
        prow += 1
        if prow == len(mat):
            break
    return mat[:prow], pivots, list(range(prow))


class ExactMatrix:
    """Dense matrix over Q with exact rank / kernel / solve.

    Internally stores ``Fraction`` entries.  Elimination runs fraction
    free on gcd-stripped integer rows, so large evaluation matrices stay
    fast; rational arithmetic only enters during back substitution.
    """

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable]):
        data = [[_coerce(x) for x in row] for row in rows]
        if data:
            width = len(data[0])
            for row in data:
                if len(row) != width:
                    raise ValueError("ragged rows")
        else:
            width = 0
        object.__setattr__(self, "_rows", data)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", width)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "ExactMatrix":
        return cls([[0] * ncols for _ in range(nrows)])

    # -- queries ---------------------------------------------------------

    def entry(self, i: int, j: int) -> Fraction:
        return self._rows[i][j]

    def row(self, i: int) -> list[Fraction]:
        return list(self._rows[i])

    def rows(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    def column(self, j: int) -> list[Fraction]:
        return [r[j] for r in self._rows]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([[self._rows[i][j] for i in range(self.nrows)]
                            for j in range(self.ncols)])

    def is_zero(self) -> bool:
        return all(not x for row in self._rows for x in row)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ExactMatrix) and self.nrows == other.nrows
                and self.ncols == other.ncols and self._rows == other._rows)

    def __repr__(self) -> str:
        return f"ExactMatrix({self.nrows}x{self.ncols})"

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        cols = other.transpose()._rows
        return ExactMatrix([[sum(a * b for a, b in zip(row, col)) for col in cols]
                            for row in self._rows])

    def apply(self, vector: Sequence) -> list[Fraction]:
        if len(vector) != self.ncols:
            raise ValueError("vector length mismatch")
        return [sum((a * b for a, b in zip(row, vector)), Fraction(0))
                for row in self._rows]

    # -- elimination -------------------------------------------------------

    def _int_rows(self) -> list[list[int]]:
        return [_row_to_int(row) for row in self._rows]

    def rank(self) -> int:
        if self.nrows == 0 or self.ncols == 0:
            return 0
        _, pivots, _ = _int_echelon(self._int_rows(), self.ncols)
        return len(pivots)

    def rref(self) -> tuple["ExactMatrix", tuple[int, ...]]:
        """Reduced row echelon form and its pivot columns (canonical)."""
        if self.nrows == 0 or self.ncols == 0:
            return ExactMatrix([]), ()
        ech, pivots, _ = _int_echelon(self._int_rows(), self.ncols)
        reduced = [[Fraction(x) for x in row] for row in ech]
        for r in range(len(pivots) - 1, -1, -1):
            col = pivots[r]
            piv = reduced[r][col]
            if piv != 1:
                reduced[r] = [x / piv for x in reduced[r]]
            for i in range(r):
                f = reduced[i][col]
                if f:
                    reduced[i] = [a - f * b for a, b in zip(reduced[i], reduced[r])]
        return ExactMatrix(reduced), tuple(pivots)

    def kernel(self) -> "ExactMatrix":
        """Basis of the right kernel, one vector per row.

        The basis is the canonical one attached to the reduced echelon
        form (unit entry at each free column); every vector is scaled so
        its first nonzero entry is 1.
        """
        if self.ncols == 0:
            return ExactMatrix([])
        if self.nrows == 0:
            return ExactMatrix.identity(self.ncols)
        ech, pivots, _ = _int_echelon(self._int_rows(), self.ncols)
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for j in free:
            v = [Fraction(0)] * self.ncols
            v[j] = Fraction(1)
            # back-substitute bottom pivot row first
            for r in range(len(pivots) - 1, -1, -1):
                col = pivots[r]
                row = ech[r]
                s = Fraction(0)
                for c in range(col + 1, self.ncols):
                    if row[c] and v[c]:
                        s += Fraction(row[c]) * v[c]
                if s:
                    v[col] = -s / row[col]
            # normalize: first nonzero entry 1
            for x in v:
                if x:
                    if x != 1:
                        v = [y / x for y in v]
                    break
            basis.append(v)
        return ExactMatrix(basis)

    def solve(self, rhs: Sequence) -> Optional[list[Fraction]]:
        """One exact solution of A x = b, or None when inconsistent.

        Free variables are set to zero.
        """
        if len(rhs) != self.nrows:
            raise ValueError("right-hand side has wrong length")
        aug_rows = [list(row) + [_coerce(b)] for row, b in zip(self._rows, rhs)]
        if not aug_rows:
            return [Fraction(0)] * self.ncols
        ech, pivots, _ = _int_echelon([_row_to_int(r) for r in aug_rows], self.ncols + 1)
        if pivots and pivots[-1] == self.ncols:
            return None
        x = [Fraction(0)] * self.ncols
        for r in range(len(pivots) - 1, -1, -1):
            col = pivots[r]
            row = ech[r]
            s = Fraction(row[self.ncols])
            for c in range(col + 1, self.ncols):
                if row[c] and x[c]:
                    s -= Fraction(row[c]) * x[c]
            x[col] = s / row[col]
        return x

    def inverse(self) -> "ExactMatrix":
        if self.nrows != self.ncols:
            raise ValueError("only square matrices can be inverted")
        n = self.nrows
        aug = ExactMatrix([list(row) + [1 if i == j else 0 for j in range(n)]
                           for i, row in enumerate(self._rows)])
        reduced, pivots = aug.rref()
        if list(pivots[:n]) != list(range(n)):
            raise ValueError("matrix is singular")
        return ExactMatrix([[reduced.entry(i, n + j) for j in range(n)] for i in range(n)])


def primitive_point(coords: Sequence) -> tuple[int, ...]:
    """Scale rational projective coordinates to coprime integers with a
    positive leading entry."""
    fracs = [c if isinstance(c, Fraction) else Fraction(c) for c in coords]
    den = 1
    for c in fracs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    lead = next((v for v in ints if v), 1)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def coefficient_matrix(polys: Sequence[Polynomial],
                       basis: Optional[Sequence[tuple[int, ...]]] = None) -> ExactMatrix:
    """Stack coefficient vectors of polynomials of one (nvars, degree)."""
    polys = list(polys)
    if not polys:
        return ExactMatrix([])
    nvars, degree = polys[0].nvars, polys[0].degree
    if basis is None:
        basis = monomial_basis(nvars, degree)
    rows = []
    for p in polys:
        if p.nvars != nvars or p.degree != degree:
            raise ValueError("mixed shapes in coefficient matrix")
        rows.append(p.coefficient_vector(basis))
    return ExactMatrix(rows)

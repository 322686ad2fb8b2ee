"""Trigonal and tetragonal canonical curves on rational normal scrolls.

A trigonal curve of genus g is a section of the class 3H + (4-g)F on a
balanced surface scroll of degree g - 2: adjunction makes the hyperplane
series canonical and the ruling cuts the degree-3 pencil.  A tetragonal
curve is the complete intersection of sections of 2H - b1 F and
2H - b2 F, b1 + b2 = g - 5, on a balanced threefold scroll of degree
g - 3.

Exact rational points on a random curve of genus >= 2 are scarce (only
finitely many exist at all), so the generators interpolate: a few fibers
are forced to split rationally by prescribing points on them, and those
base values are recorded on the curve as sampling hints.  The graded
pieces of the ideal are computed exactly from the equations: a form of
degree k vanishes on the curve precisely when its restriction to the
scroll is a combination of the curve equations with section multipliers,
which is a finite exact linear system; the sampled points then serve as
an independent vanishing certificate for every basis element.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, isqrt
from typing import Optional, Sequence

import sympy

from .apolarity import GradedIdealPiece
from .core import ExactMatrix, Polynomial, monomial_basis, primitive_point
from .scroll import (DivisorClass, Scroll, canonical_class, chow_product,
                     coordinate_layout, embed_point, section_count,
                     section_templates)
from .seeding import derive_seed, make_rng, small_rationals
from .univariate import rational_roots

__all__ = [
    "BihomSection",
    "CurveSpec",
    "IdealReconstruction",
    "CurveGenerationError",
    "SamplingError",
    "IdealDimensionError",
    "PointCertificateError",
    "balanced_type",
    "random_section",
    "trigonal_curve",
    "tetragonal_curve",
    "sample_points",
    "ideal_pieces",
    "genus_adjunction",
    "expected_quadric_dim",
    "expected_cubic_dim",
]


class CurveGenerationError(RuntimeError):
    pass


class SamplingError(RuntimeError):
    def __init__(self, found: int, requested: int, attempts: int):
        self.found = found
        self.requested = requested
        self.attempts = attempts
        super().__init__(
            f"found only {found} of {requested} rational points after "
            f"{attempts} fiber attempts")


class PointCertificateError(RuntimeError):
    """A reconstructed ideal element failed to vanish on a sampled point."""


class IdealDimensionError(RuntimeError):
    def __init__(self, got: tuple[int, int], expected: tuple[int, int]):
        self.got = got
        self.expected = expected
        super().__init__(
            f"ideal piece dimensions {got} differ from the expected {expected}; "
            "the curve or the sampling is degenerate")


def balanced_type(total: int, parts: int) -> tuple[int, ...]:
    """Most even partition of `total` into `parts` entries, ascending."""
    base, extra = divmod(total, parts)
    return tuple(base if i < parts - extra else base + 1 for i in range(parts))


def expected_quadric_dim(g: int) -> int:
    return (g - 2) * (g - 3) // 2


def expected_cubic_dim(g: int) -> int:
    return comb(g + 2, 3) - (5 * g - 5)


@dataclass(frozen=True)
class BihomSection:
    """Section of O(cH + mF): one base binary form per fiber monomial."""

    scroll: Scroll
    cls: DivisorClass
    coeffs: dict  # fiber exponent tuple -> Polynomial in (s, t)

    def fiber_form(self, base: Sequence) -> Polynomial:
        """Restriction to the fiber over an exact base point (s0, t0)."""
        k = self.scroll.k
        terms = {}
        for exp, base_form in self.coeffs.items():
            value = base_form.evaluate(base)
            if value:
                terms[exp] = value
        return Polynomial(k, self.cls.h, terms)

    def evaluate(self, base: Sequence, fiber: Sequence):
        total = Fraction(0)
        for exp, base_form in self.coeffs.items():
            value = base_form.evaluate(base)
            for y, e in zip(fiber, exp):
                for _ in range(e):
                    value = value * y
            total = total + value
        return total

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.coeffs.values())


def _section_slots(scroll: Scroll, cls: DivisorClass) -> list[tuple[tuple[int, ...], tuple[int, int]]]:
    """Flat list of coefficient slots (fiber exponent, base exponent)."""
    slots = []
    for exp, degree in section_templates(scroll, cls):
        for j in range(degree + 1):
            slots.append((exp, (degree - j, j)))
    return slots


def _section_from_vector(scroll: Scroll, cls: DivisorClass, slots, vector) -> BihomSection:
    coeffs: dict[tuple[int, ...], dict] = {}
    for (exp, bexp), value in zip(slots, vector):
        coeffs.setdefault(exp, {})[bexp] = value
    forms = {}
    for exp, degree in section_templates(scroll, cls):
        forms[exp] = Polynomial(2, degree, coeffs.get(exp, {}))
    return BihomSection(scroll, cls, forms)


def _slot_value(slot, base, fiber):
    (exp, (p, q)) = slot
    value = Fraction(1)
    for _ in range(p):
        value *= base[0]
    for _ in range(q):
        value *= base[1]
    for y, e in zip(fiber, exp):
        for _ in range(e):
            value = value * y
    return value


def random_section(scroll: Scroll, cls: DivisorClass, rng, bound: int = 9,
                   through: Sequence[tuple] = ()) -> BihomSection:
    """Random section, optionally constrained to vanish at (base, fiber) pairs.

    The constrained section is a random small-integer combination of a
    kernel basis of the point conditions, so coefficients stay rational
    and reproducible.
    """
    slots = _section_slots(scroll, cls)
    if not slots:
        raise CurveGenerationError(f"class {cls} has no sections on {scroll}")
    if not through:
        for _ in range(10):
            vector = [rng.randint(-bound, bound) for _ in slots]
            section = _section_from_vector(scroll, cls, slots, vector)
            if not section.is_zero():
                return section
        raise CurveGenerationError("random section degenerated to zero")
    conditions = ExactMatrix([[_slot_value(slot, base, fiber) for slot in slots]
                              for base, fiber in through])
    kernel = conditions.kernel()
    if kernel.nrows == 0:
        raise CurveGenerationError("point constraints admit no section")
    for _ in range(10):
        combo = [rng.randint(-bound, bound) for _ in range(kernel.nrows)]
        vector = [sum(c * kernel.entry(i, j) for i, c in enumerate(combo))
                  for j in range(len(slots))]
        section = _section_from_vector(scroll, cls, slots, vector)
        if not section.is_zero():
            return section
    raise CurveGenerationError("constrained section degenerated to zero")


@dataclass(frozen=True)
class CurveSpec:
    genus: int
    gonality: int
    scroll: Scroll
    classes: tuple[DivisorClass, ...]
    equations: tuple[BihomSection, ...]
    seed: int
    rational_fiber_hints: tuple[Fraction, ...] = ()

    @property
    def guaranteed_point_count(self) -> int:
        """Rational points certain to exist: every hinted fiber splits
        completely for trigonal curves and carries at least one rational
        point for tetragonal ones."""
        factor = 3 if self.gonality == 3 else 1
        return factor * len(self.rational_fiber_hints)


@dataclass(frozen=True)
class IdealReconstruction:
    genus: int
    degree2: GradedIdealPiece
    degree3: GradedIdealPiece
    point_count: int
    rank_saturated: bool
    dims_expected: bool


def genus_adjunction(scroll: Scroll, cls: DivisorClass) -> int:
    """Genus of a curve class on a surface scroll, by adjunction."""
    if scroll.k != 2:
        raise ValueError("adjunction here needs a surface scroll; blow-up "
                         "contexts go through planemodel.blowup_genus")
    twice = chow_product([cls, cls + canonical_class(scroll)])
    if twice % 2:
        raise ValueError(f"class {cls} has odd adjunction pairing {twice}")
    return twice // 2 + 1


def _binary_to_sympy(form: Polynomial):
    s, t = sympy.symbols("s t")
    expr = sympy.Integer(0)
    for (e0, e1), c in form.terms.items():
        expr += sympy.Rational(c.numerator, c.denominator) * s ** e0 * t ** e1
    return expr


def _common_base_factor(forms: Sequence[Polynomial]) -> bool:
    """True when the base coefficient forms share a nonconstant factor."""
    exprs = [_binary_to_sympy(f) for f in forms if not f.is_zero()]
    if not exprs:
        return True
    g = exprs[0]
    for e in exprs[1:]:
        g = sympy.gcd(g, e)
    return sympy.total_degree(g) > 0


def _binary_cubic_discriminant(c0, c1, c2, c3) -> Fraction:
    return (c1 * c1 * c2 * c2 - 4 * c0 * c2 ** 3 - 4 * c1 ** 3 * c3
            + 18 * c0 * c1 * c2 * c3 - 27 * c0 * c0 * c3 * c3)


def _distinct_small_rationals(rng, count: int, avoid=()) -> list[Fraction]:
    stream = small_rationals(rng)
    out: list[Fraction] = []
    banned = set(avoid)
    while len(out) < count:
        t = next(stream)
        if t not in banned:
            banned.add(t)
            out.append(t)
    return out


def trigonal_curve(g: int, seed: int, max_attempts: int = 10) -> CurveSpec:
    """Random trigonal canonical curve of genus g with split sample fibers.

    A handful of fibers are forced to split over Q by prescribing two
    rational points on each (the third root is then rational as well);
    their base values are stored as sampling hints.  Candidates are
    rejected when the base forms share a factor (the curve would contain
    a fiber) or when any forced or test fiber is degenerate or carries a
    repeated root.
    """
    if g < 5:
        raise ValueError("trigonal construction needs genus >= 5")
    scroll = Scroll(balanced_type(g - 2, 2))
    cls = scroll.cls(3, 4 - g)
    if genus_adjunction(scroll, cls) != g:
        raise CurveGenerationError("adjunction sanity check failed")
    forced_fibers = min((section_count(scroll, cls) - 8) // 2, 7)
    for attempt in range(max_attempts):
        rng = make_rng(derive_seed(seed, attempt))
        hints = _distinct_small_rationals(rng, forced_fibers)
        through = []
        for t in hints:
            base = (t.denominator, t.numerator)
            y1, y2 = _distinct_small_rationals(rng, 2)
            through.append((base, (Fraction(1), y1)))
            through.append((base, (Fraction(1), y2)))
        section = random_section(scroll, cls, rng, through=through)
        if _common_base_factor(list(section.coeffs.values())):
            continue
        good = True
        test_values = hints + _distinct_small_rationals(rng, 5, avoid=hints)
        for t in test_values:
            base = (t.denominator, t.numerator)
            cubic = section.fiber_form(base)
            coeffs = [cubic.coefficient((3 - j, j)) for j in range(4)]
            if all(c == 0 for c in coeffs):
                good = False
                break
            if _binary_cubic_discriminant(*coeffs) == 0:
                good = False
                break
        if good:
            return CurveSpec(g, 3, scroll, (cls,), (section,), seed, tuple(hints))
    raise CurveGenerationError(
        f"no acceptable trigonal section after {max_attempts} attempts")


def _conic_components(conic: Polynomial):
    """Split a fiber conic as a*y2^2 + b(y0,y1)*y2 + c(y0,y1)."""
    a = conic.coefficient((0, 0, 2))
    b = Polynomial(2, 1, {(1, 0): conic.coefficient((1, 0, 1)),
                          (0, 1): conic.coefficient((0, 1, 1))})
    c = Polynomial(2, 2, {(2, 0): conic.coefficient((2, 0, 0)),
                          (1, 1): conic.coefficient((1, 1, 0)),
                          (0, 2): conic.coefficient((0, 2, 0))})
    return a, b, c


def _conic_pair_resultant(q1: Polynomial, q2: Polynomial) -> Optional[Polynomial]:
    """Resultant of two fiber conics with respect to y2, a binary quartic.

    Returns None when both conics are independent of y2 (the projection
    from (0:0:1) degenerates; callers skip such fibers).
    """
    a1, b1, c1 = _conic_components(q1)
    a2, b2, c2 = _conic_components(q2)
    if a1 == 0 and a2 == 0:
        return None
    s1 = c2 * a1 - c1 * a2                      # quadratic
    s2 = b2 * a1 - b1 * a2                      # linear
    s3 = b1 * c2 - b2 * c1                      # cubic
    return s1 * s1 - s2 * s3


def _fraction_sqrt(value: Fraction) -> Optional[Fraction]:
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


def _tetragonal_fiber_points(q1: Polynomial, q2: Polynomial) -> list[tuple]:
    """Exact rational intersection points of two fiber conics."""
    res = _conic_pair_resultant(q1, q2)
    if res is None or res.is_zero():
        return []
    coeffs = [res.coefficient((4 - j, j)) for j in range(5)]
    lines = []
    affine = list(coeffs)
    dropped = 0
    while affine and affine[-1] == 0:
        affine.pop()
        dropped += 1
    if dropped:
        lines.append((Fraction(0), Fraction(1)))
    if len(affine) > 1:
        for root in rational_roots(affine):
            lines.append((Fraction(1), root))
    points = []
    for u, v in lines:
        den = (u.denominator * v.denominator) // gcd(u.denominator, v.denominator)
        ui, vi = int(u * den), int(v * den)
        common = gcd(ui, vi)
        if common > 1:
            ui, vi = ui // common, vi // common
        candidates = set()
        for conic in (q1, q2):
            a, b, c = _conic_components(conic)
            alpha = a
            beta = b.evaluate((ui, vi))
            gamma = c.evaluate((ui, vi))
            if alpha != 0:
                root = _fraction_sqrt(beta * beta - 4 * alpha * gamma)
                if root is None:
                    continue
                candidates.add((-beta + root) / (2 * alpha))
                candidates.add((-beta - root) / (2 * alpha))
            elif beta != 0:
                candidates.add(-gamma / beta)
        for y2 in candidates:
            fiber = (Fraction(ui), Fraction(vi), y2)
            if q1.evaluate(fiber) == 0 and q2.evaluate(fiber) == 0:
                points.append(fiber)
    return points


def tetragonal_curve(g: int, b1: int, b2: int, seed: int,
                     scroll_type: Optional[tuple[int, ...]] = None,
                     allow_unbalanced: bool = False,
                     max_attempts: int = 10) -> CurveSpec:
    """Random tetragonal canonical curve as a complete intersection.

    The split (b1, b2) of g - 5 fixes the two surface classes 2H - b_i F.
    A few fibers are forced to contain a rational intersection point and
    recorded as sampling hints; candidates are rejected when a forced or
    test fiber fails to cut four distinct points.
    """
    if g < 6:
        raise ValueError("tetragonal construction needs genus >= 6")
    if b1 + b2 != g - 5:
        raise ValueError(f"split ({b1}, {b2}) does not sum to g - 5 = {g - 5}")
    if b1 < 0 or b2 < 0:
        raise ValueError("negative split entries are not supported")
    if scroll_type is None:
        scroll_type = balanced_type(g - 3, 3)
    scroll = Scroll(tuple(scroll_type))
    if scroll.degree != g - 3 or scroll.k != 3:
        raise ValueError(f"scroll type {scroll_type} is not a threefold of degree g - 3")
    balanced = scroll.min_type == g // 3 - 1
    if not balanced and not allow_unbalanced:
        raise ValueError(f"scroll type {scroll_type} is not balanced for genus {g}")
    cls1, cls2 = scroll.cls(2, -b1), scroll.cls(2, -b2)
    if chow_product([cls1, cls2, scroll.H]) != 2 * g - 2:
        raise CurveGenerationError("intersection-degree sanity check failed")
    counts = [section_count(scroll, c) for c in (cls1, cls2)]
    if min(counts) == 0:
        raise CurveGenerationError(f"class with no sections among {cls1}, {cls2}")
    forced_fibers = max(0, min(min(counts) - 6, 6))
    for attempt in range(max_attempts):
        rng = make_rng(derive_seed(seed, attempt + 101))
        hints = _distinct_small_rationals(rng, forced_fibers)
        through = []
        for t in hints:
            base = (t.denominator, t.numerator)
            pair = (0, 0)
            while not any(pair):
                # (0:0:1) is the center of the resultant projection and
                # would be invisible to the fiber solver
                pair = (rng.randint(-5, 5), rng.randint(-5, 5))
            fiber = (Fraction(pair[0]), Fraction(pair[1]), Fraction(1))
            through.append((base, fiber))
        sec1 = random_section(scroll, cls1, rng, through=through)
        sec2 = random_section(scroll, cls2, rng, through=through)
        good = True
        test_values = hints + _distinct_small_rationals(rng, 5, avoid=hints)
        for t in test_values:
            base = (t.denominator, t.numerator)
            res = _conic_pair_resultant(sec1.fiber_form(base), sec2.fiber_form(base))
            if res is None or res.is_zero():
                good = False
                break
            affine = [res.coefficient((4 - j, j)) for j in range(5)]
            x = sympy.Symbol("x")
            poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator)
                               for c in reversed(affine)], x)
            if poly.degree() < 3 or not poly.is_sqf:
                good = False
                break
        if good:
            return CurveSpec(g, 4, scroll, (cls1, cls2), (sec1, sec2), seed,
                             tuple(hints))
    raise CurveGenerationError(
        f"no acceptable tetragonal sections after {max_attempts} attempts")


def _fiber_rational_points(curve: CurveSpec, base) -> list[tuple]:
    if curve.gonality == 3:
        cubic = curve.equations[0].fiber_form(base)
        coeffs = [cubic.coefficient((3 - j, j)) for j in range(4)]
        if all(c == 0 for c in coeffs):
            return []
        fibers = []
        affine = list(coeffs)
        dropped = 0
        while affine and affine[-1] == 0:
            affine.pop()
            dropped += 1
        if dropped:
            fibers.append((Fraction(0), Fraction(1)))
        if len(affine) > 1:
            for root in rational_roots(affine):
                fibers.append((Fraction(1), root))
        return fibers
    q1 = curve.equations[0].fiber_form(base)
    q2 = curve.equations[1].fiber_form(base)
    return _tetragonal_fiber_points(q1, q2)


def sample_points(curve: CurveSpec, count: int, seed: int,
                  max_attempts: Optional[int] = None) -> list[tuple[int, ...]]:
    """Exact rational points of the curve, sampled fiber by fiber.

    The curve's hinted base values (fibers forced to split rationally at
    generation time) are tried first, then a seeded stream of fresh small
    rationals; fibers without rational solutions are skipped.  Points of
    genus >= 2 curves over Q are finite, so large requests are expected
    to exhaust the budget and raise SamplingError, which reports how many
    points were found.
    """
    if count == 0:
        return []
    if max_attempts is None:
        max_attempts = max(200, 20 * count)
    rng = make_rng(derive_seed(seed, 7))
    stream = small_rationals(rng)
    points: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    attempts = 0
    queue = list(curve.rational_fiber_hints)
    tried: set[Fraction] = set()
    while len(points) < count and attempts < max_attempts:
        if queue:
            t = queue.pop(0)
        else:
            t = next(stream)
        if t in tried:
            continue
        tried.add(t)
        attempts += 1
        base = (t.denominator, t.numerator)
        for fiber in sorted(_fiber_rational_points(curve, base)):
            for eq in curve.equations:
                if eq.evaluate(base, fiber) != 0:
                    raise CurveGenerationError(
                        "sampled fiber point fails the curve equations")
            image = embed_point(curve.scroll, base, primitive_point(
                [Fraction(c) for c in fiber])).image
            point = primitive_point([Fraction(c) for c in image])
            if point in seen:
                continue
            seen.add(point)
            points.append(point)
            if len(points) == count:
                break
    if len(points) < count:
        raise SamplingError(len(points), count, attempts)
    return points


def _evaluation_matrix(points: Sequence[Sequence[int]],
                       basis: Sequence[tuple[int, ...]]) -> ExactMatrix:
    rows = []
    for p in points:
        row = []
        for exp in basis:
            value = 1
            for c, e in zip(p, exp):
                for _ in range(e):
                    value *= c
            row.append(value)
        rows.append(row)
    return ExactMatrix(rows)


def _ambient_restriction(scroll: Scroll, exp: tuple[int, ...]):
    """Image of an ambient monomial on the scroll: fiber exponent and
    base exponent of its pullback through the embedding."""
    layout = coordinate_layout(scroll)
    fiber = [0] * scroll.k
    s_deg = 0
    t_deg = 0
    for coord, e in enumerate(exp):
        if not e:
            continue
        i, j = layout[coord]
        fiber[i] += e
        s_deg += (scroll.type[i] - j) * e
        t_deg += j * e
    return tuple(fiber), (s_deg, t_deg)


def _piece_by_division(curve: CurveSpec, k: int) -> list[list[Fraction]]:
    """Degree-k graded piece of the curve ideal, by exact division.

    A degree-k form vanishes on the curve exactly when its restriction to
    the scroll equals sum_i q_i u_i with u_i a section of kH minus the
    i-th equation class (an empty product when the fiber degree would be
    negative, which forces the restriction itself to vanish).  Unknowns
    are the form coefficients together with all multiplier coefficients;
    the piece is the projection of the kernel onto the form coordinates.
    """
    scroll = curve.scroll
    n = scroll.N + 1
    ambient = monomial_basis(n, k)
    row_index: dict[tuple, int] = {}

    def row_of(fiber_exp, base_exp):
        key = (fiber_exp, base_exp)
        if key not in row_index:
            row_index[key] = len(row_index)
        return row_index[key]

    columns: list[dict[int, Fraction]] = []
    for exp in ambient:
        fiber_exp, base_exp = _ambient_restriction(scroll, exp)
        columns.append({row_of(fiber_exp, base_exp): Fraction(1)})
    multiplier_spans = []
    for section in curve.equations:
        cls = section.cls
        mult_h = k - cls.h
        if mult_h < 0:
            multiplier_spans.append(0)
            continue
        mult_cls = scroll.cls(mult_h, -cls.f)
        slots = _section_slots(scroll, mult_cls)
        multiplier_spans.append(len(slots))
        for mexp, (p, q) in slots:
            column: dict[int, Fraction] = {}
            for eexp, base_form in section.coeffs.items():
                fiber_exp = tuple(a + b for a, b in zip(mexp, eexp))
                for (bp, bq), c in base_form.terms.items():
                    idx = row_of(fiber_exp, (bp + p, bq + q))
                    column[idx] = column.get(idx, Fraction(0)) - c
            columns.append(column)
    total_cols = len(columns)
    matrix = [[Fraction(0)] * total_cols for _ in range(len(row_index))]
    for j, column in enumerate(columns):
        for i, value in column.items():
            matrix[i][j] = value
    kernel = ExactMatrix(matrix).kernel()
    if kernel.nrows == 0:
        return []
    projected = [kernel.row(i)[:len(ambient)] for i in range(kernel.nrows)]
    reduced, pivots = ExactMatrix(projected).rref()
    return [reduced.row(i) for i in range(len(pivots))]


def ideal_pieces(curve: CurveSpec, points: Sequence[Sequence[int]] = (),
                 allow_deviation: bool = False) -> IdealReconstruction:
    """Degree-2 and degree-3 graded pieces of the curve ideal.

    The pieces come from the exact division criterion on the scroll; the
    supplied sampled points are an independent certificate and every
    basis element must vanish on every one of them exactly.  Dimensions
    are compared against the canonical-curve counts (g-2)(g-3)/2 and
    C(g+2, 3) - (5g-5); a mismatch raises unless deviations are allowed.
    """
    g = curve.genus
    n = g
    quad_basis = monomial_basis(n, 2)
    cubic_basis = monomial_basis(n, 3)
    quad_vectors = _piece_by_division(curve, 2)
    cubic_vectors = _piece_by_division(curve, 3)
    for basis, vectors in ((quad_basis, quad_vectors), (cubic_basis, cubic_vectors)):
        if points and vectors:
            ev = _evaluation_matrix(points, basis)
            stacked = ExactMatrix(vectors)
            if not (ev @ stacked.transpose()).is_zero():
                raise PointCertificateError(
                    "an ideal element does not vanish on a sampled point")
    dims = (len(quad_vectors), len(cubic_vectors))
    expected = (expected_quadric_dim(g), expected_cubic_dim(g))
    dims_ok = dims == expected
    if not dims_ok and not allow_deviation:
        raise IdealDimensionError(dims, expected)
    return IdealReconstruction(
        genus=g,
        degree2=GradedIdealPiece.from_vectors(2, n, quad_vectors),
        degree3=GradedIdealPiece.from_vectors(3, n, cubic_vectors),
        point_count=len(points),
        rank_saturated=bool(points) and dims_ok,
        dims_expected=dims_ok,
    )

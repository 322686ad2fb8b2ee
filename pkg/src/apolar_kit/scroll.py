"""Rational normal scrolls and their divisor arithmetic.

A scroll of type (a_1, ..., a_k) is the image in P^N, N = sum a_i + k - 1,
of the projectivized sum of line bundles of those degrees over the line.
Divisor classes are integer combinations aH + bF of the hyperplane class
and the ruling; products of k classes reduce through

    H^k = N - k + 1,    H^(k-1) F = 1,    F^2 = 0,

and the canonical class is -kH + (N - k - 1)F.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .core import Polynomial

__all__ = [
    "Scroll",
    "DivisorClass",
    "ScrollPoint",
    "scroll_new",
    "chow_product",
    "canonical_class",
    "divisor_degree",
    "section_templates",
    "section_count",
    "embed_point",
    "project_type",
    "scroll_quadrics",
    "coordinate_layout",
]


@dataclass(frozen=True)
class Scroll:
    type: tuple[int, ...]

    def __post_init__(self):
        if not self.type:
            raise ValueError("scroll type must be nonempty")
        if any(a < 0 for a in self.type):
            raise ValueError("scroll type entries must be >= 0")
        if all(a == 0 for a in self.type):
            raise ValueError("scroll type must not be identically zero")

    @property
    def k(self) -> int:
        return len(self.type)

    @property
    def N(self) -> int:
        return sum(self.type) + self.k - 1

    @property
    def degree(self) -> int:
        return sum(self.type)

    @property
    def smooth(self) -> bool:
        return all(a > 0 for a in self.type)

    @property
    def min_type(self) -> int:
        return min(self.type)

    def cls(self, h: int, f: int) -> "DivisorClass":
        return DivisorClass(h, f, self)

    @property
    def H(self) -> "DivisorClass":
        return self.cls(1, 0)

    @property
    def F(self) -> "DivisorClass":
        return self.cls(0, 1)


def scroll_new(*type_entries: int) -> Scroll:
    return Scroll(tuple(type_entries))


@dataclass(frozen=True)
class DivisorClass:
    h: int
    f: int
    scroll: Scroll

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(self.h + other.h, self.f + other.f, self.scroll)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(self.h - other.h, self.f - other.f, self.scroll)

    def __rmul__(self, scalar: int) -> "DivisorClass":
        return DivisorClass(scalar * self.h, scalar * self.f, self.scroll)

    def _check(self, other: "DivisorClass") -> None:
        if other.scroll != self.scroll:
            raise ValueError("divisor classes live on different scrolls")

    def __str__(self) -> str:
        return f"{self.h}H{self.f:+d}F"


def chow_product(classes: Sequence[DivisorClass]) -> int:
    """Product of exactly k divisor classes, reduced to an integer.

    Expanding prod_i (a_i H + b_i F), every term with two or more F factors
    dies; what survives is (prod a_i) H^k plus the single-F terms.
    """
    classes = list(classes)
    if not classes:
        raise ValueError("empty product")
    scroll = classes[0].scroll
    for c in classes:
        if c.scroll != scroll:
            raise ValueError("divisor classes live on different scrolls")
    if len(classes) != scroll.k:
        raise ValueError(
            f"need exactly {scroll.k} factors on a {scroll.k}-fold, got {len(classes)}")
    top = scroll.N - scroll.k + 1
    prod_a = 1
    for c in classes:
        prod_a *= c.h
    mixed = 0
    for i, c in enumerate(classes):
        term = c.f
        for j, other in enumerate(classes):
            if j != i:
                term *= other.h
        mixed += term
    return prod_a * top + mixed


def canonical_class(scroll: Scroll) -> DivisorClass:
    return scroll.cls(-scroll.k, scroll.N - scroll.k - 1)


def divisor_degree(scroll: Scroll, cls: DivisorClass) -> int:
    """Degree of a divisor class: its product with k - 1 hyperplanes."""
    return chow_product([cls] + [scroll.H] * (scroll.k - 1))


def section_templates(scroll: Scroll, cls: DivisorClass) -> list[tuple[tuple[int, ...], int]]:
    """Shape of the space of sections of O(cH + mF).

    For each fiber monomial y^e of degree c the base coefficient is a
    binary form of degree e . a + m; entries with negative base degree
    carry no sections and are omitted.  The total section count is the
    sum of (base degree + 1) over the returned pairs.
    """
    if cls.scroll != scroll:
        raise ValueError("class lives on a different scroll")
    if cls.h < 0:
        raise ValueError("need a nonnegative H-coefficient")
    from .core import monomial_basis
    out = []
    for exp in monomial_basis(scroll.k, cls.h):
        base_degree = sum(e * a for e, a in zip(exp, scroll.type)) + cls.f
        if base_degree >= 0:
            out.append((exp, base_degree))
    return out


def section_count(scroll: Scroll, cls: DivisorClass) -> int:
    return sum(d + 1 for _, d in section_templates(scroll, cls))


def coordinate_layout(scroll: Scroll) -> list[tuple[int, int]]:
    """Order of the ambient coordinates: blocks by fiber index, then
    descending power of the first base variable."""
    return [(i, j) for i, a in enumerate(scroll.type) for j in range(a + 1)]


@dataclass(frozen=True)
class ScrollPoint:
    scroll: Scroll
    base: tuple
    fiber: tuple
    image: tuple


def _primitive(values: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for v in values:
        g = gcd(g, v)
    if g > 1:
        return tuple(v // g for v in values)
    return tuple(values)


def embed_point(scroll: Scroll, base: Sequence, fiber: Sequence) -> ScrollPoint:
    """Image of a (base, fiber) pair under the tautological embedding.

    Coordinates are the monomials s^(a_i - j) t^j y_i in the fixed layout;
    works for exact integer data as well as mp scalars.
    """
    if len(base) != 2:
        raise ValueError("base point must have two coordinates")
    if len(fiber) != scroll.k:
        raise ValueError("fiber point arity must match the scroll dimension")
    if not any(base):
        raise ValueError("zero base vector")
    if not any(fiber):
        raise ValueError("zero fiber vector")
    s, t = base
    image = []
    for i, a in enumerate(scroll.type):
        y = fiber[i]
        for j in range(a + 1):
            value = y
            for _ in range(a - j):
                value = value * s
            for _ in range(j):
                value = value * t
            image.append(value)
    if all(isinstance(v, int) for v in image):
        image = _primitive(image)
    return ScrollPoint(scroll, tuple(base), tuple(fiber), tuple(image))


def project_type(scroll: Scroll, index: int) -> Scroll:
    """Type after projecting from a point on the index-th directrix curve.

    The entry drops by one; an entry reaching -1 is removed.
    """
    if not 0 <= index < scroll.k:
        raise ValueError("invalid directrix index")
    entries = list(scroll.type)
    entries[index] -= 1
    if entries[index] < 0:
        entries.pop(index)
    return Scroll(tuple(entries))


def scroll_quadrics(scroll: Scroll) -> list[Polynomial]:
    """The 2x2 minors cutting out the scroll in its ambient space.

    Columns of the underlying 2-row matrix are the consecutive coordinate
    pairs inside each block; all minors together span the degree-2 part
    of the scroll's ideal.
    """
    layout = coordinate_layout(scroll)
    position = {pair: idx for idx, pair in enumerate(layout)}
    columns = []
    for i, a in enumerate(scroll.type):
        for j in range(a):
            columns.append((position[(i, j)], position[(i, j + 1)]))
    nvars = scroll.N + 1
    minors = []
    for c1 in range(len(columns)):
        for c2 in range(c1 + 1, len(columns)):
            top1, bot1 = columns[c1]
            top2, bot2 = columns[c2]
            exp_a = [0] * nvars
            exp_a[top1] += 1
            exp_a[bot2] += 1
            exp_b = [0] * nvars
            exp_b[bot1] += 1
            exp_b[top2] += 1
            minors.append(Polynomial(nvars, 2, {tuple(exp_a): 1, tuple(exp_b): -1}))
    return minors

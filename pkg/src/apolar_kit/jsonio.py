"""JSON interchange for every value type the command line exposes.

Rational numbers travel as exact "p/q" strings (or "p" for integers);
floating values as decimal strings tagged with the precision they were
computed at.  Serialization is deterministic: terms are emitted in
graded-lex order and dictionaries are written with sorted keys by the
callers that dump them.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .apolarity import ApolarAlgebraProfile, GradedIdealPiece
from .core import Polynomial
from .curvegen import BihomSection, CurveSpec
from .numerics import format_scalar
from .scroll import DivisorClass, Scroll
from .waring import Decomposition

__all__ = [
    "polynomial_to_json", "polynomial_from_json",
    "piece_to_json", "piece_from_json",
    "profile_to_json",
    "scroll_to_json", "scroll_from_json",
    "divisor_to_json", "divisor_from_json",
    "curve_to_json", "curve_from_json",
    "decomposition_to_json",
]


def _coef_to_str(c: Fraction) -> str:
    return str(c)


def _coef_from_str(raw) -> Fraction:
    if isinstance(raw, str):
        return Fraction(raw)
    if isinstance(raw, int):
        return Fraction(raw)
    raise ValueError(f"coefficients must be strings or integers, got {raw!r}")


def polynomial_to_json(poly: Polynomial) -> dict:
    return {
        "nvars": poly.nvars,
        "degree": poly.degree,
        "terms": [{"exp": list(exp), "coef": _coef_to_str(c)}
                  for exp, c in poly.sorted_terms()],
    }


def polynomial_from_json(data: dict) -> Polynomial:
    terms = {tuple(t["exp"]): _coef_from_str(t["coef"]) for t in data["terms"]}
    return Polynomial(int(data["nvars"]), int(data["degree"]), terms)


def piece_to_json(piece: GradedIdealPiece) -> dict:
    return {
        "degree": piece.degree,
        "nvars": piece.nvars,
        "dim": piece.dim,
        "basis": [polynomial_to_json(p) for p in piece.basis],
    }


def piece_from_json(data: dict) -> GradedIdealPiece:
    basis = tuple(polynomial_from_json(p) for p in data["basis"])
    return GradedIdealPiece(int(data["degree"]), int(data["nvars"]), basis)


def profile_to_json(profile: ApolarAlgebraProfile) -> dict:
    return {"hilbert": list(profile.hilbert), "socle_dim": profile.socle_dim}


def scroll_to_json(scroll: Scroll) -> dict:
    return {"type": list(scroll.type)}


def scroll_from_json(data: dict) -> Scroll:
    return Scroll(tuple(int(a) for a in data["type"]))


def divisor_to_json(cls: DivisorClass) -> dict:
    return {"h": cls.h, "f": cls.f}


def divisor_from_json(data: dict, scroll: Scroll) -> DivisorClass:
    return DivisorClass(int(data["h"]), int(data["f"]), scroll)


def _section_to_json(section: BihomSection) -> dict:
    return {
        "class": divisor_to_json(section.cls),
        "terms": [{"fiber_exp": list(exp), "base": polynomial_to_json(form)}
                  for exp, form in sorted(section.coeffs.items(), reverse=True)],
    }


def _section_from_json(data: dict, scroll: Scroll) -> BihomSection:
    cls = divisor_from_json(data["class"], scroll)
    coeffs = {tuple(t["fiber_exp"]): polynomial_from_json(t["base"])
              for t in data["terms"]}
    return BihomSection(scroll, cls, coeffs)


def curve_to_json(curve: CurveSpec) -> dict:
    return {
        "genus": curve.genus,
        "gonality": curve.gonality,
        "scroll": scroll_to_json(curve.scroll),
        "classes": [divisor_to_json(c) for c in curve.classes],
        "equations": [_section_to_json(s) for s in curve.equations],
        "seed": curve.seed,
        "rational_fiber_hints": [str(t) for t in curve.rational_fiber_hints],
    }


def curve_from_json(data: dict) -> CurveSpec:
    scroll = scroll_from_json(data["scroll"])
    classes = tuple(divisor_from_json(c, scroll) for c in data["classes"])
    equations = tuple(_section_from_json(s, scroll) for s in data["equations"])
    hints = tuple(Fraction(t) for t in data.get("rational_fiber_hints", []))
    return CurveSpec(int(data["genus"]), int(data["gonality"]), scroll,
                     classes, equations, int(data["seed"]), hints)


def decomposition_to_json(dec: Decomposition,
                          precision_bits: Optional[int] = None) -> dict:
    out = {
        "rank": dec.rank,
        "nvars": dec.nvars,
        "exact": dec.exact,
        "forms": [[format_scalar(c) for c in vec] for vec in dec.forms],
        "weights": [format_scalar(w) for w in dec.weights],
        "residual": format_scalar(dec.residual),
    }
    if not dec.exact and precision_bits is not None:
        out["precision_bits"] = precision_bits
    return out

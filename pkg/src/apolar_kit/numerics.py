"""Bridge between exact rationals and high-precision floating point.

mpmath enters the package only through this module, `univariate` and the
eigenvalue / least-squares steps in `waring`; everything upstream of
those steps stays in exact arithmetic and everything downstream is
certified by a residual.
"""

from __future__ import annotations

from fractions import Fraction

from mpmath import mp

__all__ = ["to_mp", "workprec", "format_scalar", "least_squares",
           "DEFAULT_PRECISION_BITS", "DEFAULT_TOLERANCE"]

DEFAULT_PRECISION_BITS = 128
DEFAULT_TOLERANCE = Fraction(1, 10**10)


def to_mp(value):
    """Convert Fraction / int / mp scalar to an mp scalar at current precision."""
    if isinstance(value, Fraction):
        return mp.mpf(value.numerator) / mp.mpf(value.denominator)
    if isinstance(value, int):
        return mp.mpf(value)
    return mp.mpmathify(value)


def workprec(bits: int):
    """Context manager pinning the mpmath working precision in bits."""
    return mp.workprec(bits)


def least_squares(matrix, rhs):
    """Least-squares solution of an overdetermined mp system.

    Uses the normal equations with the conjugate transpose (mpmath's
    Householder path divides by zero on exact-zero subcolumns, which our
    highly structured matrices hit routinely).  Raises ValueError when
    the columns are numerically dependent.
    """
    ah = matrix.H
    gram = ah * matrix
    try:
        return mp.lu_solve(gram, ah * rhs)
    except ZeroDivisionError as exc:
        raise ValueError("degenerate least-squares system") from exc


def format_scalar(value, digits: int = 30) -> str:
    """Deterministic string form for JSON reports."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, int):
        return str(value)
    if hasattr(value, "imag") and value.imag:
        re = mp.nstr(value.real, digits)
        im = mp.nstr(value.imag, digits)
        sign = "+" if not im.startswith("-") else ""
        return f"{re}{sign}{im}i"
    if hasattr(value, "imag"):
        return mp.nstr(value.real, digits)
    return mp.nstr(mp.mpmathify(value), digits)

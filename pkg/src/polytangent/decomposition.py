"""Increments, secant slopes, differentials, and exact linear decomposition.

For a polynomial f and a base point x0, the increment decomposes
exactly as

    f(x0 + dx) = f(x0) + f'(x0)*dx + R(dx)

where the remainder R is a polynomial in dx whose lowest nonzero term
has degree >= 2.  That valuation bound is the exact-algebra form of
"R(dx) vanishes faster than dx": dividing by dx gives

    (f(x0 + dx) - f(x0)) / dx = f'(x0) + R(dx)/dx

with the gap R(dx)/dx an exact rational that shrinks with dx.  The
quotient table below tabulates that identity row by row, so the
classical limiting behaviour of the difference quotient is exhibited as
bookkeeping on an already-constructed derivative, not as a definition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomial import Polynomial
from .rational import exact
from .tangency import INFINITE, derivative, taylor_shift


@dataclass(frozen=True)
class Decomposition:
    """f(x0 + dx) = value + slope*dx + remainder(dx), exactly."""

    x0: Fraction
    value: Fraction
    slope: Fraction
    remainder: Polynomial  # polynomial in the increment dx, valuation >= 2


@dataclass(frozen=True)
class QuotientRow:
    """One row of the difference-quotient table: all entries exact."""

    h: Fraction
    dy: Fraction
    quotient: Fraction  # dy / h
    gap: Fraction  # quotient - f'(x0), equal to remainder(h)/h


def increment(f: Polynomial, x0, dx) -> Fraction:
    """The exact change of the function: f(x0 + dx) - f(x0)."""
    x0 = exact(x0)
    dx = exact(dx)
    return f(x0 + dx) - f(x0)


def secant_slope(f: Polynomial, x0, dx) -> Fraction:
    """The exact difference quotient (f(x0 + dx) - f(x0)) / dx."""
    dx = exact(dx)
    if not dx:
        raise ZeroDivisionError("secant slope needs a nonzero increment")
    return increment(f, x0, dx) / dx


def differential(f: Polynomial, x0, dx) -> Fraction:
    """The linear part of the increment: f'(x0) * dx."""
    return derivative(f)(exact(x0)) * exact(dx)


def decompose(f: Polynomial, x0) -> Decomposition:
    """Split f(x0 + dx) into value, linear part, and higher-order remainder.

    The local expansion about x0 provides everything: its constant term
    is the value, its linear coefficient the slope, and the rest of the
    expansion (kept aligned at degree 2) is the remainder.
    """
    expansion = taylor_shift(f, x0)
    remainder = Polynomial((Fraction(0), Fraction(0)) + expansion.coeffs[2:])
    return Decomposition(expansion.center, expansion.value, expansion.slope, remainder)


def remainder_valuation(d: Decomposition):
    """Index of the lowest nonzero remainder coefficient; INFINITE when zero.

    By construction this is at least 2 whenever it is finite.
    """
    for i, c in enumerate(d.remainder.coeffs):
        if c:
            return i
    return INFINITE


def quotient_table(f: Polynomial, x0, steps: int) -> list[QuotientRow]:
    """Difference quotients for h = 1/10, 1/100, ..., 1/10**steps, exactly.

    Each row satisfies gap * h = remainder(h); for a line the gaps are
    identically zero.
    """
    if steps < 1:
        raise ValueError("steps must be at least 1")
    x0 = exact(x0)
    slope = derivative(f)(x0)
    rows = []
    for k in range(1, steps + 1):
        h = Fraction(1, 10**k)
        dy = increment(f, x0, h)
        quotient = dy / h
        rows.append(QuotientRow(h, dy, quotient, quotient - slope))
    return rows

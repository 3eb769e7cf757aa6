"""Tangent lines by the double-root criterion, and derivatives built from them.

A line y = k*x + b is tangent to a polynomial f at x = p exactly when
(x - p)**2 divides f(x) - (k*x + b), i.e. when

    f(x) - (k*x + b) = (x - p)**2 * Q(x)

for some cofactor polynomial Q.  Rewriting f in powers of t = x - p
makes the unique such line explicit: the slope is the linear
coefficient of the local expansion, the intercept follows from passing
through (p, f(p)), and Q is the re-expanded tail.  Every constructed
tangent carries its cofactor, and the factorization above is re-checked
by exact multiplication before the tangent is returned.

Letting p vary produces the derivative as a function.  It is generated
here in one pass by evaluating f at the dual element x + eps over the
polynomial ring: the eps component is the derivative polynomial.  No
limits are taken anywhere; the difference-quotient behaviour is a
consequence, checked in :mod:`polytangent.decomposition`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .dual import Dual, eval_poly
from .polynomial import (
    ONE,
    LinearFunction,
    Polynomial,
    RationalFunction,
    X,
)
from .rational import exact

# Marker for "the difference is identically zero": a line coincident
# with the curve, or a zero remainder.  math.inf keeps comparisons like
# multiplicity >= 2 natural.
INFINITE = math.inf


class CertificateError(RuntimeError):
    """A constructed tangent failed its own factorization re-check.

    This indicates an internal arithmetic bug and should never occur.
    """


@dataclass(frozen=True)
class LocalExpansion:
    """f rewritten in powers of t = x - center: f(center + t) = sum coeffs[i] * t**i."""

    center: Fraction
    coeffs: tuple[Fraction, ...]

    @property
    def value(self) -> Fraction:
        """f(center), the constant coefficient."""
        return self.coeffs[0] if self.coeffs else Fraction(0)

    @property
    def slope(self) -> Fraction:
        """The linear coefficient, which is the tangent slope at the center."""
        return self.coeffs[1] if len(self.coeffs) > 1 else Fraction(0)


@dataclass(frozen=True)
class TangentLine:
    """The tangent to a polynomial at ``point``, with its divisibility certificate.

    For the polynomial f it was built from:
    f(x) - (slope*x + intercept) = (x - point)**2 * cofactor(x), exactly.
    """

    point: Fraction
    slope: Fraction
    intercept: Fraction
    cofactor: Polynomial

    @property
    def line(self) -> LinearFunction:
        return LinearFunction(self.slope, self.intercept)

    def equation(self) -> str:
        return self.line.equation()


def taylor_shift(f: Polynomial, center) -> LocalExpansion:
    """Exact coefficients of f(center + t), by repeated synthetic division.

    In-place Horner-style updates, O(n**2) exact operations; the
    leading coefficient is unchanged.
    """
    p = exact(center)
    cs = list(f.coeffs)
    n = len(cs)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            cs[j] += p * cs[j + 1]
    return LocalExpansion(p, tuple(cs))


def intersection_multiplicity(f: Polynomial, line: LinearFunction, point):
    """Largest m with (x - point)**m dividing f - line; INFINITE if identical.

    m = 0 means the line misses (point, f(point)); m = 1 is a plain
    crossing; m >= 2 is tangency.
    """
    difference = f - line.as_polynomial()
    if not difference:
        return INFINITE
    shifted = taylor_shift(difference, point).coeffs
    m = 0
    while not shifted[m]:
        m += 1
    return m


def is_tangent(f: Polynomial, line: LinearFunction, point) -> bool:
    """The double-root test: tangent iff the intersection multiplicity is >= 2.

    A coincident line (INFINITE multiplicity) counts as tangent, so a
    line is its own tangent at every point.
    """
    return intersection_multiplicity(f, line, point) >= 2


def tangent_at(f: Polynomial, point) -> TangentLine:
    """Construct the unique tangent to f at the given abscissa.

    From the local expansion f(p + t) = c0 + c1*t + t**2 * T(t):
    slope k = c1, intercept b = c0 - c1*p, and the cofactor Q is T
    re-expanded in x.  The factorization f - (k*x + b) =
    (x - p)**2 * Q is re-verified by multiplication before returning.

    Degenerate inputs are fine: constants get their own horizontal
    line, the zero polynomial gets y = 0, both with a zero cofactor.
    """
    p = exact(point)
    expansion = taylor_shift(f, p)
    k = expansion.slope
    b = expansion.value - k * p
    tail = Polynomial(expansion.coeffs[2:])  # still in powers of t = x - p
    cofactor = tail(X - p)
    if (X - p) ** 2 * cofactor + Polynomial((b, k)) != f:
        raise CertificateError(
            f"tangent certificate failed for f = {f} at p = {p}"
        )
    return TangentLine(p, k, b, cofactor)


def derivative(f: Polynomial) -> Polynomial:
    """The derivative polynomial: p -> slope of the tangent at p.

    Computed symbolically by one Horner pass of f at the dual element
    x + eps over the polynomial ring; the eps component collects the
    linear terms of every local expansion at once.  Agrees pointwise
    with tangent_at(f, p).slope for every rational p.
    """
    return eval_poly(f, Dual(X, ONE)).eps


def ratfun_derivative(r: RationalFunction) -> RationalFunction:
    """Quotient rule on a canonical rational function: (f'g - fg')/g**2."""
    f, g = r.num, r.den
    return RationalFunction(derivative(f) * g - f * derivative(g), g * g)

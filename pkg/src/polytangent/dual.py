"""Dual numbers: pairs a + b*eps with the nilpotency rule eps**2 = 0.

The components live in any commutative ring that supports ``+`` and
``*`` (exact rationals, polynomials, binary floats), so one
implementation serves numeric slope extraction, symbolic derivative
generation, and the float extension to elementary functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .polynomial import Polynomial


class DomainError(ValueError):
    """An elementary function was evaluated outside its domain."""


class Dual:
    """a + b*eps over a pluggable scalar domain.

    Multiplication drops the eps**2 term:
    (a + b*eps)(c + d*eps) = ac + (ad + bc)*eps.
    Scalars mix in as s = s + 0*eps.
    """

    __slots__ = ("real", "eps")

    def __init__(self, real, eps):
        self.real = real
        self.eps = eps

    def __eq__(self, other) -> bool:
        if not isinstance(other, Dual):
            return NotImplemented
        return self.real == other.real and self.eps == other.eps

    def __hash__(self):
        return hash((self.real, self.eps))

    def __add__(self, other) -> "Dual":
        if isinstance(other, Dual):
            return Dual(self.real + other.real, self.eps + other.eps)
        return Dual(self.real + other, self.eps)

    __radd__ = __add__

    def __neg__(self) -> "Dual":
        return Dual(-self.real, -self.eps)

    def __sub__(self, other) -> "Dual":
        if isinstance(other, Dual):
            return Dual(self.real - other.real, self.eps - other.eps)
        return Dual(self.real - other, self.eps)

    def __rsub__(self, other) -> "Dual":
        return Dual(other - self.real, -self.eps)

    def __mul__(self, other) -> "Dual":
        if isinstance(other, Dual):
            return Dual(
                self.real * other.real,
                self.real * other.eps + self.eps * other.real,
            )
        return Dual(self.real * other, self.eps * other)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Dual({self.real!r}, {self.eps!r})"


def eval_poly(f: "Polynomial", x: Dual) -> Dual:
    """Horner evaluation of f with dual arithmetic.

    For x = a + b*eps the result is f(a) + f'(a)*b*eps: the eps part
    carries the slope without any division or limiting step.
    """
    acc = x * 0
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


ELEMENTARY_TAGS = ("exp", "log", "sin", "cos", "tan", "pow_const")

# Pole cutoff for tan: floats cannot hit cos(a) = 0 exactly, so reject
# anything within 1e-12 of it instead of overflowing silently.
TAN_POLE_CUTOFF = 1e-12


@dataclass(frozen=True)
class ElementaryFn:
    """One of the supported elementary functions, by tag.

    ``pow_const`` carries its constant exponent in ``parameter``; the
    other tags ignore it.
    """

    tag: str
    parameter: float | None = None

    def __post_init__(self):
        if self.tag not in ELEMENTARY_TAGS:
            raise ValueError(f"unknown elementary function tag {self.tag!r}")
        if self.tag == "pow_const" and self.parameter is None:
            raise ValueError("pow_const needs an exponent parameter")


def eval_elementary(fn: ElementaryFn, x: Dual) -> Dual:
    """Evaluate fn at a float dual: (fn(a), fn'(a)*b) for x = a + b*eps."""
    a, b = x.real, x.eps
    tag = fn.tag
    if tag == "exp":
        value = math.exp(a)
        return Dual(value, value * b)
    if tag == "log":
        if a <= 0:
            raise DomainError(f"log needs a positive argument, got {a}")
        return Dual(math.log(a), b / a)
    if tag == "sin":
        return Dual(math.sin(a), math.cos(a) * b)
    if tag == "cos":
        return Dual(math.cos(a), -math.sin(a) * b)
    if tag == "tan":
        c = math.cos(a)
        if abs(c) <= TAN_POLE_CUTOFF:
            raise DomainError(f"tan pole: cos({a}) vanishes to within {TAN_POLE_CUTOFF}")
        return Dual(math.tan(a), b / (c * c))
    # pow_const: x**c with constant exponent c
    c = float(fn.parameter)
    if c == 0:
        return Dual(1.0, 0.0)
    if a < 0 and not c.is_integer():
        raise DomainError(f"negative base {a} with non-integer exponent {c}")
    if a == 0 and c < 1:
        raise DomainError(f"slope of x**{c} is unbounded at 0")
    return Dual(math.pow(a, c), c * math.pow(a, c - 1) * b)

"""Dense univariate polynomials and rational functions over exact rationals.

A :class:`Polynomial` is an immutable sequence of ``Fraction``
coefficients, ``coeffs[i]`` multiplying ``x**i``, with no trailing zero
coefficient.  The zero polynomial is the empty sequence and its degree
is ``None`` rather than any number, so degree arithmetic can never
silently use a bogus -1.

Arithmetic is exact schoolbook arithmetic.  The degrees involved are
small, so clarity wins over asymptotics.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .rational import exact

Scalar = Union[int, Fraction]


class Polynomial:
    """Immutable dense polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar | str] = ()):
        cs = [exact(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # -- structure ------------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Highest power with a nonzero coefficient; None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, power: int) -> Fraction:
        """The coefficient of x**power (zero beyond the stored length)."""
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    # -- ring operations --------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponents must be non-negative integers")
        result = Polynomial((1,))
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other) -> tuple["Polynomial", "Polynomial"]:
        """Exact long division: f = q*g + r with r = 0 or degree(r) < degree(g)."""
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by the zero polynomial")
        den = other.coeffs
        rem = list(self.coeffs)
        if len(rem) < len(den):
            return Polynomial(), self
        lead = den[-1]
        quot = [Fraction(0)] * (len(rem) - len(den) + 1)
        for i in range(len(quot) - 1, -1, -1):
            c = rem[i + len(den) - 1] / lead
            if c:
                quot[i] = c
                for j, d in enumerate(den):
                    rem[i + j] -= c * d
        return Polynomial(quot), Polynomial(rem[: len(den) - 1])

    def __floordiv__(self, other) -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Polynomial":
        return divmod(self, other)[1]

    def monic(self) -> "Polynomial":
        """Scale so the leading coefficient is 1."""
        lead = self.leading_coefficient
        return self if lead == 1 else self * (Fraction(1) / lead)

    # -- evaluation ------------------------------------------------------

    def __call__(self, x):
        """Horner evaluation at any ring element.

        Works for exact rationals, for other polynomials (giving the
        composition f(g)), and for dual numbers.
        """
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- rendering -------------------------------------------------------

    def render(self, var: str = "x") -> str:
        """Canonical text: descending powers, explicit signs, `^` exponents."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if not c:
                continue
            size = abs(c)
            if power == 0:
                body = str(size)
            else:
                sym = var if power == 1 else f"{var}^{power}"
                body = sym if size == 1 else f"{size}*{sym}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"


def _coerce(value) -> Polynomial | None:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial((value,))
    return None


ZERO = Polynomial()
ONE = Polynomial((1,))
X = Polynomial((0, 1))


def polynomial_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic greatest common divisor by the Euclidean algorithm.

    gcd(f, 0) is monic(f); gcd(0, 0) is undefined and raises.
    """
    if not f and not g:
        raise ValueError("gcd(0, 0) is undefined")
    a, b = f, g
    while b:
        a, b = b, a % b
        if b:
            b = b.monic()  # rescaling each step keeps coefficient growth tame
    return a.monic()


@dataclass(frozen=True)
class LinearFunction:
    """A line y = k*x + b given by slope k and intercept b."""

    slope: Fraction
    intercept: Fraction

    def __post_init__(self):
        object.__setattr__(self, "slope", exact(self.slope))
        object.__setattr__(self, "intercept", exact(self.intercept))

    def as_polynomial(self) -> Polynomial:
        return Polynomial((self.intercept, self.slope))

    def __call__(self, x: Fraction) -> Fraction:
        return self.slope * x + self.intercept

    def equation(self) -> str:
        return f"y = {self.as_polynomial()}"


class RationalFunction:
    """A quotient num/den of polynomials, kept in canonical form.

    Canonical means gcd(num, den) = 1 and den monic; zero is 0/1.  With
    that normalization, equality is plain structural equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = _to_polynomial(num)
        den = _to_polynomial(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            self.num, self.den = ZERO, ONE
            return
        common = polynomial_gcd(num, den)
        num, den = num // common, den // common
        scale = Fraction(1) / den.leading_coefficient
        self.num = num * scale
        self.den = den * scale

    def __eq__(self, other) -> bool:
        other = _to_ratfun(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return bool(self.num)

    def __add__(self, other):
        other = _to_ratfun(other)
        if other is None:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = _to_ratfun(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _to_ratfun(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _to_ratfun(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _to_ratfun(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _to_ratfun(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("rational-function exponents must be non-negative integers")
        return RationalFunction(self.num**exponent, self.den**exponent)

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        num_s = str(self.num)
        den_s = str(self.den)
        if _multi_term(self.num):
            num_s = f"({num_s})"
        if _multi_term(self.den):
            den_s = f"({den_s})"
        return f"{num_s}/{den_s}"

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"


def _to_polynomial(value) -> Polynomial:
    p = _coerce(value)
    if p is None:
        raise TypeError(f"cannot interpret {value!r} as a polynomial")
    return p


def _to_ratfun(value) -> RationalFunction | None:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, (Polynomial, int, Fraction)):
        return RationalFunction(value)
    return None


def _multi_term(p: Polynomial) -> bool:
    return sum(1 for c in p.coeffs if c) > 1


def cross_multiplied_equal(a: RationalFunction, b: RationalFunction) -> bool:
    """Equality by cross multiplication: a.num*b.den == b.num*a.den.

    Agrees with structural equality of canonical forms; kept as the
    independent fallback check.
    """
    return a.num * b.den == b.num * a.den

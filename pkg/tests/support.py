"""Seeded random generators and independent oracles shared by the tests.

The oracles deliberately take different routes than the code under
test: the power rule is applied coefficient by coefficient, and local
expansions are recomputed by binomial expansion of (p + t)**i.
"""

from __future__ import annotations

import random
from fractions import Fraction

from polytangent.polynomial import Polynomial


def rand_rational(rng: random.Random, num_lo=-9, num_hi=9, den_hi=9) -> Fraction:
    return Fraction(rng.randint(num_lo, num_hi), rng.randint(1, den_hi))


def rand_polynomial(
    rng: random.Random, max_degree: int = 8, allow_zero: bool = True
) -> Polynomial:
    if allow_zero and rng.random() < 0.05:
        return Polynomial()
    degree = rng.randint(0, max_degree)
    coeffs = [rand_rational(rng) for _ in range(degree + 1)]
    if not coeffs[-1]:
        coeffs[-1] = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
    return Polynomial(coeffs)


def rand_nonzero_polynomial(rng: random.Random, max_degree: int = 8) -> Polynomial:
    while True:
        f = rand_polynomial(rng, max_degree, allow_zero=False)
        if f:
            return f


def power_rule_derivative(f: Polynomial) -> Polynomial:
    """Independent oracle: differentiate term by term with the power rule."""
    return Polynomial(i * c for i, c in enumerate(f.coeffs) if i > 0)


def binomial_shift(f: Polynomial, p: Fraction) -> tuple[Fraction, ...]:
    """Independent oracle for local expansions: sum of a_i * (p + t)**i."""
    base = Polynomial((p, 1))  # p + t
    total = Polynomial()
    for i, c in enumerate(f.coeffs):
        total = total + base**i * c
    return total.coeffs

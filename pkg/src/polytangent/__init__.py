"""Limit-free tangents and derivatives for polynomials over exact rationals.

The core idea: a line is tangent to a polynomial f at x = p exactly
when (x - p)**2 divides f(x) - (k*x + b).  Everything else follows from
that divisibility criterion by exact arithmetic: the unique tangent at
every rational point (with a verifiable cofactor certificate), the
derivative as a polynomial in its own right, the differentiation rules
as checked identities, and the classical difference-quotient behaviour
as an exact linear decomposition with a higher-order remainder.
"""

from .decomposition import (
    Decomposition,
    QuotientRow,
    decompose,
    differential,
    increment,
    quotient_table,
    remainder_valuation,
    secant_slope,
)
from .dual import (
    ELEMENTARY_TAGS,
    DomainError,
    Dual,
    ElementaryFn,
    eval_elementary,
    eval_poly,
)
from .parser import (
    LoweringError,
    ParseError,
    lower_poly,
    lower_ratfun,
    parse,
    render,
)
from .polynomial import (
    ONE,
    X,
    ZERO,
    LinearFunction,
    Polynomial,
    RationalFunction,
    polynomial_gcd,
)
from .rational import Rational, parse_rational, render_rational, to_decimal
from .rules import (
    RuleReport,
    verify_chain,
    verify_product,
    verify_quotient,
    verify_sum,
)
from .tangency import (
    INFINITE,
    CertificateError,
    LocalExpansion,
    TangentLine,
    derivative,
    intersection_multiplicity,
    is_tangent,
    ratfun_derivative,
    tangent_at,
    taylor_shift,
)

__version__ = "0.1.0"

__all__ = [
    "CertificateError",
    "Decomposition",
    "DomainError",
    "Dual",
    "ELEMENTARY_TAGS",
    "ElementaryFn",
    "INFINITE",
    "LinearFunction",
    "LocalExpansion",
    "LoweringError",
    "ONE",
    "ParseError",
    "Polynomial",
    "QuotientRow",
    "Rational",
    "RationalFunction",
    "RuleReport",
    "TangentLine",
    "X",
    "ZERO",
    "decompose",
    "derivative",
    "differential",
    "eval_elementary",
    "eval_poly",
    "increment",
    "intersection_multiplicity",
    "is_tangent",
    "lower_poly",
    "lower_ratfun",
    "parse",
    "parse_rational",
    "polynomial_gcd",
    "quotient_table",
    "ratfun_derivative",
    "remainder_valuation",
    "render",
    "render_rational",
    "secant_slope",
    "tangent_at",
    "taylor_shift",
    "to_decimal",
    "verify_chain",
    "verify_product",
    "verify_quotient",
    "verify_sum",
    "__version__",
]

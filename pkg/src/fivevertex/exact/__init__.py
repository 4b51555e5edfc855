"""Exact arithmetic kernel: rationals, polynomials, rational functions, determinants."""

from .bivariate import BivariatePolynomial, bivar_partial
from .linalg import det_exact, solve_linear
from .polynomial import Polynomial, poly_derivative, poly_gcd
from .ratfunc import RationalFunction, euler_derivative, euler_sequence, ratfun_derivative
from .rational import Rational, as_rational, format_rational, parse_rational, rational_sqrt

__all__ = [
    "BivariatePolynomial",
    "Polynomial",
    "Rational",
    "RationalFunction",
    "as_rational",
    "bivar_partial",
    "det_exact",
    "euler_derivative",
    "euler_sequence",
    "format_rational",
    "parse_rational",
    "poly_derivative",
    "poly_gcd",
    "ratfun_derivative",
    "solve_linear",
    "rational_sqrt",
]

"""Exact scalar, polynomial and matrix arithmetic."""

from nslax.exactalg.linalg import (
    ExactMatrix,
    char_poly,
    determinant,
    kernel_basis,
    rank,
    solve_linear,
    solve_many,
)
from nslax.exactalg.polynomial import (
    ZERO_DEGREE,
    ParamPoly,
    Rational,
    UniPoly,
    format_rational,
    interpolate_homogeneous,
    parse_rational,
    poly_eval,
    poly_gcd,
)
from nslax.exactalg.ratfunc import RationalFunction

__all__ = [
    "ExactMatrix",
    "ParamPoly",
    "Rational",
    "RationalFunction",
    "UniPoly",
    "ZERO_DEGREE",
    "char_poly",
    "determinant",
    "format_rational",
    "interpolate_homogeneous",
    "kernel_basis",
    "parse_rational",
    "poly_eval",
    "poly_gcd",
    "rank",
    "solve_linear",
    "solve_many",
]

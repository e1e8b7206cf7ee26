"""Exact arithmetic: prime fields, dense F_p matrices, polynomials, K[x]/(f)."""

from .field import PrimeField, is_prime, primes_up_to
from .matrix import PrimeFieldMatrix, rank_nullspace, solve_linear
from .poly import (
    IntPoly,
    ModPoly,
    discriminant,
    factor_mod_p,
    format_coeffs,
    is_irreducible,
    poly_gcd,
    rational_roots,
    resultant,
)
from .quotient import ExtensionDomain, NotInvertibleError, QuotientRing, QuotientRingElement, quotient_invert

__all__ = [
    "PrimeField",
    "is_prime",
    "primes_up_to",
    "PrimeFieldMatrix",
    "rank_nullspace",
    "solve_linear",
    "IntPoly",
    "ModPoly",
    "discriminant",
    "factor_mod_p",
    "format_coeffs",
    "is_irreducible",
    "poly_gcd",
    "rational_roots",
    "resultant",
    "ExtensionDomain",
    "NotInvertibleError",
    "QuotientRing",
    "QuotientRingElement",
    "quotient_invert",
]

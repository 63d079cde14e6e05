"""Bundled worked example: seven binary irreducibles and a (7,4,4) code."""

from __future__ import annotations

from cwlattice.code import ConstantWeightCode
from cwlattice.gf import Polynomial, PrimeField
from cwlattice.pool import PolynomialPool

# X^2+X+1, X^3+X+1, X^3+X^2+1, X^4+X+1, X^4+X^3+1, X^5+X^2+1, X^6+X+1
SAMPLE_CONSTITUENTS = (
    (1, 1, 1),
    (1, 1, 0, 1),
    (1, 0, 1, 1),
    (1, 1, 0, 0, 1),
    (1, 0, 0, 1, 1),
    (1, 0, 1, 0, 0, 1),
    (1, 1, 0, 0, 0, 0, 1),
)

SAMPLE_CODEWORDS_744 = (
    (0, 1, 2, 5),
    (0, 1, 3, 4),
    (0, 2, 3, 6),
    (0, 4, 5, 6),
    (1, 2, 4, 6),
    (1, 3, 5, 6),
    (2, 3, 4, 5),
)


def sample_pool() -> PolynomialPool:
    field = PrimeField(2)
    return PolynomialPool([Polynomial(field, c) for c in SAMPLE_CONSTITUENTS])


def sample_code() -> ConstantWeightCode:
    return ConstantWeightCode(7, SAMPLE_CODEWORDS_744)
